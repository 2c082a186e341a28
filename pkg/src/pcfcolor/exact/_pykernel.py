"""Pure-Python backtracking kernel (reference twin of ``_kernel.pyx``).

State per vertex ``w``: ``cnt[w][c]`` neighbors of ``w`` colored ``c``,
``unc[w]`` uncolored neighbors, and ``good[w]`` the number of colors that
currently witness the neighborhood condition (count exactly 1 for CF/PCF,
odd count for ODD). A vertex whose neighborhood is fully colored with
``good == 0`` kills the branch.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence

PROPER, ODD, CF, PCF = 0, 1, 2, 3


def search(
    adj: Sequence[Sequence[int]], order: Sequence[int], k: int, code: int
) -> tuple[list[int] | None, int]:
    n = len(adj)
    if n == 0:
        return [], 0
    if k <= 0:
        return None, 0
    proper = code != CF
    odd = code == ODD
    watch = code != PROPER
    col = [0] * n
    cnt = [[0] * (k + 1) for _ in range(n)]
    unc = [len(a) for a in adj]
    good = [0] * n
    nodes = 0

    def rec(i: int, maxused: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        v = order[i]
        nbrs = adj[v]
        row_v = cnt[v]
        top = maxused + 1 if maxused < k else k
        for c in range(1, top + 1):
            if proper and row_v[c]:
                continue
            nodes += 1
            col[v] = c
            alive = True
            for w in nbrs:
                row = cnt[w]
                x = row[c]
                row[c] = x + 1
                unc[w] -= 1
                if odd:
                    good[w] += -1 if x & 1 else 1
                elif x == 0:
                    good[w] += 1
                elif x == 1:
                    good[w] -= 1
                if watch and unc[w] == 0 and good[w] == 0:
                    alive = False
            if alive and rec(i + 1, c if c > maxused else maxused):
                return True
            for w in nbrs:
                row = cnt[w]
                x = row[c] - 1
                row[c] = x
                unc[w] += 1
                if odd:
                    good[w] += 1 if x & 1 else -1
                elif x == 0:
                    good[w] -= 1
                elif x == 1:
                    good[w] += 1
            col[v] = 0
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = rec(0, 0)
    finally:
        sys.setrecursionlimit(limit)
    return (col if found else None), nodes
