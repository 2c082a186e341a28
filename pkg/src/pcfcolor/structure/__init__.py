from .blocks import BlockDecomposition, blocks, is_in_F
from .certificates import (
    EliminationCertificate,
    RemoveEdgePair,
    RemoveLowVertex,
    ab_certificate,
    h_edge_certificate,
    replay,
)
from .classes import find_claw, is_claw_free, is_peo, lexbfs, lexbfs_peo
from .density import mad, max_density
from .domination import is_total_dominating, total_domination_number
from .threads import (
    ThreadDescriptor,
    big_vertex_distances,
    degree_two_runs,
    find_thread,
    is_thread,
    thread_incidence_matching,
)

__all__ = [
    "BlockDecomposition",
    "EliminationCertificate",
    "RemoveEdgePair",
    "RemoveLowVertex",
    "ThreadDescriptor",
    "ab_certificate",
    "big_vertex_distances",
    "blocks",
    "degree_two_runs",
    "find_claw",
    "find_thread",
    "h_edge_certificate",
    "is_claw_free",
    "is_in_F",
    "is_peo",
    "is_thread",
    "is_total_dominating",
    "lexbfs",
    "lexbfs_peo",
    "mad",
    "max_density",
    "replay",
    "thread_incidence_matching",
    "total_domination_number",
]
