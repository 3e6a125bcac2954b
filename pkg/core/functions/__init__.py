"""
Core Functions Module for the Network Dictionary Toolkit

Stateless helpers: graph I/O and generators, sampling kernels, patches,
factorization, baselines and metrics.
"""

# Import all utility functions for easy access
from .utils import (
    log_error, log_warning, log_info, log_debug, set_verbose,
    ensure_directory_exists, atomic_write, resolve_seed, make_rng
)
from .graph_utils import (
    generate, corrupt, load_edge_list, save_edge_list, structural_stats,
    pairs_within_distance, uniform_spanning_tree, bipartite_coloring
)
from .sampling_utils import (
    pivot_update, glauber_update, injective_step, rejection_init,
    count_walks, enumerate_homomorphisms, target_distribution, total_variation
)
from .patch_utils import (
    extract_patch, patch_matrix, vectorize, reshape,
    on_chain_mask, off_chain_project, thin_on_chain
)
from .factorization import sparse_code, dictionary_update, onmf_step
from .baselines import baseline_scores
from .classification_metrics import roc_auc, classify_with_split
from .reconstruction_metrics import (
    jaccard_metrics, weighted_jaccard_distance, limiting_reconstruction,
    mesoscale_error, bound_report
)

__all__ = [
    # Utils
    'log_error', 'log_warning', 'log_info', 'log_debug', 'set_verbose',
    'ensure_directory_exists', 'atomic_write', 'resolve_seed', 'make_rng',

    # Graphs
    'generate', 'corrupt', 'load_edge_list', 'save_edge_list',
    'structural_stats', 'pairs_within_distance', 'uniform_spanning_tree',
    'bipartite_coloring',

    # Sampling
    'pivot_update', 'glauber_update', 'injective_step', 'rejection_init',
    'count_walks', 'enumerate_homomorphisms', 'target_distribution',
    'total_variation',

    # Patches and factorization
    'extract_patch', 'patch_matrix', 'vectorize', 'reshape', 'on_chain_mask',
    'off_chain_project', 'thin_on_chain', 'sparse_code', 'dictionary_update',
    'onmf_step',

    # Metrics
    'baseline_scores', 'roc_auc', 'classify_with_split', 'jaccard_metrics',
    'weighted_jaccard_distance', 'limiting_reconstruction', 'mesoscale_error',
    'bound_report',
]
