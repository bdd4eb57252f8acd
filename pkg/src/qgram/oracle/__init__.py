"""Brute-force combinatorial references, independent of the grammar engine."""

from .andre import (
    BinaryTree,
    andre_perm_poly,
    andre_perms,
    andre_tree_poly,
    andre_trees,
    increasing_trees,
    is_andre_perm,
    is_andre_tree,
    psi_tree,
    tree_inv,
    tree_leaf_deg1,
    tree_word,
)
from .perms import (
    PermStats,
    cycles,
    eulerian_poly,
    perm_stats,
    psi_cycle_map,
    right_to_left_minima,
    roselle_blocks,
    roselle_labeling,
    roselle_poly,
)
from .sequences import SEQUENCE_NAMES, euler, fibonacci, motzkin, sequences

__all__ = [
    "BinaryTree",
    "PermStats",
    "SEQUENCE_NAMES",
    "andre_perm_poly",
    "andre_perms",
    "andre_tree_poly",
    "andre_trees",
    "cycles",
    "euler",
    "eulerian_poly",
    "fibonacci",
    "increasing_trees",
    "is_andre_perm",
    "is_andre_tree",
    "motzkin",
    "perm_stats",
    "psi_cycle_map",
    "psi_tree",
    "right_to_left_minima",
    "roselle_blocks",
    "roselle_labeling",
    "roselle_poly",
    "sequences",
    "tree_inv",
    "tree_leaf_deg1",
    "tree_word",
]
