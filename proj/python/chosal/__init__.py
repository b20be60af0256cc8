"""Saliency maps from convex hull overlap and global contrast cues."""

from chosal._core import (
    __version__,
    compute_maps,
    compute_saliency,
    convex_hull,
    default_config,
    f_measure,
    pr_curve,
    rgb_to_lab,
    segment,
)

__all__ = [
    "__version__",
    "compute_maps",
    "compute_saliency",
    "convex_hull",
    "default_config",
    "f_measure",
    "pr_curve",
    "rgb_to_lab",
    "segment",
]
