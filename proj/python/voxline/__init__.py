"""3D line-segment voxelization toolkit.

Thin re-export of the compiled extension. Points are ``(x, y, z)`` float
triples, voxels are ``(x, y, z)`` int triples, and segments are
``(start, end)`` pairs of point triples.
"""

from ._voxline import (
    BatchPlan,
    batch_preprocess,
    batch_voxelize,
    candidate_voxels,
    chain_length_bounds,
    chains_equivalent,
    compute_mvps,
    effective_item_count,
    gen_arbitrary_batch,
    gen_segment_of_length,
    kernel_work_item,
    make_plan,
    point_line_distance,
    round_point,
    run_batch,
    segment_length,
    voxelize_parametric,
    voxelize_walk,
)

__all__ = [
    "BatchPlan",
    "batch_preprocess",
    "batch_voxelize",
    "candidate_voxels",
    "chain_length_bounds",
    "chains_equivalent",
    "compute_mvps",
    "effective_item_count",
    "gen_arbitrary_batch",
    "gen_segment_of_length",
    "kernel_work_item",
    "make_plan",
    "point_line_distance",
    "round_point",
    "run_batch",
    "segment_length",
    "voxelize_parametric",
    "voxelize_walk",
]
