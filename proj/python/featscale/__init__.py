"""Supervised feature scaling for spectral clustering and classification."""

from ._core import (
    FeatscaleError,
    __version__,
    apply_scaling,
    assemble_pencil,
    build_similarity,
    embed,
    generate_toy,
    kmeans,
    learn_scaling,
    nmi,
    nn1_classify,
    rand_index,
    rect_pencil_eig,
    run_loocv,
    run_pipeline,
    standardize,
    sym_gen_eig,
)

__all__ = [
    "FeatscaleError",
    "__version__",
    "apply_scaling",
    "assemble_pencil",
    "build_similarity",
    "embed",
    "generate_toy",
    "kmeans",
    "learn_scaling",
    "nmi",
    "nn1_classify",
    "rand_index",
    "rect_pencil_eig",
    "run_loocv",
    "run_pipeline",
    "standardize",
    "sym_gen_eig",
]
