"""Exact homology jumping loci for toric complexes, finitely presented
groups, and right-angled Artin groups."""

from ._core import (
    Graph,
    GroupPresentation,
    SimplicialComplex,
    alexander_matrix,
    aomoto_betti,
    artin_kernel_sigma1_bound,
    artin_kernel_v11,
    bestvina_brady_predicates,
    charvar,
    charvar1_member,
    cyclic_cover_finite,
    dwyer_fried_toric,
    flag_complex,
    fox_derivative,
    reduced_homology,
    resonance,
    sigma1_upper_bound,
    sigma_describe,
    sigma_member,
    tau1,
)

__all__ = [
    "Graph",
    "GroupPresentation",
    "SimplicialComplex",
    "alexander_matrix",
    "aomoto_betti",
    "artin_kernel_sigma1_bound",
    "artin_kernel_v11",
    "bestvina_brady_predicates",
    "charvar",
    "charvar1_member",
    "cyclic_cover_finite",
    "dwyer_fried_toric",
    "flag_complex",
    "fox_derivative",
    "reduced_homology",
    "resonance",
    "sigma1_upper_bound",
    "sigma_describe",
    "sigma_member",
    "tau1",
]
