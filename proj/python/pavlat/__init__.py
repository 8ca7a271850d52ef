"""Exact lattice models of polarized abelian varieties."""

from ._core import (
    PolarizedLattice,
    bigonal,
    census_count,
    census_oracle,
    degree_ledger,
    demo,
    dual,
    dual_type,
    kernel_order,
    kernel_structure,
    moduli_dimensions,
    multiplication_obstruction,
    pairing_q,
    paper_tower,
    prym_duality,
    prym_numerics,
    quotient_doubled,
    random_polarized,
    random_tower,
    rescale,
    standard_polarized,
    standard_principal,
    tower_genera,
    verify_dual_quotient,
    verify_lemma_ker,
    verify_pullback,
)

__all__ = [
    "PolarizedLattice",
    "bigonal",
    "census_count",
    "census_oracle",
    "degree_ledger",
    "demo",
    "dual",
    "dual_type",
    "kernel_order",
    "kernel_structure",
    "moduli_dimensions",
    "multiplication_obstruction",
    "pairing_q",
    "paper_tower",
    "prym_duality",
    "prym_numerics",
    "quotient_doubled",
    "random_polarized",
    "random_tower",
    "rescale",
    "standard_polarized",
    "standard_principal",
    "tower_genera",
    "verify_dual_quotient",
    "verify_lemma_ker",
    "verify_pullback",
]
