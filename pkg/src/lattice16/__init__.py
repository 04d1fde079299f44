"""Lattice states of a bipartite two-ququart system: construction,
PPT combinatorics, reduction-map witnesses, symmetry orbits and exact
separability certificates."""

from .classifier import Classification, Justification, Label, census, classify, explain
from .lattice import (
    FULL_MASK,
    is_ppt,
    k_matrix,
    kappa,
    parse_subset,
    prop1b_entangled,
    render_subset,
)
from .seplp import decompose, verify_certificate
from .symmetry import act, canonical_form, generators
from .witness import witness_scan

__all__ = [
    "Classification",
    "Justification",
    "Label",
    "FULL_MASK",
    "census",
    "classify",
    "explain",
    "is_ppt",
    "k_matrix",
    "kappa",
    "parse_subset",
    "prop1b_entangled",
    "render_subset",
    "decompose",
    "verify_certificate",
    "act",
    "canonical_form",
    "generators",
    "witness_scan",
]
