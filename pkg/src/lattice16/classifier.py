"""Decision pipeline and full-census sweep for lattice states."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from . import dense, lattice, seplp, symmetry, witness

__all__ = [
    "Label",
    "Justification",
    "Classification",
    "CensusRecord",
    "ConsistencyError",
    "classify",
    "census",
    "summary_table",
    "explain",
    "census_to_jsonl",
    "summary_to_csv",
]


class Label(str, Enum):
    NPT_ENTANGLED = "NPT_ENTANGLED"
    PPT_ENTANGLED = "PPT_ENTANGLED"
    SEPARABLE = "SEPARABLE"
    UNKNOWN = "UNKNOWN"


class Justification(str, Enum):
    PROP1A_VIOLATION = "PROP1A_VIOLATION"
    PROP1B_SITE = "PROP1B_SITE"
    PROP3_WITNESS = "PROP3_WITNESS"
    LP_CERTIFICATE = "LP_CERTIFICATE"
    MAXIMALLY_MIXED = "MAXIMALLY_MIXED"
    ISOTROPIC_N15 = "ISOTROPIC_N15"
    NONE = "NONE"


class ConsistencyError(AssertionError):
    """A subset was both witnessed entangled and certified separable."""


@dataclass(frozen=True)
class Classification:
    label: Label
    justification: Justification
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "label": self.label.value,
            "justification": self.justification.value,
            "evidence": self.evidence,
        }


@dataclass(frozen=True)
class CensusRecord:
    canonical: int
    cardinality: int
    orbit_size: int
    kappa: int
    label: Label
    justification: Justification
    evidence: dict

    def to_json(self) -> dict:
        return {
            "canonical": f"0x{self.canonical:04X}",
            "N": self.cardinality,
            "orbit_size": self.orbit_size,
            "kappa": self.kappa,
            "label": self.label.value,
            "justification": self.justification.value,
            "evidence": self.evidence,
        }


def _violating_site(mask: int) -> tuple[int, int]:
    n = lattice.cardinality(mask)
    for a in range(4):
        for b in range(4):
            if 2 * lattice.cross_count(mask, a, b) > n:
                return (a, b)
    raise AssertionError("no violating site on a non-PPT subset")


def classify(
    mask: int,
    numeric_check: bool = False,
    dense_witness_check: bool = True,
) -> Classification:
    """Assign a label with machine-checkable evidence.

    Decision order: maximally mixed, NPT by the cross criterion, the
    N=15 isotropic rule, the k=1 reduction-map witness, the exact LP
    certificate, and finally UNKNOWN.
    """
    n = lattice.cardinality(mask)
    if n == 0:
        raise lattice.EmptySubsetError("no lattice state for the empty subset")
    if n == 16:
        return Classification(Label.SEPARABLE, Justification.MAXIMALLY_MIXED)
    if not lattice.is_ppt(mask):
        site = _violating_site(mask)
        if numeric_check:
            min_eig = float(dense.pt_spectrum(mask)[0])
            assert min_eig < -1e-9, "NPT verdict not confirmed numerically"
        return Classification(
            Label.NPT_ENTANGLED,
            Justification.PROP1A_VIOLATION,
            {"violating_site": list(site)},
        )
    if n == 15:
        return Classification(Label.SEPARABLE, Justification.ISOTROPIC_N15)
    reports = witness.witness_scan(mask, dense_check=dense_witness_check)
    if reports:
        prop1b = lattice.prop1b_entangled(mask)
        evidence = {"witness": reports[0].to_json(), "witness_count": len(reports)}
        if prop1b is not None:
            evidence["prop1b_site"] = list(prop1b)
        return Classification(Label.PPT_ENTANGLED, Justification.PROP3_WITNESS, evidence)
    cert = seplp.decompose(mask)
    if cert is not None:
        return Classification(
            Label.SEPARABLE, Justification.LP_CERTIFICATE, {"certificate": cert.to_json()}
        )
    kz_centers = [
        [mu ^ 2, nu ^ 2]
        for mu in range(4)
        for nu in range(4)
        if lattice.k_matrix(mask)[mu][nu] == 0
    ]
    return Classification(
        Label.UNKNOWN, Justification.NONE, {"kappa_zero_centers": kz_centers}
    )


def _classify_record(args) -> CensusRecord:
    canonical, orbit_size = args
    cls = classify(canonical, dense_witness_check=False)
    if cls.label is Label.PPT_ENTANGLED:
        # Consistency triangle: a witnessed state must never also admit
        # a separability certificate.
        if seplp.decompose(canonical) is not None:
            raise ConsistencyError(
                f"mask 0x{canonical:04X} witnessed entangled and LP-certified"
            )
    return CensusRecord(
        canonical=canonical,
        cardinality=lattice.cardinality(canonical),
        orbit_size=orbit_size,
        kappa=lattice.kappa(canonical),
        label=cls.label,
        justification=cls.justification,
        evidence=cls.evidence,
    )


def census(
    min_n: int = 1, max_n: int = 16, threads: int = 1
) -> list[CensusRecord]:
    """Classify one representative per symmetry orbit, deterministically
    ordered by (cardinality, canonical mask)."""
    canon = symmetry.canonical_map_all()
    orbit_sizes: dict[int, int] = {}
    for mask in range(1, lattice.FULL_MASK + 1):
        orbit_sizes[canon[mask]] = orbit_sizes.get(canon[mask], 0) + 1
    reps = sorted(
        (c, size)
        for c, size in orbit_sizes.items()
        if min_n <= lattice.cardinality(c) <= max_n
    )
    reps.sort(key=lambda cs: (lattice.cardinality(cs[0]), cs[0]))
    if threads > 1:
        import multiprocessing

        with multiprocessing.Pool(threads) as pool:
            records = pool.map(_classify_record, reps)
    else:
        records = [_classify_record(r) for r in reps]
    return records


def summary_table(records: list[CensusRecord]) -> dict[int, dict[str, int]]:
    """Subset counts (orbit-size weighted) per (cardinality, label)."""
    table: dict[int, dict[str, int]] = {
        n: {label.value: 0 for label in Label} for n in range(1, 17)
    }
    for r in records:
        table[r.cardinality][r.label.value] += r.orbit_size
    return table


def census_to_jsonl(records: list[CensusRecord]) -> str:
    return "\n".join(json.dumps(r.to_json(), sort_keys=True) for r in records) + "\n"


def summary_to_csv(records: list[CensusRecord]) -> str:
    table = summary_table(records)
    labels = [label.value for label in Label]
    lines = ["N," + ",".join(labels)]
    for n in range(1, 17):
        lines.append(f"{n}," + ",".join(str(table[n][l]) for l in labels))
    return "\n".join(lines) + "\n"


def explain(mask: int) -> str:
    """Human-readable report: grid, k-matrix, kappa, decision trace."""
    n = lattice.cardinality(mask)
    lines = [
        f"subset {lattice.render_subset(mask, 'hex')}  N={n}",
        lattice.render_subset(mask, "table"),
        "",
    ]
    if n == 0:
        lines.append("empty subset: no lattice state defined")
        return "\n".join(lines)
    k = lattice.k_matrix(mask)
    lines.append("k-matrix (rows mu=0..3, columns nu=0..3):")
    for mu in range(4):
        lines.append("  " + " ".join(str(k[mu][nu]) for nu in range(4)))
    lines.append(f"kappa = {lattice.kappa(mask)}")
    cls = classify(mask)
    lines.append(f"label = {cls.label.value} ({cls.justification.value})")
    if cls.justification is Justification.PROP3_WITNESS:
        w = cls.evidence["witness"]
        lines.append(
            f"witness at (mu,nu)={tuple(w['site'])} value {w['value']:.6f} "
            f"via {w['v']} (center in I: {w['center_in_subset']})"
        )
        if "prop1b_site" in cls.evidence:
            lines.append(f"prop1b site: {tuple(cls.evidence['prop1b_site'])}")
    elif cls.justification is Justification.PROP1A_VIOLATION:
        lines.append(f"PPT violated at site {tuple(cls.evidence['violating_site'])}")
    elif cls.justification is Justification.LP_CERTIFICATE:
        cert = cls.evidence["certificate"]
        terms = ", ".join(f"{w} * {m}" for m, w in cert["weights"])
        lines.append(f"certificate: {terms}")
    elif cls.label is Label.UNKNOWN:
        centers = cls.evidence.get("kappa_zero_centers", [])
        lines.append(
            "undecided: no k=1 witness, LP infeasible over the rank-4 basis"
            + (f"; kappa-zero centers {centers}" if centers else "")
        )
    return "\n".join(lines)
