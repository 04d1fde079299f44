"""Local-unitary lattice symmetries as a permutation group on L16.

Generators: the index-map involutions i_1, i_2, i_3 applied to either
axis, transpositions of the nonzero labels {1,2,3} on either axis, and
the column/row swap.  The closure is materialized once; its order is
derived, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lattice, pauli

__all__ = [
    "SymmetryElement",
    "OrbitRecord",
    "IDENTITY",
    "generators",
    "group",
    "act",
    "canonical_form",
    "find_mapping",
    "canonical_map_all",
    "verify_generator_numerically",
]


@dataclass(frozen=True)
class SymmetryElement:
    """Action on a site (a, b): swap first (if set), then the per-axis
    permutations: (a, b) -> (col_perm[a'], row_perm[b'])."""

    col_perm: tuple[int, int, int, int]
    row_perm: tuple[int, int, int, int]
    swap_axes: bool = False

    def apply_site(self, alpha: int, beta: int) -> tuple[int, int]:
        if self.swap_axes:
            alpha, beta = beta, alpha
        return self.col_perm[alpha], self.row_perm[beta]

    def compose(self, other: "SymmetryElement") -> "SymmetryElement":
        """self after other."""
        qc, qr = self.col_perm, self.row_perm
        pc, pr = other.col_perm, other.row_perm
        if not self.swap_axes:
            return SymmetryElement(
                tuple(qc[pc[i]] for i in range(4)),
                tuple(qr[pr[i]] for i in range(4)),
                other.swap_axes,
            )
        return SymmetryElement(
            tuple(qc[pr[i]] for i in range(4)),
            tuple(qr[pc[i]] for i in range(4)),
            not other.swap_axes,
        )

    def inverse(self) -> "SymmetryElement":
        inv_c = [0] * 4
        inv_r = [0] * 4
        for i in range(4):
            inv_c[self.col_perm[i]] = i
            inv_r[self.row_perm[i]] = i
        if not self.swap_axes:
            return SymmetryElement(tuple(inv_c), tuple(inv_r), False)
        return SymmetryElement(tuple(inv_r), tuple(inv_c), True)

    def site_map(self) -> tuple[int, ...]:
        """Bit-position image table: site 4a+b -> 4a'+b'."""
        out = []
        for a in range(4):
            for b in range(4):
                x, y = self.apply_site(a, b)
                out.append(4 * x + y)
        return tuple(out)


@dataclass(frozen=True)
class OrbitRecord:
    canonical: int
    orbit_size: int
    stabilizer_order: int

    def to_json(self) -> dict:
        return {
            "canonical": f"0x{self.canonical:04X}",
            "orbit_size": self.orbit_size,
            "stabilizer_order": self.stabilizer_order,
        }


_ID_PERM = (0, 1, 2, 3)
IDENTITY = SymmetryElement(_ID_PERM, _ID_PERM, False)


def generators() -> list[SymmetryElement]:
    gens = []
    for g in (1, 2, 3):
        inv = pauli.index_map(g)
        gens.append(SymmetryElement(inv, _ID_PERM, False))
        gens.append(SymmetryElement(_ID_PERM, inv, False))
    for i, j in ((1, 2), (1, 3), (2, 3)):
        perm = list(_ID_PERM)
        perm[i], perm[j] = perm[j], perm[i]
        gens.append(SymmetryElement(tuple(perm), _ID_PERM, False))
        gens.append(SymmetryElement(_ID_PERM, tuple(perm), False))
    gens.append(SymmetryElement(_ID_PERM, _ID_PERM, True))
    return gens


_GROUP = None
_SITE_MAPS = None


def group() -> list[SymmetryElement]:
    """The full closure of the generators (derived order: 1152)."""
    global _GROUP
    if _GROUP is None:
        gens = generators()
        seen = {IDENTITY}
        frontier = [IDENTITY]
        while frontier:
            nxt = []
            for el in frontier:
                for g in gens:
                    cand = g.compose(el)
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        _GROUP = sorted(
            seen, key=lambda e: (e.swap_axes, e.col_perm, e.row_perm)
        )
    return _GROUP


def _site_maps() -> list[tuple[int, ...]]:
    global _SITE_MAPS
    if _SITE_MAPS is None:
        _SITE_MAPS = [el.site_map() for el in group()]
    return _SITE_MAPS


def act(g: SymmetryElement, mask: int) -> int:
    out = 0
    table = g.site_map()
    for pos in range(16):
        if mask >> pos & 1:
            out |= 1 << table[pos]
    return out


def _act_table(table: tuple[int, ...], mask: int) -> int:
    out = 0
    for pos in range(16):
        if mask >> pos & 1:
            out |= 1 << table[pos]
    return out


def canonical_form(mask: int) -> OrbitRecord:
    """Lexicographically minimal mask in the orbit, with orbit and
    stabilizer sizes (their product is the group order)."""
    images = {_act_table(t, mask) for t in _site_maps()}
    order = len(group())
    return OrbitRecord(
        canonical=min(images),
        orbit_size=len(images),
        stabilizer_order=order // len(images),
    )


def find_mapping(source: int, target: int) -> SymmetryElement:
    """Some group element g with act(g, source) == target."""
    for el, table in zip(group(), _site_maps()):
        if _act_table(table, source) == target:
            return el
    raise ValueError("masks are not in the same orbit")


def canonical_map_all() -> list[int]:
    """canonical[mask] for every mask in [0, 0xFFFF], via generator BFS."""
    gen_tables = [g.site_map() for g in generators()]
    canon = [-1] * (lattice.FULL_MASK + 1)
    for start in range(lattice.FULL_MASK + 1):
        if canon[start] >= 0:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for m in frontier:
                for t in gen_tables:
                    im = _act_table(t, m)
                    if im not in orbit:
                        orbit.add(im)
                        nxt.append(im)
            frontier = nxt
        rep = min(orbit)
        for m in orbit:
            canon[m] = rep
    return canon


def _local_unitary_for(g: SymmetryElement) -> np.ndarray:
    """A concrete 16x16 local unitary realizing a published generator."""
    if g.swap_axes:
        # Both parties flip their two qubits.
        f4 = np.zeros((4, 4))
        for a in range(2):
            for b in range(2):
                f4[2 * b + a, 2 * a + b] = 1.0
        return np.kron(f4, f4)
    if g.row_perm == _ID_PERM:
        perm, on_columns = g.col_perm, True
    elif g.col_perm == _ID_PERM:
        perm, on_columns = g.row_perm, False
    else:
        raise ValueError("not a single published generator")
    for gamma in (1, 2, 3):
        if perm == pauli.index_map(gamma):
            # Conjugation by I (x) sigma_{gamma,0} (or sigma_{0,gamma}).
            s = (
                pauli._sigma_pair(gamma, 0)
                if on_columns
                else pauli._sigma_pair(0, gamma)
            )
            return np.kron(np.eye(4), s)
    moved = [i for i in range(4) if perm[i] != i]
    if len(moved) == 2 and 0 not in moved:
        i, j = moved
        u1 = (pauli.pauli(i) + pauli.pauli(j)) / np.sqrt(2.0)
        u = np.kron(u1, np.eye(2)) if on_columns else np.kron(np.eye(2), u1)
        # First party gets U, second gets U*, per the rotation argument.
        return np.kron(u, u.conj())
    raise ValueError("not a single published generator")


def verify_generator_numerically(g: SymmetryElement, tol: float = 1e-10) -> bool:
    """Check that conjugating every projector by the generator's concrete
    local unitary lands on the projector at the permuted site."""
    w = _local_unitary_for(g)
    for a in range(4):
        for b in range(4):
            image = w @ pauli._projector(a, b) @ w.conj().T
            x, y = g.apply_site(a, b)
            if np.abs(image - pauli._projector(x, y)).max() > tol:
                return False
    return True
