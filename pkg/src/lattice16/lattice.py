"""Pure combinatorics on the 4x4 lattice of Pauli-pair labels.

A subset I of the 16 sites is a 16-bit mask with the bit for site
(alpha, beta) at position 4*alpha + beta.  Columns are indexed by alpha,
rows by beta.  Grid strings list rows top-down from beta=3 to beta=0,
matching the orientation used throughout the accompanying figures.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "FULL_MASK",
    "EmptySubsetError",
    "SubsetParseError",
    "site_bit",
    "sites",
    "cardinality",
    "column_counts",
    "row_counts",
    "cross_count",
    "k_matrix",
    "kappa",
    "is_ppt",
    "prop1b_entangled",
    "diag_state_is_ppt",
    "validate_probability_table",
    "parse_subset",
    "render_subset",
]

FULL_MASK = 0xFFFF


class EmptySubsetError(ValueError):
    """Raised where an operation needs a nonempty subset (no state is
    defined for the empty one)."""


class SubsetParseError(ValueError):
    """Malformed textual subset description."""


def site_bit(alpha: int, beta: int) -> int:
    return 1 << (4 * alpha + beta)


def sites(mask: int) -> list[tuple[int, int]]:
    """Sites of the subset, ordered by bit position."""
    return [(a, b) for a in range(4) for b in range(4) if mask >> (4 * a + b) & 1]


def cardinality(mask: int) -> int:
    return bin(mask & FULL_MASK).count("1")


def column_counts(mask: int) -> list[int]:
    return [bin(mask >> (4 * a) & 0xF).count("1") for a in range(4)]


def row_counts(mask: int) -> list[int]:
    return [sum(mask >> (4 * a + b) & 1 for a in range(4)) for b in range(4)]


def cross_count(mask: int, alpha: int, beta: int) -> int:
    """Points of I on the column/row cross through (alpha, beta),
    excluding (alpha, beta) itself."""
    col = bin(mask >> (4 * alpha) & 0xF).count("1")
    row = sum(mask >> (4 * a + beta) & 1 for a in range(4))
    return col + row - 2 * (mask >> (4 * alpha + beta) & 1)


def k_matrix(mask: int) -> list[list[int]]:
    """The 4x4 integer table k[mu][nu] driving the partial-transpose
    spectrum: the cross count through the shifted site (mu+2, nu+2)."""
    cols = column_counts(mask)
    rows = row_counts(mask)
    k = [[0] * 4 for _ in range(4)]
    for mu in range(4):
        a = mu ^ 2
        for nu in range(4):
            b = nu ^ 2
            k[mu][nu] = cols[a] + rows[b] - 2 * (mask >> (4 * a + b) & 1)
    return k


def kappa(mask: int) -> int:
    """Minimum entry of the k-matrix."""
    return min(min(r) for r in k_matrix(mask))


def is_ppt(mask: int) -> bool:
    """PPT iff every cross count is at most N/2 (exact integer test)."""
    n = cardinality(mask)
    if n == 0:
        raise EmptySubsetError("no lattice state for the empty subset")
    return all(
        2 * cross_count(mask, a, b) <= n for a in range(4) for b in range(4)
    )


def prop1b_entangled(mask: int) -> tuple[int, int] | None:
    """A site (alpha, beta) outside I whose cross meets I in exactly one
    point, if any; such a site certifies entanglement of a PPT state."""
    if not is_ppt(mask):
        raise ValueError("prop1b test is only meaningful for PPT subsets")
    for a in range(4):
        for b in range(4):
            if mask >> (4 * a + b) & 1:
                continue
            if cross_count(mask, a, b) == 1:
                return (a, b)
    return None


def validate_probability_table(pi) -> list[list[Fraction]]:
    """Coerce a 4x4 table to exact nonnegative fractions summing to 1."""
    table = [[Fraction(pi[a][b]) for b in range(4)] for a in range(4)]
    if any(x < 0 for r in table for x in r):
        raise ValueError("probability table has a negative entry")
    if sum(x for r in table for x in r) != 1:
        raise ValueError("probability table does not sum to 1")
    return table


def diag_state_is_ppt(pi) -> bool:
    """Exact PPT test for a diagonal-in-the-projector-basis state with
    site weights pi[alpha][beta]."""
    table = validate_probability_table(pi)
    half = Fraction(1, 2)
    for a in range(4):
        for b in range(4):
            cross = sum(table[a][d] for d in range(4) if d != b) + sum(
                table[g][b] for g in range(4) if g != a
            )
            if cross > half:
                return False
    return True


def parse_subset(text: str) -> int:
    """Parse a subset from grid form "r3/r2/r1/r0" (rows beta=3 first,
    'X' marks a site), pair-list form "a,b;a,b;...", or hex "0xNNNN"."""
    text = text.strip()
    if not text:
        raise SubsetParseError("empty subset description")
    if text.lower().startswith("0x"):
        try:
            mask = int(text, 16)
        except ValueError as exc:
            raise SubsetParseError(f"bad hex mask {text!r}") from exc
        if not 0 <= mask <= FULL_MASK:
            raise SubsetParseError(f"hex mask {text!r} out of range")
        return mask
    if "/" in text:
        rows = text.split("/")
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise SubsetParseError("grid form needs 4 rows of 4 characters")
        mask = 0
        for j, r in enumerate(rows):
            beta = 3 - j
            for alpha, ch in enumerate(r):
                if ch == "X":
                    mask |= site_bit(alpha, beta)
                elif ch != ".":
                    raise SubsetParseError(
                        f"bad character {ch!r} at row {beta}, column {alpha}"
                    )
        return mask
    mask = 0
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise SubsetParseError(f"bad pair {chunk!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise SubsetParseError(f"bad pair {chunk!r}") from exc
        if not (0 <= a <= 3 and 0 <= b <= 3):
            raise SubsetParseError(f"pair {chunk!r} out of range")
        bit = site_bit(a, b)
        if mask & bit:
            raise SubsetParseError(f"duplicate pair {chunk!r}")
        mask |= bit
    return mask


def render_subset(mask: int, form: str = "grid") -> str:
    """Render a subset as "grid", "pairs", "hex" or a labeled "table"."""
    mask &= FULL_MASK
    if form == "hex":
        return f"0x{mask:04X}"
    if form == "pairs":
        return ";".join(f"{a},{b}" for a, b in sites(mask))
    rows = []
    for beta in range(3, -1, -1):
        rows.append(
            "".join("X" if mask >> (4 * a + beta) & 1 else "." for a in range(4))
        )
    if form == "grid":
        return "/".join(rows)
    if form == "table":
        lines = [f"{beta} | {' '.join(rows[3 - beta])}" for beta in range(3, -1, -1)]
        lines.append("  +--------")
        lines.append("    0 1 2 3")
        return "\n".join(lines)
    raise ValueError(f"unknown form {form!r}")
