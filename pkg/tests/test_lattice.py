import random
from fractions import Fraction

import pytest

from lattice16 import lattice

random.seed(7)


def test_site_bit_layout():
    assert lattice.site_bit(0, 0) == 1
    assert lattice.site_bit(0, 3) == 8
    assert lattice.site_bit(3, 3) == 1 << 15


def test_sites_and_cardinality():
    mask = lattice.site_bit(1, 2) | lattice.site_bit(3, 0)
    assert lattice.sites(mask) == [(1, 2), (3, 0)]
    assert lattice.cardinality(mask) == 2
    assert lattice.cardinality(lattice.FULL_MASK) == 16


def test_counts():
    mask = lattice.parse_subset("X.../XX../X.X./....")
    assert lattice.column_counts(mask) == [3, 1, 1, 0]
    assert lattice.row_counts(mask) == [0, 2, 2, 1]


def test_cross_count_brute_force():
    for _ in range(300):
        mask = random.randrange(1, lattice.FULL_MASK + 1)
        for a in range(4):
            for b in range(4):
                expected = sum(
                    mask >> (4 * a + d) & 1 for d in range(4) if d != b
                ) + sum(mask >> (4 * g + b) & 1 for g in range(4) if g != a)
                assert lattice.cross_count(mask, a, b) == expected


def test_k_matrix_is_shifted_cross():
    for _ in range(300):
        mask = random.randrange(1, lattice.FULL_MASK + 1)
        k = lattice.k_matrix(mask)
        for mu in range(4):
            for nu in range(4):
                assert k[mu][nu] == lattice.cross_count(mask, mu ^ 2, nu ^ 2)
        assert lattice.kappa(mask) == min(min(r) for r in k)


def test_k_matrix_entry_sum():
    # Each entry is c_a + r_b - 2*chi(a,b); summing over all 16 entries
    # gives 4N + 4N - 2N = 6N.
    for _ in range(100):
        mask = random.randrange(1, lattice.FULL_MASK + 1)
        total = sum(sum(r) for r in lattice.k_matrix(mask))
        assert total == 6 * lattice.cardinality(mask)


def test_is_ppt_empty_raises():
    with pytest.raises(lattice.EmptySubsetError):
        lattice.is_ppt(0)


def test_is_ppt_examples(grids):
    assert lattice.is_ppt(grids["ex1_left_n8"])
    assert lattice.is_ppt(grids["rho9"])
    # A full column of 4 with nothing else: cross count 3 > 4/2.
    assert not lattice.is_ppt(0xF)
    assert lattice.is_ppt(lattice.FULL_MASK)


def test_is_ppt_matches_kappa_rule():
    # PPT iff the largest k-entry is at most N/2, same integers either way.
    for mask in range(1, lattice.FULL_MASK + 1, 17):
        n = lattice.cardinality(mask)
        kmax = max(max(r) for r in lattice.k_matrix(mask))
        assert lattice.is_ppt(mask) == (2 * kmax <= n)


def test_prop1b(grids):
    assert lattice.prop1b_entangled(grids["ex1_left_n8"]) is not None
    assert lattice.prop1b_entangled(grids["ex1_right_n10"]) is None
    assert lattice.prop1b_entangled(grids["rho9"]) is None
    with pytest.raises(ValueError):
        lattice.prop1b_entangled(0xF)


def test_prop1b_site_is_outside_with_unit_cross(grids):
    for name in ("ex1_left_n8", "ex2_left_n8", "ex3_left_n10"):
        mask = grids[name]
        site = lattice.prop1b_entangled(mask)
        assert site is not None
        a, b = site
        assert not mask >> (4 * a + b) & 1
        assert lattice.cross_count(mask, a, b) == 1


def test_diag_state_is_ppt_uniform_matches():
    for _ in range(100):
        mask = random.randrange(1, lattice.FULL_MASK + 1)
        n = lattice.cardinality(mask)
        pi = [
            [
                Fraction(1, n) if mask >> (4 * a + b) & 1 else Fraction(0)
                for b in range(4)
            ]
            for a in range(4)
        ]
        assert lattice.diag_state_is_ppt(pi) == lattice.is_ppt(mask)


def test_diag_state_nonuniform():
    # All weight on one site: a maximally entangled pure state, NPT
    # (the cross through any neighbor on its row or column carries 1).
    pi = [[0] * 4 for _ in range(4)]
    pi[1][2] = 1
    assert not lattice.diag_state_is_ppt(pi)
    # Full support, one site slightly heavy: the worst cross (through a
    # neighbor of the heavy site) carries 1/10 + 5 * 3/50 = 2/5 < 1/2.
    pi = [[Fraction(3, 50)] * 4 for _ in range(4)]
    pi[1][2] = Fraction(1, 10)
    assert lattice.diag_state_is_ppt(pi)
    # Tilt harder and the same cross reaches 3/10 + 5 * 7/150 = 8/15.
    pi = [[Fraction(7, 150)] * 4 for _ in range(4)]
    pi[1][2] = Fraction(3, 10)
    assert not lattice.diag_state_is_ppt(pi)


def test_validate_probability_table_errors():
    with pytest.raises(ValueError):
        lattice.validate_probability_table([[Fraction(1, 2)] * 4] * 4)
    bad = [[0] * 4 for _ in range(4)]
    bad[0][0] = 2
    bad[0][1] = -1
    with pytest.raises(ValueError):
        lattice.validate_probability_table(bad)


def test_parse_grid(grids):
    assert lattice.parse_subset("..../..../..../X...") == lattice.site_bit(0, 0)
    assert lattice.parse_subset("...X/..../..../....") == lattice.site_bit(3, 3)
    assert grids["rho6"] == (
        lattice.site_bit(1, 1) | lattice.site_bit(1, 2) | lattice.site_bit(1, 3)
        | lattice.site_bit(2, 1) | lattice.site_bit(2, 2) | lattice.site_bit(2, 3)
    )


def test_parse_pairs_and_hex():
    assert lattice.parse_subset("0,0;3,3") == (1 | 1 << 15)
    assert lattice.parse_subset("0x8001") == 0x8001
    assert lattice.parse_subset("0XFFFF") == lattice.FULL_MASK


def test_parse_errors():
    for bad in ("", "..../....", "..../..../..../...Y", "0x10000", "0xZZ",
                "4,0", "0,0;0,0", "1;2", "a,b"):
        with pytest.raises(lattice.SubsetParseError):
            lattice.parse_subset(bad)


def test_render_round_trip():
    for _ in range(200):
        mask = random.randrange(1, lattice.FULL_MASK + 1)
        for form in ("grid", "pairs", "hex"):
            assert lattice.parse_subset(lattice.render_subset(mask, form)) == mask


def test_render_table_and_unknown_form():
    table = lattice.render_subset(lattice.site_bit(0, 0), "table")
    assert "0 | X . . ." in table
    assert table.endswith("0 1 2 3")
    with pytest.raises(ValueError):
        lattice.render_subset(1, "braille")
