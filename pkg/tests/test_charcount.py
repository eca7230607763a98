import itertools

import pytest

from csnorm.charcount import (
    CONTRIBUTION,
    TriangleGroup,
    dihedral_count,
    psl2_irreducible_count,
    psl2_reducible_count,
    psl2_total_count,
    seifert_budget,
    sl2_lift_count,
    total_minimal_norm,
)
from csnorm.errors import ConeOrderError, DeterminantError
from oracles import octahedral_character_counts, reducible_by_diagonal_images


@pytest.mark.parametrize("T, n", [((3, 3, 4), 5), ((2, 5, 7), 7), ((2, 3, 3), 3)])
def test_total_count(T, n):
    assert psl2_total_count(T) == n


@pytest.mark.parametrize("T, n", [((3, 3, 4), 2), ((2, 5, 7), 1), ((3, 3, 6), 5)])
def test_reducible_count(T, n):
    assert psl2_reducible_count(T) == n


@pytest.mark.parametrize("T, n", [((3, 3, 4), 3), ((2, 5, 7), 6), ((3, 3, 6), 4)])
def test_irreducible_count(T, n):
    assert psl2_irreducible_count(T) == n


def test_sl2_lift_and_dihedral():
    assert [sl2_lift_count(n) for n in (3, 6, 0)] == [6, 12, 0]
    assert [dihedral_count(d) for d in (9, 1, 3)] == [4, 0, 1]


@pytest.mark.parametrize("bad", [0, -3, 4, 10])
def test_dihedral_rejects_even_or_nonpositive(bad):
    with pytest.raises(DeterminantError):
        dihedral_count(bad)


@pytest.mark.parametrize("T, S", [((3, 3, 4), 20), ((3, 3, 6), 24), ((3, 3, 3), 12)])
def test_total_minimal_norm(T, S):
    b = total_minimal_norm(T, 9)
    assert b.total_S == S
    assert b.total_S == CONTRIBUTION * (b.dihedral_sl2 + b.triangle_irr_sl2)


def test_seifert_budget():
    assert seifert_budget((2, 5, 7)) == 24
    assert seifert_budget((2, 3, 3)) == 4
    # Klein four group: 5 characters, 4 reducible (cross-checked below)
    assert seifert_budget((2, 2, 2)) == 4


@pytest.mark.parametrize("bad", [(1, 3, 4), (3, 0, 2), (2, 2)])
def test_cone_orders_validated(bad):
    with pytest.raises(ConeOrderError):
        TriangleGroup.of(bad)


def test_triangle_group_sorted():
    assert TriangleGroup(4, 3, 3).as_tuple() == (3, 3, 4)


@pytest.mark.parametrize(
    "T", [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 3, 3), (2, 3, 4), (3, 3, 3)]
)
def test_counts_match_octahedral_enumeration(T):
    total, reducible = octahedral_character_counts(*T)
    assert psl2_total_count(T) == total
    assert psl2_reducible_count(T) == reducible


def test_reducible_matches_diagonal_images_up_to_12():
    for T in itertools.product(range(2, 13), repeat=3):
        assert psl2_reducible_count(T) == reducible_by_diagonal_images(*T), T


def test_irreducible_nonnegative_exhaustive():
    for T in itertools.combinations_with_replacement(range(2, 51), 3):
        assert psl2_irreducible_count(T) >= 0


def test_budget_parities():
    for T in itertools.combinations_with_replacement(range(2, 16), 3):
        assert seifert_budget(T) % 4 == 0
        for det in (1, 3, 9, 25):
            assert total_minimal_norm(T, det).total_S % 2 == 0
