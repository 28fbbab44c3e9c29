import pytest

from gradedspectra.groups import FiniteAbelianGroup


def test_elements_and_identity():
    g = FiniteAbelianGroup([2, 3])
    assert len(g) == 6
    assert g.identity == (0, 0)
    assert g.elements[0] == (0, 0)
    assert g.index[(1, 2)] == 5


def test_group_axioms_exhaustive():
    g = FiniteAbelianGroup([4])
    els = list(g)
    for a in els:
        assert g.add(a, g.identity) == a
        assert g.add(a, g.neg(a)) == g.identity
        for b in els:
            assert g.add(a, b) == g.add(b, a)
            for c in els:
                assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))


def test_add_table_matches_add():
    g = FiniteAbelianGroup([2, 2])
    for i, a in enumerate(g.elements):
        for j, b in enumerate(g.elements):
            assert g.elements[g.add_table[i][j]] == g.add(a, b)


def test_trivial_group_default():
    g = FiniteAbelianGroup([])
    assert len(g) == 1


def test_invalid_factor():
    with pytest.raises(ValueError):
        FiniteAbelianGroup([0])


def test_equality_and_hash():
    assert FiniteAbelianGroup([2]) == FiniteAbelianGroup([2])
    assert FiniteAbelianGroup([2]) != FiniteAbelianGroup([3])
    assert hash(FiniteAbelianGroup([2, 2])) == hash(FiniteAbelianGroup([2, 2]))
