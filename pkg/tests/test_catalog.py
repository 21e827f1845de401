import pytest

import oracles
from taucat import catalog
from taucat.category import build_category
from taucat.errors import InvalidInput, SizeBound
from taucat.lattice import completely_join_irreducibles, is_semidistributive, lattice_isomorphic


def catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)


def test_products_and_booleans():
    assert lattice_isomorphic(catalog.make_product(catalog.make_chain(2), catalog.make_chain(2)),
                              catalog.make_boolean(2)) is not None
    B3 = catalog.make_boolean(3)
    assert B3.size == 8 and len(B3.upper_covers[B3.bottom]) == 3
    P = catalog.make_product(catalog.make_pentagon(), catalog.make_chain(2))
    assert P.size == 10


def test_pentagon_entry():
    e = catalog.get("pentagon")
    assert len(build_category(e.lattice).objects) == 5
    assert e.lattice.label(3, 4) == 1
    assert is_semidistributive(e.lattice)[0]


@pytest.mark.parametrize("n", range(1, 7))
def test_tamari_sizes(n):
    L = catalog.make_tamari(n)
    assert L.size == catalan(n)


def test_tamari_small():
    assert lattice_isomorphic(catalog.make_tamari(3), catalog.make_pentagon()) is not None
    assert lattice_isomorphic(catalog.make_tamari(2), catalog.make_chain(2)) is not None
    T4 = catalog.make_tamari(4)
    assert T4.size == 14 and is_semidistributive(T4)[0]


def test_weak_order():
    assert lattice_isomorphic(catalog.make_weak_order(2), catalog.make_chain(2)) is not None
    W3 = catalog.make_weak_order(3)
    assert W3.size == 6 and is_semidistributive(W3)[0]
    assert all(len(W3.upper_covers[x]) <= 2 for x in range(6))
    assert catalog.make_weak_order(4).size == 24


def test_weak_order_is_inversion_order():
    import itertools
    W = catalog.make_weak_order(4)

    def inversions(word):
        w = tuple(int(c) for c in word)
        return {(w[j], w[i]) for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j]}

    for x in range(W.size):
        for y in range(W.size):
            assert W.leq(x, y) == (inversions(W.display(x)) <= inversions(W.display(y)))


def test_m3_control():
    e = catalog.get("m3")
    assert not e.torsion_type
    assert not is_semidistributive(e.lattice)[0]


def test_size_bounds():
    with pytest.raises(SizeBound):
        catalog.make_tamari(9)
    with pytest.raises(SizeBound):
        catalog.make_weak_order(7)
    assert SizeBound.exit_code == 1


@pytest.mark.parametrize("name", ["", "chain", "chain-x", "cube-3", "pentagon*"])
def test_unknown_names(name):
    with pytest.raises(InvalidInput):
        catalog.get(name)


@pytest.mark.parametrize("entry", catalog.standard_entries(), ids=lambda e: e.name)
def test_standard_entries_semidistributive_unless_control(entry):
    ok, _ = is_semidistributive(entry.lattice)
    assert ok == (entry.name != "m3")


def test_product_join_irreducibles():
    P = catalog.make_product(catalog.make_pentagon(), catalog.make_chain(2))
    leq = oracles.leq_matrix(P.size, P.covers)
    assert completely_join_irreducibles(P) == oracles.join_irreducibles(leq)
    assert len(completely_join_irreducibles(P)) == 4
