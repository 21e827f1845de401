import itertools

import pytest

import oracles
from taucat import catalog
from taucat.errors import (
    InvalidInput,
    NoBoundedExtremes,
    NoMinimumLabel,
    NotALattice,
    NotAPoset,
    RedundantCover,
)
from taucat.lattice import (
    arrow_label,
    build_lattice,
    completely_join_irreducibles,
    is_semidistributive,
    lattice_from_dict,
    lattice_isomorphic,
    load_lattice,
    permuted,
)

SMALL = ["chain-1", "chain-3", "boolean-2", "boolean-3", "pentagon", "m3",
         "tamari-3", "tamari-4", "weak-order-3", "pentagon*chain-2"]


def test_pentagon_bounds(n5):
    assert (n5.bottom, n5.top) == (0, 4)
    assert n5.size == 5


def test_one_element():
    L = build_lattice(1, [])
    assert L.bottom == L.top == 0
    assert L.labels == {}


def test_m3_is_a_lattice(m3):
    assert m3.size == 5 and m3.top == 4


@pytest.mark.parametrize("name", SMALL)
def test_order_and_operations_match_oracle(name):
    L = catalog.get(name).lattice
    leq = oracles.leq_matrix(L.size, L.covers)
    for x, y in itertools.product(range(L.size), repeat=2):
        assert L.leq(x, y) == leq[x][y]
        assert L.join(x, y) == oracles.join(leq, x, y)
        assert L.meet(x, y) == oracles.meet(leq, x, y)
    assert list(L.covers) == oracles.covers_of(leq)
    assert completely_join_irreducibles(L) == oracles.join_irreducibles(leq)


@pytest.mark.parametrize("name", [n for n in SMALL if n != "m3"])
def test_labels_match_oracle(name):
    L = catalog.get(name).lattice
    leq = oracles.leq_matrix(L.size, L.covers)
    for (x, y), lab in L.labels.items():
        assert lab == oracles.label(leq, x, y)


@pytest.mark.parametrize("name", SMALL)
def test_semidistributivity_matches_oracle(name):
    L = catalog.get(name).lattice
    ok, witness = is_semidistributive(L)
    assert ok == oracles.semidistributive(oracles.leq_matrix(L.size, L.covers))
    assert (witness is None) == ok


def test_pentagon_joins_and_meets(n5):
    assert n5.join(1, 2) == 4
    assert n5.join(2, 3) == 3
    assert all(n5.join(x, 0) == x for x in range(5))
    assert n5.meet(1, 3) == 0
    assert n5.meet(2, 3) == 2
    assert all(n5.meet(x, 4) == x for x in range(5))


def test_join_irreducibles(n5, b2):
    assert completely_join_irreducibles(n5) == [1, 2, 3]
    assert completely_join_irreducibles(b2) == [1, 2]
    assert completely_join_irreducibles(catalog.make_chain(2)) == [1]


def test_pentagon_labels(n5):
    assert arrow_label(n5, 3, 4) == 1
    assert arrow_label(n5, 1, 4) == 2
    assert arrow_label(n5, 0, 2) == 2
    assert n5.labelled_hasse() == [(0, 1, 1), (0, 2, 2), (1, 4, 2), (2, 3, 3), (3, 4, 1)]


def test_labels_distinct_on_covers_of_each_element(n5):
    for x in range(n5.size):
        labs = [n5.label(x, y) for y in n5.upper_covers[x]]
        assert len(labs) == len(set(labs))


def test_m3_not_semidistributive(m3):
    ok, witness = is_semidistributive(m3)
    assert not ok
    u, x, y = witness["u"], witness["x"], witness["y"]
    assert m3.join(u, x) == m3.join(u, y) != m3.join(u, m3.meet(x, y))


def test_m3_top_covers_have_no_minimum_label(m3):
    with pytest.raises(NoMinimumLabel) as info:
        arrow_label(m3, 1, 4)
    assert sorted(info.value.witness["minimal"]) == [2, 3]
    assert not m3.is_labelled
    with pytest.raises(NoMinimumLabel):
        m3.labels


@pytest.mark.parametrize("size,covers,exc", [
    (2, [(0, 1), (1, 0)], NotAPoset),
    (2, [(0, 0)], NotAPoset),
    (3, [(0, 1), (1, 2), (0, 2)], RedundantCover),
    (3, [(0, 1), (0, 2)], NoBoundedExtremes),
    # two maximal lower bounds of the two top-middle elements
    (6, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)], NotALattice),
    (2, [(0, 5)], InvalidInput),
    (0, [], InvalidInput),
])
def test_invalid_inputs(size, covers, exc):
    with pytest.raises(exc):
        build_lattice(size, covers)


def test_exit_codes_by_family():
    assert NotAPoset.exit_code == NotALattice.exit_code == 2
    assert NoMinimumLabel.exit_code == 3
    assert InvalidInput.exit_code == 1


def test_isomorphism(n5, b2):
    assert lattice_isomorphic(n5, b2) is None
    perm = [3, 0, 4, 1, 2]
    m = lattice_isomorphic(n5, permuted(n5, perm))
    assert m is not None
    for x, y in itertools.product(range(5), repeat=2):
        assert n5.leq(x, y) == permuted(n5, perm).leq(m[x], m[y])
    assert lattice_isomorphic(catalog.make_tamari(3), n5) is not None


@pytest.mark.parametrize("name", ["pentagon", "boolean-2", "tamari-3", "chain-3", "m3"])
def test_isomorphism_matches_oracle(name):
    L = catalog.get(name).lattice
    for other in ["pentagon", "boolean-2", "tamari-3", "chain-3", "m3"]:
        M = catalog.get(other).lattice
        got = lattice_isomorphic(L, M) is not None
        want = oracles.isomorphic(oracles.leq_matrix(L.size, L.covers), oracles.leq_matrix(M.size, M.covers))
        assert got == want


def test_json_round_trip(n5, tmp_path):
    path = tmp_path / "n5.json"
    import json
    path.write_text(json.dumps(n5.to_dict()))
    L = load_lattice(path)
    assert L.covers == n5.covers and L.element_names == n5.element_names


@pytest.mark.parametrize("data", [
    [], {"size": 2}, {"size": "2", "covers": []}, {"size": 2, "covers": [[0]]},
    {"size": 2, "covers": [[0, 1]], "extra": 1}, {"size": 2, "covers": [[0, 1]], "element_names": [1, 2]},
])
def test_schema_errors(data):
    with pytest.raises(InvalidInput):
        lattice_from_dict(data)


def test_unreadable_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidInput):
        load_lattice(bad)
