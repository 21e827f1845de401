import pytest

from taucat import catalog
from taucat.category import build_category, categories_isomorphic
from taucat.errors import CompositionFailure
from taucat.intervals import Interval
from taucat.lattice import permuted


@pytest.fixture
def cat_n5(n5):
    return build_category(n5)


def mor(C, outer, inner):
    return C.morphism_of(Interval(*outer), Interval(*inner))


def test_object_counts(cat_n5, b2):
    assert len(cat_n5.objects) == 5
    assert len(build_category(b2).objects) == 4
    one = build_category(catalog.make_chain(1))
    assert len(one.objects) == 1 and len(one.morphisms) == 1


def test_hom_sizes(cat_n5):
    full, zero = cat_n5.full_object(), cat_n5.zero_object()
    cls02 = cat_n5.object_of[Interval(0, 2)]
    assert len(cat_n5.hom_set(full, zero)) == 5
    assert len(cat_n5.hom_set(full, cls02)) == 2
    assert len(cat_n5.hom_set(zero, full)) == 0


def test_composition(cat_n5):
    C = cat_n5
    f = mor(C, (0, 4), (0, 2))
    assert C.compose(f, mor(C, (0, 2), (2, 2))) == mor(C, (0, 4), (2, 2))
    # [1,4] is the same object as [0,2]; transport {1->0, 4->2} sends [4,4] to [2,2]
    assert C.compose(f, mor(C, (1, 4), (4, 4))) == mor(C, (0, 4), (2, 2))
    for m in C.morphisms:
        assert C.compose(C.identity(m.source), m.id) == m.id
        assert C.compose(m.id, C.identity(m.target)) == m.id


def test_transport_equivalence(cat_n5):
    C = cat_n5
    assert mor(C, (1, 4), (1, 1)) == mor(C, (0, 2), (0, 0))
    assert mor(C, (3, 4), (4, 4)) == mor(C, (0, 1), (1, 1))
    assert mor(C, (1, 4), (1, 1)) != mor(C, (0, 2), (2, 2))


def test_not_a_morphism(cat_n5):
    with pytest.raises(CompositionFailure):
        mor(cat_n5, (0, 4), (0, 3))


def test_ranks_and_irreducibles(cat_n5):
    C = cat_n5
    assert C.object_rank(C.full_object()) == 2
    assert C.object_rank(C.zero_object()) == 0
    assert C.object_rank(C.object_of[Interval(2, 3)]) == 1
    assert C.is_irreducible(mor(C, (0, 4), (0, 2)))
    assert not C.is_irreducible(mor(C, (0, 4), (2, 2)))
    assert not any(C.is_irreducible(i) for i in C.identities)


def test_factorizations(cat_n5):
    C = cat_n5
    f = mor(C, (0, 4), (0, 0))
    chains = C.signed_sequences(f)
    assert len(chains) == 2
    assert {C.morphisms[c[0]].inner for c in chains} == {Interval(0, 1), Interval(0, 2)}
    assert len(C.complete_signed_sequences()) == 10
    g = mor(C, (0, 4), (0, 2))
    assert C.signed_sequences(g) == [(g,)]


def test_descriptor(cat_n5):
    assert cat_n5.descriptor(mor(cat_n5, (0, 4), (2, 3))) == "[f_{[0,4][2,3]}]"


def test_category_isomorphism(cat_n5, n5, b2):
    ok, omap = categories_isomorphic(cat_n5, build_category(permuted(n5, [4, 2, 0, 3, 1])))
    assert ok and sorted(omap.values()) == list(range(5))
    assert categories_isomorphic(cat_n5, build_category(catalog.make_tamari(3)))[0]
    assert not categories_isomorphic(cat_n5, build_category(b2))[0]


@pytest.mark.parametrize("entry", [e for e in catalog.standard_entries() if e.torsion_type],
                         ids=lambda e: e.name)
def test_hom_bijections(entry):
    L = entry.lattice
    C = build_category(L, verify=True)
    full, zero = C.full_object(), C.zero_object()
    assert len(C.hom_set(full, zero)) == L.size
    for k, cls in enumerate(C.objects):
        if cls.rank == 1:
            (label,) = cls.label_set
            arrows = sum(1 for lab in L.labels.values() if lab == label)
            assert len(C.hom_set(full, k)) == arrows


def test_long_chain_has_no_full_object():
    C = build_category(catalog.make_chain(3))
    assert C.full_object() is None
    assert C.complete_signed_sequences() == []


@pytest.mark.parametrize("name", ["pentagon", "tamari-4", "weak-order-3", "boolean-2*chain-2"])
def test_hom_sizes_independent_of_representative(name):
    import oracles
    L = catalog.get(name).lattice
    C = build_category(L)
    leq = oracles.leq_matrix(L.size, L.covers)
    jis = oracles.join_intervals(leq)
    for s, cls in enumerate(C.objects):
        for rep in cls.representatives:
            inside = [iv for iv in jis if leq[rep.bottom][iv[0]] and leq[iv[1]][rep.top]]
            for t, target in enumerate(C.objects):
                count = sum(1 for iv in inside if oracles.interval_labels(leq, iv) == target.label_set)
                assert count == len(C.hom_set(s, t))
