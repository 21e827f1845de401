"""The tau-cluster morphism category of a finite lattice.

Objects are classes of join-intervals with equal label sets.  A morphism is a
containment ``inner ⊆ outer`` of join-intervals, identified with every other
containment obtained by transporting it along the label-preserving
isomorphism between the outer intervals.  Each morphism is stored in the
canonical form where ``outer`` is the source object's canonical
representative, so morphism equality is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CompositionFailure, TorsionTypeObstruction
from .intervals import (
    Interval,
    JoinIntervalClass,
    enumerate_join_interval_classes,
    label_preserving_iso,
)
from .lattice import Lattice

EAGER_BOUND = 2000


@dataclass(frozen=True)
class Morphism:
    id: int
    source: int
    target: int
    outer: Interval
    inner: Interval

    @property
    def canonical_pair(self):
        return (self.outer, self.inner)

    @property
    def is_identity(self) -> bool:
        return self.outer == self.inner


class TccCategory:
    """Objects, Hom-sets and composition; immutable once built."""

    def __init__(self, lattice: Lattice, objects, transports, morphisms):
        self.lattice = lattice
        self.objects: list[JoinIntervalClass] = objects
        self.object_of = {iv: k for k, cls in enumerate(objects) for iv in cls.representatives}
        # member interval -> label-preserving iso (canonical rep -> member)
        self._to_member = transports
        self._from_member = {iv: {v: k for k, v in phi.items()} for iv, phi in transports.items()}
        self.morphisms: list[Morphism] = morphisms
        self._key = {(m.source, m.inner): m.id for m in morphisms}
        homs: dict = {}
        for m in morphisms:
            homs.setdefault((m.source, m.target), []).append(m.id)
        self.homs = {k: tuple(v) for k, v in homs.items()}
        self.identities = [self._key[(k, cls.canonical)] for k, cls in enumerate(objects)]
        self._out: list[list[int]] = [[] for _ in objects]
        for m in morphisms:
            self._out[m.source].append(m.id)

    # -- basic structure -----------------------------------------------------

    def __repr__(self):
        return f"<TccCategory objects={len(self.objects)} morphisms={len(self.morphisms)}>"

    def hom_set(self, o1: int, o2: int) -> tuple:
        return self.homs.get((o1, o2), ())

    def outgoing(self, o: int) -> list[int]:
        return self._out[o]

    def identity(self, o: int) -> int:
        return self.identities[o]

    def object_rank(self, o: int) -> int:
        return self.objects[o].rank

    def zero_object(self) -> int:
        return self.object_of[Interval(self.lattice.bottom, self.lattice.bottom)]

    def full_object(self) -> Optional[int]:
        """Object of [bottom, top], or None when that is not a join-interval."""
        return self.object_of.get(Interval(self.lattice.bottom, self.lattice.top))

    def object_with_labels(self, labels) -> Optional[int]:
        labels = frozenset(labels)
        for k, cls in enumerate(self.objects):
            if cls.label_set == labels:
                return k
        return None

    def morphism_of(self, outer: Interval, inner: Interval) -> int:
        """Id of the class of the containment inner ⊆ outer."""
        outer = Interval(*outer)
        inner = Interval(*inner)
        s = self.object_of[outer]
        back = self._from_member[outer]
        key = (s, Interval(back[inner.bottom], back[inner.top]))
        try:
            return self._key[key]
        except KeyError:
            raise CompositionFailure(f"{tuple(inner)} ⊆ {tuple(outer)} is not a morphism") from None

    def is_irreducible(self, f: int) -> bool:
        m = self.morphisms[f]
        return not m.is_identity and self.object_rank(m.target) == self.object_rank(m.source) - 1

    def compose(self, f: int, g: int) -> int:
        """The composite ``g ∘ f`` (first f, then g)."""
        mf = self.morphisms[f]
        mg = self.morphisms[g]
        if mf.target != mg.source:
            raise ValueError(f"morphisms {f} and {g} are not composable")
        phi = self._to_member[mf.inner]
        inner = Interval(phi[mg.inner.bottom], phi[mg.inner.top])
        try:
            return self._key[(mf.source, inner)]
        except KeyError:
            raise CompositionFailure(
                f"transport of {tuple(mg.inner)} into {tuple(mf.inner)} gave {tuple(inner)}, not a morphism"
            ) from None

    def composition_table(self) -> dict:
        table = {}
        for f in self.morphisms:
            for g in self._out[f.target]:
                table[(f.id, g)] = self.compose(f.id, g)
        return table

    # -- factorizations ------------------------------------------------------

    def signed_sequences(self, f: int) -> list[tuple]:
        """All factorizations of f into irreducible morphisms, as id chains."""
        m = self.morphisms[f]
        if m.is_identity:
            return []
        L = self.lattice
        target_rank = self.object_rank(m.target)
        inner = m.inner
        chains = []

        def walk(current: Interval, path: list):
            rank = self.objects[self.object_of[current]].rank
            if rank == target_rank:
                if current == inner:
                    chains.append(tuple(path))
                return
            for iv in self._sub_join_intervals(current):
                if self.objects[self.object_of[iv]].rank != rank - 1:
                    continue
                if not (L.leq(iv.bottom, inner.bottom) and L.leq(inner.top, iv.top)):
                    continue
                path.append(self.morphism_of(current, iv))
                walk(iv, path)
                path.pop()

        walk(m.outer, [])
        return chains

    def _sub_join_intervals(self, outer: Interval):
        # every join-interval inside a member is the transport of one inside
        # the canonical representative
        s = self.object_of[outer]
        phi = self._to_member[outer]
        for g in self._out[s]:
            inner = self.morphisms[g].inner
            yield Interval(phi[inner.bottom], phi[inner.top])

    def complete_signed_sequences(self) -> list[tuple]:
        full = self.full_object()
        if full is None:
            return []
        zero = self.zero_object()
        out = []
        for f in self.hom_set(full, zero):
            out.extend(self.signed_sequences(f))
        return out

    # -- verification --------------------------------------------------------

    def verify_axioms(self):
        """Unit laws and associativity over every composable triple."""
        for m in self.morphisms:
            if self.compose(self.identity(m.source), m.id) != m.id:
                raise CompositionFailure(f"left unit law fails for morphism {m.id}")
            if self.compose(m.id, self.identity(m.target)) != m.id:
                raise CompositionFailure(f"right unit law fails for morphism {m.id}")
        for f in self.morphisms:
            for g in self._out[f.target]:
                gf = self.compose(f.id, g)
                for h in self._out[self.morphisms[g].target]:
                    if self.compose(gf, h) != self.compose(f.id, self.compose(g, h)):
                        raise CompositionFailure(f"associativity fails on ({f.id},{g},{h})")

    def descriptor(self, f: int, prime: str = "") -> str:
        m = self.morphisms[f]
        return f"[f_{{{m.outer.show(prime=prime)}{m.inner.show(prime=prime)}}}]"

    def hom_matrix(self) -> list[list[int]]:
        n = len(self.objects)
        return [[len(self.hom_set(a, b)) for b in range(n)] for a in range(n)]


def build_category(L: Lattice, verify="auto") -> TccCategory:
    """Build the category; ``verify`` is True, False or "auto" (size-bounded)."""
    objects = enumerate_join_interval_classes(L)
    transports = {}
    for cls in objects:
        rep = cls.canonical
        for iv in cls.representatives:
            phi = label_preserving_iso(L, rep, iv)
            if phi is None:  # pragma: no cover - enumerate already confirmed
                raise TorsionTypeObstruction(f"no transport from {rep} to {iv}")
            transports[iv] = phi
    object_of = {iv: k for k, cls in enumerate(objects) for iv in cls.representatives}
    n_join = len(object_of)

    morphisms = []
    for s, cls in enumerate(objects):
        rep = cls.canonical
        found = []
        for b in L.between(rep.bottom, rep.top):
            for t in L.between(b, rep.top):
                iv = Interval(b, t)
                k = object_of.get(iv)
                if k is not None:
                    found.append((k, iv))
        found.sort()
        for k, iv in found:
            morphisms.append(Morphism(len(morphisms), s, k, rep, iv))
    cat = TccCategory(L, objects, transports, morphisms)
    if verify is True or (verify == "auto" and n_join <= EAGER_BOUND):
        cat.verify_axioms()
    return cat


def categories_isomorphic(C1: TccCategory, C2: TccCategory):
    """Search for an isomorphism of categories.

    Returns ``(True, object_map)`` or ``(False, None)``.  Object bijections
    must respect ranks and Hom-set sizes; for each candidate, irreducible
    morphisms are matched by backtracking, composites are forced, and the
    resulting morphism map is checked to be a bijective functor.
    """
    n = len(C1.objects)
    if n != len(C2.objects) or len(C1.morphisms) != len(C2.morphisms):
        return False, None
    M1, M2 = C1.hom_matrix(), C2.hom_matrix()

    def osig(C, M, o):
        row = sorted(M[o])
        col = sorted(M[p][o] for p in range(len(M)))
        return (C.object_rank(o), M[o][o], tuple(row), tuple(col))

    sig1 = [osig(C1, M1, o) for o in range(n)]
    sig2 = [osig(C2, M2, o) for o in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False, None

    omap = [-1] * n
    used = [False] * n

    def objects_search(o):
        if o == n:
            mmap = _match_morphisms(C1, C2, omap)
            return mmap is not None
        for p in range(n):
            if used[p] or sig2[p] != sig1[o]:
                continue
            if any(omap[q] >= 0 and (M1[o][q] != M2[p][omap[q]] or M1[q][o] != M2[omap[q]][p])
                   for q in range(o)):
                continue
            omap[o] = p
            used[p] = True
            if objects_search(o + 1):
                return True
            omap[o] = -1
            used[p] = False
        return False

    if objects_search(0):
        return True, {o: omap[o] for o in range(n)}
    return False, None


def _match_morphisms(C1: TccCategory, C2: TccCategory, omap):
    irr1 = [m.id for m in C1.morphisms if C1.is_irreducible(m.id)]
    irr2_by_pair: dict = {}
    for m in C2.morphisms:
        if C2.is_irreducible(m.id):
            irr2_by_pair.setdefault((m.source, m.target), []).append(m.id)

    mmap: dict[int, int] = {}
    for o in range(len(C1.objects)):
        mmap[C1.identity(o)] = C2.identity(omap[o])

    def extend(assign: dict) -> Optional[dict]:
        """Close a partial map under composition; None on conflict."""
        result = dict(assign)
        inverse = {}
        for a, b in result.items():
            if inverse.setdefault(b, a) != a:
                return None
        frontier = list(result)
        while frontier:
            new = []
            for f in frontier:
                mf = C1.morphisms[f]
                # f followed by g, and h followed by f
                pairs = [(f, g) for g in C1.outgoing(mf.target) if g in result]
                pairs += [(h, f) for h in list(result) if C1.morphisms[h].target == mf.source]
                for a, b in pairs:
                    c = C1.compose(a, b)
                    img = C2.compose(result[a], result[b])
                    if c in result:
                        if result[c] != img:
                            return None
                        continue
                    if inverse.setdefault(img, c) != c:
                        return None
                    result[c] = img
                    new.append(c)
            frontier = new
        return result

    def search(i, current):
        if i == len(irr1):
            return current if len(current) == len(C1.morphisms) else None
        f = irr1[i]
        if f in current:
            return search(i + 1, current)
        mf = C1.morphisms[f]
        for g in irr2_by_pair.get((omap[mf.source], omap[mf.target]), []):
            trial = dict(current)
            trial[f] = g
            closed = extend(trial)
            if closed is None:
                continue
            done = search(i + 1, closed)
            if done is not None:
                return done
        return None

    start = extend(mmap)
    if start is None:
        return None
    return search(0, start)
