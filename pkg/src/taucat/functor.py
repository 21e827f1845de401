"""The functor induced by a lattice congruence, its analysis, and interval lifting."""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional

from .category import TccCategory, build_category
from .congruence import Congruence, label_correspondence
from .errors import (
    CompositionFailure,
    ImageNotJoinInterval,
    LiftFailure,
    TheoremMismatch,
    WellDefinednessFailure,
)
from .intervals import Interval, interval_atoms, is_join_interval


class Check(NamedTuple):
    holds: bool
    witness: Any = None


@dataclass(eq=False)
class InducedFunctor:
    source: TccCategory
    target: TccCategory
    congruence: Congruence
    correspondence: dict
    obj_map: list
    mor_map: list
    analysis: dict = field(default_factory=dict)

    def project(self, iv: Interval) -> Interval:
        return project_interval(self.congruence, iv)

    def image_of(self, outer, inner) -> int:
        """Image of the source morphism given by a containment of intervals."""
        return self.mor_map[self.source.morphism_of(outer, inner)]


def project_interval(phi: Congruence, iv: Interval) -> Interval:
    return Interval(phi.proj[iv.bottom], phi.proj[iv.top])


def induced_functor(L, phi: Congruence, verify: bool = True,
                    source: Optional[TccCategory] = None,
                    target: Optional[TccCategory] = None) -> InducedFunctor:
    """Project join-intervals and containments along the congruence."""
    Q = phi.quotient
    corr = _correspondence(phi)
    C = source if source is not None else build_category(L, verify="auto" if verify else False)
    D = target if target is not None else build_category(Q, verify="auto" if verify else False)

    obj_map = []
    for k, cls in enumerate(C.objects):
        images = set()
        for iv in (cls.representatives if verify else cls.representatives[:1]):
            img = project_interval(phi, iv)
            if not is_join_interval(Q, img):
                raise ImageNotJoinInterval(
                    f"projection {tuple(img)} of join-interval {tuple(iv)} is not a join-interval",
                    witness={"interval": list(iv), "image": list(img)},
                )
            images.add(D.object_of[img])
        if len(images) != 1:
            raise WellDefinednessFailure(f"object {k} has images {sorted(images)}")
        obj_map.append(images.pop())

    mor_map = []
    for m in C.morphisms:
        img = D.morphism_of(project_interval(phi, m.outer), project_interval(phi, m.inner))
        if verify:
            for member in C.objects[m.source].representatives[1:]:
                t = C._to_member[member]
                inner = Interval(t[m.inner.bottom], t[m.inner.top])
                other = D.morphism_of(project_interval(phi, member), project_interval(phi, inner))
                if other != img:
                    raise WellDefinednessFailure(
                        f"morphism {m.id} maps to {img} and {other} depending on representative"
                    )
        mor_map.append(img)

    F = InducedFunctor(C, D, phi, corr, obj_map, mor_map)
    if verify:
        check_functoriality(F)
    return F


def check_functoriality(F: InducedFunctor):
    C, D = F.source, F.target
    for o in range(len(C.objects)):
        if F.mor_map[C.identity(o)] != D.identity(F.obj_map[o]):
            raise CompositionFailure(f"identity of object {o} not preserved")
    for m in C.morphisms:
        if D.morphisms[F.mor_map[m.id]].source != F.obj_map[m.source] or \
                D.morphisms[F.mor_map[m.id]].target != F.obj_map[m.target]:
            raise CompositionFailure(f"morphism {m.id} maps between the wrong objects")
        for g in C.outgoing(m.target):
            if F.mor_map[C.compose(m.id, g)] != D.compose(F.mor_map[m.id], F.mor_map[g]):
                raise CompositionFailure(f"composition of {m.id} and {g} not preserved")


# -- analysis ----------------------------------------------------------------

def check_surjective_on_objects(F: InducedFunctor) -> Check:
    hit = set(F.obj_map)
    missing = [o for o in range(len(F.target.objects)) if o not in hit]
    return Check(not missing, missing)


def check_faithful(F: InducedFunctor) -> Check:
    """Injectivity on every Hom-set, cross-checked against injectivity of proj."""
    C = F.source
    witness = None
    # higher-rank sources first, so the witness is as large as possible
    for _, hom in sorted(C.homs.items(), key=lambda kv: (-C.object_rank(kv[0][0]), kv[0])):
        seen = {}
        for f in hom:
            img = F.mor_map[f]
            if img in seen:
                witness = (seen[img], f)
                break
            seen[img] = f
        if witness:
            break
    holds = witness is None
    if holds != F.congruence.is_identity:
        raise TheoremMismatch(
            f"faithful={holds} but proj injective={F.congruence.is_identity}"
        )
    return Check(holds, witness)


def check_full(F: InducedFunctor) -> Check:
    """Surjectivity of Hom(s, t) -> Hom(Fs, Ft) for every pair with Hom(s, t) nonempty.

    Pairs with an empty source Hom-set are skipped: any non-trivial
    congruence sends some rank-1 object to the zero object, and Hom(zero, it)
    is empty while Hom(zero, zero) holds the identity.
    """
    C, D = F.source, F.target
    for (s, t), hom in sorted(C.homs.items()):
        image = {F.mor_map[f] for f in hom}
        full = set(D.hom_set(F.obj_map[s], F.obj_map[t]))
        if image != full:
            return Check(False, {"source": s, "target": t,
                                 "hom_size": len(hom),
                                 "image_hom_size": len(full),
                                 "missing": sorted(full - image)})
    return Check(True, None)


def _lift(phi: Congruence, bottom: int, wanted, ceiling: Optional[int]):
    L = phi.host
    corr = _correspondence(phi)
    chosen = {}
    for c in L.upper_covers[bottom]:
        if ceiling is not None and not L.leq(c, ceiling):
            continue
        lab = corr.get(L.label(bottom, c))
        if lab in wanted:
            if lab in chosen:
                raise LiftFailure(f"two covers of {bottom} carry label {lab}")
            chosen[lab] = c
    if set(chosen) != set(wanted):
        raise LiftFailure(
            f"covers of {bottom} miss quotient labels {sorted(set(wanted) - set(chosen))}",
            witness={"bottom": bottom, "missing": sorted(set(wanted) - set(chosen))},
        )
    return Interval(bottom, L.join_all(chosen.values(), start=bottom))


_CORR: "weakref.WeakKeyDictionary[Congruence, dict]" = weakref.WeakKeyDictionary()


def _correspondence(phi: Congruence) -> dict:
    corr = _CORR.get(phi)
    if corr is None:
        corr = _CORR[phi] = label_correspondence(phi)
    return corr


def _atom_labels(Q, iv: Interval):
    return {Q.label(iv.bottom, a) for a in interval_atoms(Q, iv)}


def lift_interval(phi: Congruence, iv_q) -> Interval:
    """Lift a quotient join-interval to a join-interval of the host.

    The bottom is the top of the preimage class of ``iv_q.bottom``; the top
    joins in the covers of that element whose labels correspond to the
    atom labels of ``iv_q``.
    """
    iv_q = Interval(*iv_q)
    Q = phi.quotient
    bottom = phi.pi_up[phi.classes[iv_q.bottom][0]]
    lifted = _lift(phi, bottom, _atom_labels(Q, iv_q), None)
    if project_interval(phi, lifted) != iv_q or not is_join_interval(phi.host, lifted):
        raise LiftFailure(f"lift {tuple(lifted)} does not project onto {tuple(iv_q)}")
    return lifted


def lift_interval_within(phi: Congruence, outer_q, inner_q) -> Interval:
    """Lift ``inner_q`` inside the lift of ``outer_q``.

    The congruence is restricted to the lifted outer interval; the bottom is
    the top of the restricted preimage of ``inner_q.bottom``.
    """
    outer_q, inner_q = Interval(*outer_q), Interval(*inner_q)
    L, Q = phi.host, phi.quotient
    outer = lift_interval(phi, outer_q)
    preimage = [x for x in L.between(outer.bottom, outer.top) if phi.proj[x] == inner_q.bottom]
    if not preimage:
        raise LiftFailure(f"{tuple(inner_q)} has no preimage inside {tuple(outer)}")
    bottom = L.join_all(preimage, start=preimage[0])
    lifted = _lift(phi, bottom, _atom_labels(Q, inner_q), outer.top)
    if project_interval(phi, lifted) != inner_q or not outer.contains(L, lifted):
        raise LiftFailure(f"restricted lift {tuple(lifted)} fails its postconditions")
    return lifted


def check_essential_image_morphisms(F: InducedFunctor) -> Check:
    """Every target morphism is F of the lifted containment; witness = preimages."""
    phi = F.congruence
    C, D = F.source, F.target
    preimages = {}
    missing = []
    for g in D.morphisms:
        outer = lift_interval(phi, g.outer)
        inner = lift_interval_within(phi, g.outer, g.inner)
        if outer not in C.object_of or inner not in C.object_of:
            missing.append(g.id)
            continue
        f = C.morphism_of(outer, inner)
        if F.mor_map[f] == g.id:
            preimages[g.id] = f
        else:
            missing.append(g.id)
    if missing:
        return Check(False, missing)
    return Check(True, preimages)


def check_reflects_composition(F: InducedFunctor) -> Check:
    """Composable image pairs lift to composable source pairs."""
    C, D = F.source, F.target
    lifts = check_essential_image_morphisms(F)
    if not lifts.holds:
        return Check(False, {"unliftable": lifts.witness})
    pre = lifts.witness
    image = set(F.mor_map)
    witnesses = []
    for a in D.morphisms:
        if a.id not in image:
            continue
        for b in D.outgoing(a.target):
            if b not in image:
                continue
            fa, fb = pre[a.id], pre[b]
            if C.morphisms[fa].target != C.morphisms[fb].source:
                return Check(False, {"pair": [a.id, b], "lifts": [fa, fb]})
            witnesses.append(((a.id, b), (fa, fb)))
    return Check(True, witnesses)


def check_image_generates(F: InducedFunctor) -> Check:
    D = F.target
    generated = set(F.mor_map)
    frontier = list(generated)
    while frontier:
        new = []
        for f in frontier:
            for g in D.outgoing(D.morphisms[f].target):
                if g in generated:
                    for h in (D.compose(f, g),):
                        if h not in generated:
                            generated.add(h)
                            new.append(h)
            for h in list(generated):
                if D.morphisms[h].target == D.morphisms[f].source:
                    c = D.compose(h, f)
                    if c not in generated:
                        generated.add(c)
                        new.append(c)
        frontier = new
    missing = sorted(set(range(len(D.morphisms))) - generated)
    return Check(not missing, missing)


def analyze(F: InducedFunctor) -> dict:
    results = {
        "surjective_on_objects": check_surjective_on_objects(F),
        "faithful": check_faithful(F),
        "full": check_full(F),
        "morphisms_in_essential_image": check_essential_image_morphisms(F),
        "reflects_composition": check_reflects_composition(F),
        "image_generates_target": check_image_generates(F),
    }
    F.analysis = results
    return results
