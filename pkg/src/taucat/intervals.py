"""Intervals, join-intervals and their label-preserving isomorphism classes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InvalidInput, TorsionTypeObstruction
from .lattice import Lattice


class Interval(NamedTuple):
    bottom: int
    top: int

    def to_dict(self):
        return {"bottom": self.bottom, "top": self.top}

    def contains(self, L: Lattice, other: "Interval") -> bool:
        return L.leq(self.bottom, other.bottom) and L.leq(other.top, self.top)

    def show(self, L: Optional[Lattice] = None, prime: str = "") -> str:
        if L is not None and L.element_names:
            return f"[{L.display(self.bottom)}, {L.display(self.top)}]"
        return f"[{self.bottom}{prime},{self.top}{prime}]"


def interval(L: Lattice, bottom: int, top: int) -> Interval:
    if not (0 <= bottom < L.size and 0 <= top < L.size) or not L.leq(bottom, top):
        raise InvalidInput(f"[{bottom},{top}] is not an interval")
    return Interval(bottom, top)


@dataclass(frozen=True)
class JoinIntervalClass:
    representatives: tuple
    label_set: frozenset
    rank: int

    @property
    def canonical(self) -> Interval:
        return self.representatives[0]

    def to_dict(self):
        return {
            "label_set": sorted(self.label_set),
            "rank": self.rank,
            "representatives": [iv.to_dict() for iv in self.representatives],
        }


def interval_atoms(L: Lattice, iv: Interval) -> list[int]:
    return [c for c in L.upper_covers[iv.bottom] if L.leq(c, iv.top)]


def is_join_interval(L: Lattice, iv: Interval) -> bool:
    return L.join_all(interval_atoms(L, iv), start=iv.bottom) == iv.top


def interval_arrows(L: Lattice, iv: Interval) -> list[tuple[int, int]]:
    inside = L.up[iv.bottom] & L.down[iv.top]
    return [(x, y) for x, y in L.covers if inside >> x & 1 and inside >> y & 1]


def interval_label_set(L: Lattice, iv: Interval) -> frozenset:
    labels = L.labels
    return frozenset(labels[a] for a in interval_arrows(L, iv))


def label_preserving_iso(L: Lattice, iv1: Interval, iv2: Interval) -> Optional[dict]:
    """The unique label-preserving order isomorphism iv1 -> iv2, if any.

    Covers of a fixed element carry distinct labels, so the map is forced
    breadth-first from the bottom.
    """
    labels = L.labels
    in1 = L.up[iv1.bottom] & L.down[iv1.top]
    in2 = L.up[iv2.bottom] & L.down[iv2.top]
    if bin(in1).count("1") != bin(in2).count("1"):
        return None
    phi = {iv1.bottom: iv2.bottom}
    hit = {iv2.bottom}
    queue = deque([iv1.bottom])
    while queue:
        x = queue.popleft()
        fx = phi[x]
        targets = {labels[(fx, c)]: c for c in L.upper_covers[fx] if in2 >> c & 1}
        n_out = 0
        for c in L.upper_covers[x]:
            if not in1 >> c & 1:
                continue
            n_out += 1
            img = targets.get(labels[(x, c)])
            if img is None:
                return None
            if c in phi:
                if phi[c] != img:
                    return None
            else:
                if img in hit:
                    return None
                phi[c] = img
                hit.add(img)
                queue.append(c)
        if n_out != len(targets):
            return None
    if len(phi) != bin(in1).count("1"):
        return None
    return phi


def enumerate_intervals(L: Lattice):
    for b in range(L.size):
        for t in L.between(b, L.top):
            yield Interval(b, t)


def enumerate_join_intervals(L: Lattice) -> list[Interval]:
    return [iv for iv in enumerate_intervals(L) if is_join_interval(L, iv)]


def enumerate_join_interval_classes(L: Lattice) -> list[JoinIntervalClass]:
    """Group join-intervals by label set, confirming each group by isomorphism."""
    groups: dict[frozenset, list[Interval]] = {}
    for iv in enumerate_join_intervals(L):
        groups.setdefault(interval_label_set(L, iv), []).append(iv)
    classes = []
    for label_set, members in groups.items():
        members.sort()
        rep = members[0]
        ranks = {len(interval_atoms(L, iv)) for iv in members}
        for other in members[1:]:
            if label_preserving_iso(L, rep, other) is None:
                raise TorsionTypeObstruction(
                    f"join-intervals {tuple(rep)} and {tuple(other)} share labels "
                    f"{sorted(label_set)} but are not label-isomorphic",
                    witness={"intervals": [list(rep), list(other)], "label_set": sorted(label_set)},
                )
        assert len(ranks) == 1
        classes.append(JoinIntervalClass(tuple(members), label_set, ranks.pop()))
    classes.sort(key=lambda c: (c.rank, c.canonical))
    return classes
