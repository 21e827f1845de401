"""Lattice congruences, quotient lattices and contracted labels."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClassNotInterval,
    CorrespondenceFailure,
    InvalidInput,
    MixedContraction,
    NotACongruence,
    NotACover,
)
from .lattice import Lattice, completely_join_irreducibles, lattice_from_leq


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True, eq=False)
class Congruence:
    host: Lattice
    classes: tuple  # tuples of elements, ordered by their minimum's index
    pi_down: tuple
    pi_up: tuple
    quotient: Lattice
    proj: tuple  # host element -> quotient element (= class id)

    def class_of(self, x: int) -> tuple:
        return self.classes[self.proj[x]]

    def is_contracted(self, x: int, y: int) -> bool:
        return self.proj[x] == self.proj[y]

    @property
    def is_identity(self) -> bool:
        return len(self.classes) == self.host.size

    def to_dict(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "pi_down": list(self.pi_down),
            "pi_up": list(self.pi_up),
            "proj": list(self.proj),
            "quotient": self.quotient.to_dict(),
        }


def congruence_from_contractions(L: Lattice, arrows) -> Congruence:
    """Smallest congruence identifying the endpoints of the given covers.

    Every pair that causes a merge is queued once and translated by joins and
    meets with all elements; the equivalence closure of these translates is
    the generated congruence.
    """
    queue = []
    for pair in arrows:
        x, y = int(pair[0]), int(pair[1])
        if not (0 <= x < L.size and 0 <= y < L.size) or not L.is_cover(x, y):
            raise NotACover(f"({x},{y}) is not a Hasse arrow", witness=[x, y])
        queue.append((x, y))
    uf = _UnionFind(L.size)
    for x, y in queue:
        uf.union(x, y)
    J, M = L.join_table, L.meet_table
    while queue:
        x, y = queue.pop()
        jx, jy, mx, my = J[x], J[y], M[x], M[y]
        for z in range(L.size):
            a, b = jx[z], jy[z]
            if uf.union(a, b):
                queue.append((a, b))
            a, b = mx[z], my[z]
            if uf.union(a, b):
                queue.append((a, b))
    groups: dict[int, list[int]] = {}
    for v in range(L.size):
        groups.setdefault(uf.find(v), []).append(v)
    return _assemble(L, list(groups.values()))


def congruence_from_partition(L: Lattice, classes) -> Congruence:
    """Validate an explicit partition and build its quotient."""
    seen = {}
    for k, cls in enumerate(classes):
        for v in cls:
            if not isinstance(v, int) or not 0 <= v < L.size:
                raise InvalidInput(f"element {v!r} out of range")
            if v in seen:
                raise InvalidInput(f"element {v} appears in two classes")
            seen[v] = k
    if len(seen) != L.size:
        missing = sorted(set(range(L.size)) - set(seen))
        raise InvalidInput(f"partition misses elements {missing}")
    J, M = L.join_table, L.meet_table
    for cls in classes:
        cls = list(cls)
        for x, y in zip(cls, cls[1:]):
            for z in range(L.size):
                for name, table in (("join", J), ("meet", M)):
                    if seen[table[x][z]] != seen[table[y][z]]:
                        raise NotACongruence(
                            f"{x} ≡ {y} but their {name}s with {z} are not equivalent",
                            witness={"x": x, "y": y, "z": z, "op": name},
                        )
    return _assemble(L, [list(c) for c in classes])


def _assemble(L: Lattice, groups) -> Congruence:
    info = []
    for g in groups:
        lo = L.meet_all(g)
        hi = L.join_all(g)
        members = sorted(g)
        if members != L.between(lo, hi):
            raise ClassNotInterval(f"class {members} is not the interval [{lo},{hi}]",
                                   witness=members)
        info.append((lo, hi, tuple(members)))
    info.sort()
    pi_down = [0] * L.size
    pi_up = [0] * L.size
    proj = [0] * L.size
    for k, (lo, hi, members) in enumerate(info):
        for v in members:
            pi_down[v], pi_up[v], proj[v] = lo, hi, k
    lows = [lo for lo, _, _ in info]
    names = None
    if L.element_names:
        names = [L.element_names[lo] for lo in lows]
    quotient = lattice_from_leq(
        len(info), lambda a, b: L.leq(lows[a], lows[b]), names,
        name=f"{L.name}/~" if L.name else None,
    )
    return Congruence(L, tuple(m for _, _, m in info), tuple(pi_down), tuple(pi_up), quotient, tuple(proj))


def identity_congruence(L: Lattice) -> Congruence:
    return congruence_from_contractions(L, [])


def quotient_map(phi: Congruence, x: int) -> int:
    return phi.proj[x]


def contracted_labels(phi: Congruence) -> frozenset:
    """Labels whose arrows are contracted; each label must be all-or-none."""
    L = phi.host
    status: dict[int, set] = {}
    for (x, y), lab in L.labels.items():
        status.setdefault(lab, set()).add(phi.is_contracted(x, y))
    mixed = sorted(lab for lab, s in status.items() if len(s) == 2)
    if mixed:
        raise MixedContraction(f"labels {mixed} have both contracted and uncontracted arrows",
                               witness=mixed)
    return frozenset(lab for lab, s in status.items() if True in s)


def label_correspondence(phi: Congruence) -> dict:
    """Bijection from uncontracted join-irreducibles of the host to those of the quotient."""
    contracted = contracted_labels(phi)
    Q = phi.quotient
    jq = set(completely_join_irreducibles(Q))
    corr = {}
    for j in completely_join_irreducibles(phi.host):
        if j in contracted:
            continue
        corr[j] = phi.proj[j]
    images = list(corr.values())
    if len(set(images)) != len(images) or set(images) != jq:
        raise CorrespondenceFailure(
            f"projection of uncontracted labels {sorted(corr)} does not biject onto "
            f"quotient join-irreducibles {sorted(jq)}",
            witness={"map": corr, "quotient_jirr": sorted(jq)},
        )
    return corr


def parse_congruence_spec(L: Lattice, data) -> Congruence:
    """Congruence from JSON: {"contract": [[l,u],...]} or {"classes": [[...],...]}."""
    if not isinstance(data, dict) or len(set(data) & {"contract", "classes"}) != 1:
        raise InvalidInput("congruence JSON needs exactly one of 'contract' or 'classes'")
    unknown = set(data) - {"contract", "classes", "name"}
    if unknown:
        raise InvalidInput(f"unknown congruence keys: {sorted(unknown)}")
    if "contract" in data:
        arrows = data["contract"]
        if not isinstance(arrows, list) or not all(
            isinstance(a, list) and len(a) == 2 and all(isinstance(v, int) for v in a) for a in arrows
        ):
            raise InvalidInput("'contract' must be a list of [lower, upper] pairs")
        return congruence_from_contractions(L, arrows)
    classes = data["classes"]
    if not isinstance(classes, list) or not all(isinstance(c, list) for c in classes):
        raise InvalidInput("'classes' must be a list of lists")
    return congruence_from_partition(L, classes)
