"""Finite lattices given by their Hasse diagram.

Elements are the dense indices ``0 .. size-1``.  Order relations are kept as
Python-int bitsets: bit ``y`` of ``up[x]`` is set iff ``x <= y``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidInput,
    NoBoundedExtremes,
    NoMinimumLabel,
    NotALattice,
    NotAPoset,
    RedundantCover,
)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Lattice:
    size: int
    covers: tuple
    up: tuple
    down: tuple
    join_table: tuple
    meet_table: tuple
    bottom: int
    top: int
    upper_covers: tuple
    lower_covers: tuple
    element_names: Optional[tuple] = None
    name: Optional[str] = None
    # (lower, upper) -> label, or None when some cover has no minimum label
    _labels: Optional[dict] = field(default=None, repr=False)
    _label_failure: Optional[tuple] = field(default=None, repr=False)

    # -- order -------------------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def is_cover(self, x: int, y: int) -> bool:
        return y in self.upper_covers[x]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join_all(self, elements: Iterable[int], start: Optional[int] = None) -> int:
        acc = self.bottom if start is None else start
        for e in elements:
            acc = self.join_table[acc][e]
        return acc

    def meet_all(self, elements: Iterable[int], start: Optional[int] = None) -> int:
        acc = self.top if start is None else start
        for e in elements:
            acc = self.meet_table[acc][e]
        return acc

    def between(self, low: int, high: int) -> list[int]:
        """Elements z with low <= z <= high, in index order."""
        return list(_bits(self.up[low] & self.down[high]))

    def elements(self) -> range:
        return range(self.size)

    def display(self, x: int) -> str:
        if self.element_names:
            return self.element_names[x]
        return str(x)

    # -- labelling ---------------------------------------------------------

    @property
    def is_labelled(self) -> bool:
        return self._labels is not None

    @property
    def labels(self) -> dict:
        """Join-irreducible label of every cover pair."""
        if self._labels is None:
            x, y, candidates = self._label_failure
            raise NoMinimumLabel(
                f"cover ({x},{y}) has no minimum label; minimal candidates {candidates}",
                witness={"cover": [x, y], "minimal": list(candidates)},
            )
        return self._labels

    def label(self, x: int, y: int) -> int:
        return self.labels[(x, y)]

    def labelled_hasse(self) -> list[tuple[int, int, int]]:
        return [(x, y, self.labels[(x, y)]) for x, y in self.covers]

    # -- misc --------------------------------------------------------------

    def to_dict(self) -> dict:
        out = {}
        if self.name:
            out["name"] = self.name
        out["size"] = self.size
        out["covers"] = [list(c) for c in self.covers]
        if self.element_names:
            out["element_names"] = list(self.element_names)
        return out

    def renamed(self, name: Optional[str]) -> "Lattice":
        return build_lattice(self.size, self.covers, self.element_names, name=name)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Lattice{tag} size={self.size} covers={len(self.covers)}>"


def build_lattice(
    size: int,
    covers: Iterable[Sequence[int]],
    element_names: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
) -> Lattice:
    """Validate a cover list and precompute order, join and meet tables."""
    if not isinstance(size, int) or size < 1:
        raise InvalidInput(f"size must be a positive integer, got {size!r}")
    pairs = set()
    for c in covers:
        if len(c) != 2:
            raise InvalidInput(f"cover {c!r} is not a pair")
        x, y = int(c[0]), int(c[1])
        if not (0 <= x < size and 0 <= y < size):
            raise InvalidInput(f"cover ({x},{y}) out of range for size {size}")
        if x == y:
            raise NotAPoset(f"self-loop at {x}", witness=[x, x])
        pairs.add((x, y))
    if element_names is not None:
        element_names = tuple(str(s) for s in element_names)
        if len(element_names) != size:
            raise InvalidInput("element_names length does not match size")

    upper = [[] for _ in range(size)]
    lower = [[] for _ in range(size)]
    for x, y in sorted(pairs):
        upper[x].append(y)
        lower[y].append(x)

    # Kahn's algorithm; leftovers lie on a cycle.
    indeg = [len(lower[v]) for v in range(size)]
    queue = deque(v for v in range(size) if indeg[v] == 0)
    topo = []
    while queue:
        v = queue.popleft()
        topo.append(v)
        for w in upper[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(topo) != size:
        cyc = sorted(v for v in range(size) if indeg[v] > 0)
        raise NotAPoset("cover relation contains a cycle", witness=cyc)

    up = [0] * size
    for v in reversed(topo):
        m = 1 << v
        for w in upper[v]:
            m |= up[w]
        up[v] = m
    down = [0] * size
    for v in topo:
        m = 1 << v
        for w in lower[v]:
            m |= down[w]
        down[v] = m

    for x, y in sorted(pairs):
        for z in upper[x]:
            if z != y and up[z] >> y & 1:
                raise RedundantCover(
                    f"cover ({x},{y}) is implied by {x} < {z} < {y}", witness=[x, z, y]
                )

    minimal = [v for v in range(size) if not lower[v]]
    maximal = [v for v in range(size) if not upper[v]]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NoBoundedExtremes(
            f"minimal elements {minimal}, maximal elements {maximal}",
            witness={"minimal": minimal, "maximal": maximal},
        )

    # Position-indexed masks: the lowest set bit of a common upper set is a
    # minimal element of it; it is the join iff its up-set is the whole set.
    pos = [0] * size
    for i, v in enumerate(topo):
        pos[v] = i
    up_p = [0] * size
    down_p = [0] * size
    for v in range(size):
        up_p[v] = sum(1 << pos[w] for w in _bits(up[v]))
        down_p[v] = sum(1 << pos[w] for w in _bits(down[v]))

    join_t = [[0] * size for _ in range(size)]
    meet_t = [[0] * size for _ in range(size)]
    for x in range(size):
        join_t[x][x] = x
        meet_t[x][x] = x
        for y in range(x + 1, size):
            common = up_p[x] & up_p[y]
            if not common:
                raise NotALattice(f"{x} and {y} have no common upper bound", witness=[x, y])
            z = topo[(common & -common).bit_length() - 1]
            if up_p[z] != common:
                raise NotALattice(f"{x} and {y} have no least upper bound", witness=[x, y])
            join_t[x][y] = join_t[y][x] = z
            common = down_p[x] & down_p[y]
            if not common:
                raise NotALattice(f"{x} and {y} have no common lower bound", witness=[x, y])
            z = topo[common.bit_length() - 1]
            if down_p[z] != common:
                raise NotALattice(f"{x} and {y} have no greatest lower bound", witness=[x, y])
            meet_t[x][y] = meet_t[y][x] = z

    lat = Lattice(
        size=size,
        covers=tuple(sorted(pairs)),
        up=tuple(up),
        down=tuple(down),
        join_table=tuple(tuple(r) for r in join_t),
        meet_table=tuple(tuple(r) for r in meet_t),
        bottom=minimal[0],
        top=maximal[0],
        upper_covers=tuple(tuple(u) for u in upper),
        lower_covers=tuple(tuple(l) for l in lower),
        element_names=element_names,
        name=name,
    )
    labels = {}
    failure = None
    for x, y in lat.covers:
        lab, candidates = _minimum_label(lat, x, y)
        if lab is None:
            failure = (x, y, candidates)
            labels = None
            break
        labels[(x, y)] = lab
    object.__setattr__(lat, "_labels", labels)
    object.__setattr__(lat, "_label_failure", failure)
    return lat


def _minimum_label(L: Lattice, x: int, y: int):
    """Return (minimum, minimal-candidates) of {t : x v t = y}."""
    row = L.join_table[x]
    cand = 0
    for t in _bits(L.down[y]):
        if row[t] == y:
            cand |= 1 << t
    minimal = [t for t in _bits(cand) if not (L.down[t] & cand) & ~(1 << t)]
    if len(minimal) == 1:
        return minimal[0], minimal
    return None, minimal


# -- element-level operations ----------------------------------------------

def join(L: Lattice, x: int, y: int) -> int:
    return L.join_table[x][y]


def meet(L: Lattice, x: int, y: int) -> int:
    return L.meet_table[x][y]


def completely_join_irreducibles(L: Lattice) -> list[int]:
    """Elements with exactly one lower cover (the finite case)."""
    return [v for v in range(L.size) if len(L.lower_covers[v]) == 1]


def completely_meet_irreducibles(L: Lattice) -> list[int]:
    return [v for v in range(L.size) if len(L.upper_covers[v]) == 1]


def arrow_label(L: Lattice, x: int, y: int) -> int:
    """The minimum of {t : x v t = y} for a cover x < y."""
    if not L.is_cover(x, y):
        raise InvalidInput(f"({x},{y}) is not a cover")
    lab, candidates = _minimum_label(L, x, y)
    if lab is None:
        raise NoMinimumLabel(
            f"cover ({x},{y}) has minimal candidates {candidates}",
            witness={"cover": [x, y], "minimal": candidates},
        )
    return lab


def is_semidistributive(L: Lattice):
    """Check SD-join and SD-meet.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness names a
    violating triple ``u, x, y`` and which law fails.
    """
    for kind, op, dual in (("join", L.join_table, L.meet_table), ("meet", L.meet_table, L.join_table)):
        for u in range(L.size):
            row = op[u]
            groups: dict[int, list[int]] = {}
            for x in range(L.size):
                groups.setdefault(row[x], []).append(x)
            for value, members in groups.items():
                acc = members[0]
                for x in members[1:]:
                    acc = dual[acc][x]
                if row[acc] == value:
                    continue
                for i, x in enumerate(members):
                    for y in members[i + 1:]:
                        if row[dual[x][y]] != value:
                            return False, {"law": f"SD-{kind}", "u": u, "x": x, "y": y}
                raise AssertionError("unreachable: pairwise closure implies closure")
    return True, None


def lattice_isomorphic(L1: Lattice, L2: Lattice) -> Optional[dict]:
    """Lexicographically least order-isomorphism L1 -> L2, or None.

    Elements of L1 are assigned in index order and candidate images are tried
    in increasing order, so the first complete assignment is the least one.
    """
    if L1.size != L2.size or len(L1.covers) != len(L2.covers):
        return None
    sig1 = _signatures(L1)
    sig2 = _signatures(L2)
    if sorted(sig1) != sorted(sig2):
        return None
    n = L1.size
    image = [-1] * n
    used = [False] * n

    def consistent(x, fx):
        for y in L1.upper_covers[x]:
            if image[y] >= 0 and not L2.is_cover(fx, image[y]):
                return False
        for y in L1.lower_covers[x]:
            if image[y] >= 0 and not L2.is_cover(image[y], fx):
                return False
        # reverse direction: covers among assigned images must come from covers
        for y in range(n):
            fy = image[y]
            if fy < 0:
                continue
            if L2.is_cover(fx, fy) and not L1.is_cover(x, y):
                return False
            if L2.is_cover(fy, fx) and not L1.is_cover(y, x):
                return False
        return True

    def search(x):
        if x == n:
            return True
        for fx in range(n):
            if used[fx] or sig2[fx] != sig1[x] or not consistent(x, fx):
                continue
            image[x] = fx
            used[fx] = True
            if search(x + 1):
                return True
            image[x] = -1
            used[fx] = False
        return False

    if search(0):
        return {x: image[x] for x in range(n)}
    return None


def _signatures(L: Lattice):
    depth = [0] * L.size
    for v in _topological(L):
        for w in L.upper_covers[v]:
            depth[w] = max(depth[w], depth[v] + 1)
    return [
        (len(L.lower_covers[v]), len(L.upper_covers[v]), depth[v],
         bin(L.up[v]).count("1"), bin(L.down[v]).count("1"))
        for v in range(L.size)
    ]


def _topological(L: Lattice):
    return sorted(range(L.size), key=lambda v: bin(L.down[v]).count("1"))


def lattice_from_leq(size: int, leq, element_names=None, name=None) -> Lattice:
    """Build a lattice from an order predicate via transitive reduction."""
    covers = []
    for x in range(size):
        above = [y for y in range(size) if y != x and leq(x, y)]
        for y in above:
            if not any(z != y and leq(z, y) for z in above):
                covers.append((x, y))
    return build_lattice(size, covers, element_names, name=name)


def permuted(L: Lattice, perm: Sequence[int]) -> Lattice:
    """Copy of L with element x renamed perm[x]."""
    covers = [(perm[x], perm[y]) for x, y in L.covers]
    names = None
    if L.element_names:
        names = [None] * L.size
        for x in range(L.size):
            names[perm[x]] = L.element_names[x]
    return build_lattice(L.size, covers, names, name=L.name)


# -- JSON --------------------------------------------------------------------

def lattice_from_dict(data) -> Lattice:
    if not isinstance(data, dict):
        raise InvalidInput("lattice JSON must be an object")
    unknown = set(data) - {"name", "size", "covers", "element_names"}
    if unknown:
        raise InvalidInput(f"unknown lattice keys: {sorted(unknown)}")
    if "size" not in data or "covers" not in data:
        raise InvalidInput("lattice JSON needs 'size' and 'covers'")
    size = data["size"]
    covers = data["covers"]
    if not isinstance(size, int) or isinstance(size, bool):
        raise InvalidInput("'size' must be an integer")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(v, int) for v in c) for c in covers
    ):
        raise InvalidInput("'covers' must be a list of [lower, upper] integer pairs")
    names = data.get("element_names")
    if names is not None and not (isinstance(names, list) and all(isinstance(s, str) for s in names)):
        raise InvalidInput("'element_names' must be a list of strings")
    return build_lattice(size, covers, names, name=data.get("name"))


def load_lattice(path) -> Lattice:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read lattice file {path}: {exc}") from exc
    return lattice_from_dict(data)
