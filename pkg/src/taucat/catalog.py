"""Named lattice families used for tests and demos."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import InvalidInput, SizeBound
from .lattice import Lattice, build_lattice

TAMARI_MAX = 8
WEAK_ORDER_MAX = 6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    lattice: Lattice
    torsion_type: bool
    provenance: str


def make_chain(n: int) -> Lattice:
    """The chain 0 < 1 < ... < n-1 (n elements)."""
    if n < 1:
        raise InvalidInput("chain needs at least one element")
    return build_lattice(n, [(i, i + 1) for i in range(n - 1)], name=f"chain-{n}")


def make_boolean(n: int) -> Lattice:
    """Subsets of an n-set; element index is the subset's bitmask."""
    if n < 0:
        raise InvalidInput("boolean lattice rank must be non-negative")
    size = 1 << n
    covers = [(m, m | (1 << i)) for m in range(size) for i in range(n) if not m >> i & 1]
    return build_lattice(size, covers, name=f"boolean-{n}")


def make_product(L1: Lattice, L2: Lattice) -> Lattice:
    """Product order; (a, b) has index a * |L2| + b."""
    n2 = L2.size
    covers = []
    for a, b in L1.covers:
        covers.extend((a * n2 + j, b * n2 + j) for j in range(n2))
    for a, b in L2.covers:
        covers.extend((i * n2 + a, i * n2 + b) for i in range(L1.size))
    names = None
    if L1.element_names or L2.element_names:
        names = [f"({L1.display(i)}, {L2.display(j)})" for i in range(L1.size) for j in range(n2)]
    name = None
    if L1.name and L2.name:
        name = f"{L1.name}*{L2.name}"
    return build_lattice(L1.size * n2, covers, names, name=name)


def product_projection_contractions(L1: Lattice, L2: Lattice) -> list[tuple[int, int]]:
    """Arrows of L1 x L2 to contract so the quotient is the first factor."""
    n2 = L2.size
    return [(i * n2 + a, i * n2 + b) for i in range(L1.size) for a, b in L2.covers]


def make_pentagon() -> Lattice:
    """N5, the lattice of torsion classes of K(1 -> 2)."""
    return build_lattice(
        5,
        [(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)],
        ["0", "Fac(2)", "Fac(1)", "Fac(1/2)", "mod A"],
        name="pentagon",
    )


def make_m3() -> Lattice:
    """The diamond M3; not semidistributive."""
    return build_lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], name="m3")


def _bfs_index(start, neighbours):
    order = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(neighbours(v)):
            if w not in order:
                order[w] = len(order)
                queue.append(w)
    return order


def _binary_trees(n):
    if n == 0:
        return [None]
    out = []
    for k in range(n):
        for left in _binary_trees(k):
            for right in _binary_trees(n - 1 - k):
                out.append((left, right))
    return out


def _right_rotations(t):
    # ((A, B), C) -> (A, (B, C)) at the root or inside either subtree
    if t is None:
        return []
    left, right = t
    out = []
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    out.extend((l2, right) for l2 in _right_rotations(left))
    out.extend((left, r2) for r2 in _right_rotations(right))
    return out


def _tree_key(t):
    return "" if t is None else "(" + _tree_key(t[0]) + ")" + _tree_key(t[1])


def make_tamari(n: int, unbounded: bool = False) -> Lattice:
    """Tamari lattice on binary trees with n internal nodes."""
    if n < 1 or (n > TAMARI_MAX and not unbounded):
        raise SizeBound(f"tamari size must be in 1..{TAMARI_MAX}")
    trees = _binary_trees(n)
    keyed = {_tree_key(t): t for t in trees}
    start = None
    for _ in range(n):  # left comb is the minimum
        start = (start, None)
    order = _bfs_index(_tree_key(start), lambda k: [_tree_key(r) for r in _right_rotations(keyed[k])])
    covers = [(order[_tree_key(t)], order[_tree_key(r)]) for t in trees for r in _right_rotations(t)]
    names = [None] * len(order)
    for k, i in order.items():
        names[i] = k
    return build_lattice(len(order), covers, names, name=f"tamari-{n}")


def make_weak_order(n: int, unbounded: bool = False) -> Lattice:
    """Right weak order on permutations of 1..n."""
    if n < 1 or (n > WEAK_ORDER_MAX and not unbounded):
        raise SizeBound(f"weak order size must be in 1..{WEAK_ORDER_MAX}")

    def ups(w):
        out = []
        for i in range(n - 1):
            if w[i] < w[i + 1]:
                v = list(w)
                v[i], v[i + 1] = v[i + 1], v[i]
                out.append(tuple(v))
        return out

    identity = tuple(range(1, n + 1))
    order = _bfs_index(identity, ups)
    perms = list(itertools.permutations(identity))
    covers = [(order[w], order[v]) for w in perms for v in ups(w)]
    names = [None] * len(order)
    for w, i in order.items():
        names[i] = "".join(map(str, w)) if n < 10 else " ".join(map(str, w))
    return build_lattice(len(order), covers, names, name=f"weak-order-{n}")


# -- registry ----------------------------------------------------------------

def _entry(name: str) -> CatalogEntry:
    if "*" in name:
        parts = [get(p) for p in name.split("*")]
        lat = parts[0].lattice
        for p in parts[1:]:
            lat = make_product(lat, p.lattice)
        return CatalogEntry(name, lat.renamed(name), all(p.torsion_type for p in parts),
                            "product of " + ", ".join(p.name for p in parts))
    if name == "pentagon":
        return CatalogEntry(name, make_pentagon(), True, "torsion classes of K(1->2)")
    if name == "m3":
        return CatalogEntry(name, make_m3(), False, "diamond M3, negative control")
    family, _, arg = name.rpartition("-")
    if not arg.isdigit() or family not in ("chain", "boolean", "tamari", "weak-order"):
        raise InvalidInput(f"unknown catalog entry {name!r}")
    k = int(arg)
    if family == "chain":
        # chains with three or more elements are not lattices of torsion
        # classes: the full interval is not a join-interval
        return CatalogEntry(name, make_chain(k), k <= 2, "chain")
    if family == "boolean":
        return CatalogEntry(name, make_boolean(k), True, f"torsion classes of K^{k}")
    if family == "tamari":
        return CatalogEntry(name, make_tamari(k), True, f"torsion classes of linear A_{k - 1}")
    return CatalogEntry(name, make_weak_order(k), True, f"torsion classes of the preprojective algebra of A_{k - 1}")


def get(name: str) -> CatalogEntry:
    return _entry(name.strip())


STANDARD_NAMES = (
    "chain-1", "chain-2", "chain-3",
    "boolean-2", "boolean-3",
    "pentagon",
    "tamari-2", "tamari-3", "tamari-4",
    "weak-order-2", "weak-order-3", "weak-order-4",
    "pentagon*chain-2", "boolean-2*chain-2", "tamari-3*chain-2", "chain-2*chain-2",
    "m3",
)


def standard_entries() -> list[CatalogEntry]:
    return [get(n) for n in STANDARD_NAMES]
