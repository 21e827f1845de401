"""Picture-group presentations, the induced group homomorphism, and cell data.

Words are tuples of ``(generator, exponent)`` pairs with exponent ±1.
Relations ``(lhs, rhs)`` read ``lhs = rhs``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .category import TccCategory
from .congruence import Congruence, contracted_labels, label_correspondence
from .errors import RelationImageUnmatched
from .lattice import Lattice, completely_join_irreducibles

Word = tuple


def X(j: int) -> str:
    return f"X{j}"


def g(t: int) -> str:
    return f"g{t}"


def reduce_word(word) -> Word:
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert(word) -> Word:
    return tuple((s, -e) for s, e in reversed(word))


def format_word(word) -> str:
    if not word:
        return "e"
    return "".join(s if e == 1 else f"{s}^-1" for s, e in word)


def relator(lhs, rhs) -> Word:
    """Cyclically reduced form of lhs * rhs^-1."""
    w = list(reduce_word(tuple(lhs) + invert(rhs)))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def relator_key(r) -> Word:
    """Least cyclic rotation of r or its inverse; equal keys mean the same relator."""
    if not r:
        return ()
    candidates = []
    for w in (r, invert(r)):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates)


@dataclass
class GroupPresentation:
    generators: list
    relations: list  # (lhs, rhs) word pairs
    simplified: Optional["GroupPresentation"] = None
    tree: dict = field(default_factory=dict)  # g name -> word in the X's

    def relation_strings(self) -> list[str]:
        return [f"{format_word(a)} = {format_word(b)}" for a, b in self.relations]

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators)]
        lines.extend(self.relation_strings())
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        out = {
            "generators": list(self.generators),
            "relations": self.relation_strings(),
        }
        if self.simplified is not None:
            out["simplified"] = self.simplified.to_dict()
            out["g_elimination"] = {k: format_word(v) for k, v in self.tree.items()}
        return out


def _arrow_relations(L: Lattice):
    # one relation per Hasse arrow: g_upper = X_label g_lower
    rels = []
    for x, y in sorted(L.covers):
        rels.append((((g(y), 1),), ((X(L.label(x, y)), 1), (g(x), 1))))
    return rels


def _spanning_words(L: Lattice) -> dict:
    """g_T as a word in the X's along a breadth-first tree from the bottom."""
    words = {L.bottom: ()}
    queue = deque([L.bottom])
    while queue:
        x = queue.popleft()
        for y in sorted(L.upper_covers[x]):
            if y not in words:
                words[y] = ((X(L.label(x, y)), 1),) + words[x]
                queue.append(y)
    return words


def picture_group(L: Lattice) -> GroupPresentation:
    """Full presentation plus the form with every g_T eliminated."""
    jirr = completely_join_irreducibles(L)
    gens = [X(j) for j in jirr] + [g(t) for t in range(L.size)]
    rels = _arrow_relations(L) + [(((g(L.bottom), 1),), ())]

    words = _spanning_words(L)
    tree_edges = set()
    seen = {L.bottom}
    queue = deque([L.bottom])
    while queue:
        x = queue.popleft()
        for y in sorted(L.upper_covers[x]):
            if y not in seen:
                seen.add(y)
                tree_edges.add((x, y))
                queue.append(y)

    simple = []
    for x, y in sorted(L.covers):
        if (x, y) in tree_edges:
            continue
        simple.append((words[y], ((X(L.label(x, y)), 1),) + words[x]))
    simplified = GroupPresentation([X(j) for j in jirr], simple)
    return GroupPresentation(gens, rels, simplified, {g(t): words[t] for t in range(L.size)})


@dataclass
class PictureGroupHom:
    source: GroupPresentation
    target: GroupPresentation
    generator_map: dict  # generator name -> word
    relation_images: list  # (source relation string, image string, status)
    simplified_images: list

    def to_dict(self) -> dict:
        return {
            "generator_map": {k: format_word(v) for k, v in self.generator_map.items()},
            "relations": [{"source": s, "image": i, "status": st}
                          for s, i, st in self.relation_images],
            "simplified_relations": [{"source": s, "image": i, "status": st}
                                     for s, i, st in self.simplified_images],
        }


def apply_map(mapping: dict, word) -> Word:
    out = []
    for s, e in word:
        img = mapping[s]
        out.extend(img if e == 1 else invert(img))
    return reduce_word(out)


def picture_group_hom(phi: Congruence) -> PictureGroupHom:
    """X_j -> X_proj(j) (or e when j is contracted), g_T -> g_proj(T)."""
    L, Q = phi.host, phi.quotient
    corr = label_correspondence(phi)
    contracted = contracted_labels(phi)
    src, tgt = picture_group(L), picture_group(Q)

    mapping = {}
    for j in completely_join_irreducibles(L):
        mapping[X(j)] = () if j in contracted else ((X(corr[j]), 1),)
    for t in range(L.size):
        mapping[g(t)] = ((g(phi.proj[t]), 1),)

    # surjectivity on the target generators, checked syntactically
    hit = {w[0][0] for w in mapping.values() if w}
    missing = sorted(set(tgt.generators) - hit)
    if missing:
        raise RelationImageUnmatched(f"target generators {missing} are not hit")

    target_rels = {(a, b) for a, b in tgt.relations}
    images = []
    for (a, b), text in zip(src.relations, src.relation_strings()):
        ia, ib = apply_map(mapping, a), apply_map(mapping, b)
        shown = f"{format_word(ia)} = {format_word(ib)}"
        if ia == ib:
            images.append((text, shown, "trivial"))
        elif (ia, ib) in target_rels:
            images.append((text, shown, "matched"))
        else:
            raise RelationImageUnmatched(
                f"relation {text} maps to {shown}, which is neither trivial nor a target relation",
                witness={"relation": text, "image": shown},
            )

    # eliminated forms only need to hold in the target group; anything not
    # literally matched is reported rather than decided
    target_keys = {relator_key(relator(a, b)) for a, b in tgt.simplified.relations}
    simple_images = []
    for (a, b), text in zip(src.simplified.relations, src.simplified.relation_strings()):
        ia, ib = apply_map(mapping, a), apply_map(mapping, b)
        shown = f"{format_word(ia)} = {format_word(ib)}"
        key = relator_key(relator(ia, ib))
        if not key:
            status = "trivial"
        elif key in target_keys:
            status = "matched"
        else:
            status = "consequence"
        simple_images.append((text, shown, status))
    return PictureGroupHom(src, tgt, mapping, images, simple_images)


# -- cell data ---------------------------------------------------------------

@dataclass
class CellData:
    f_vector: tuple
    euler_characteristic: int
    nerve: Optional[tuple] = None

    def to_dict(self) -> dict:
        out = {"f_vector": list(self.f_vector), "euler_characteristic": self.euler_characteristic}
        if self.nerve is not None:
            out["nerve"] = list(self.nerve)
        return out


def cw_f_vector(C: TccCategory) -> CellData:
    """Object classes counted by rank: one cell per class."""
    top = max(cls.rank for cls in C.objects)
    f = [0] * (top + 1)
    for cls in C.objects:
        f[cls.rank] += 1
    return CellData(tuple(f), sum((-1) ** k * n for k, n in enumerate(f)))


def nerve_counts(C: TccCategory, max_dim: int = 3) -> tuple:
    """Number of chains of k composable non-identity morphisms, k = 0..max_dim."""
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    # ending[o] = number of chains of the current length ending at object o
    ending = [1] * len(C.objects)
    counts = [len(C.objects)]
    for _ in range(max_dim):
        nxt = [0] * len(C.objects)
        for m in C.morphisms:
            if not m.is_identity:
                nxt[m.target] += ending[m.source]
        ending = nxt
        counts.append(sum(nxt))
    return tuple(counts)


def nerve_chains(C: TccCategory, max_dim: int = 3) -> list[list[tuple]]:
    """Explicit chains by dimension; dimension 0 lists objects as 1-tuples."""
    chains = [[(o,) for o in range(len(C.objects))]]
    current = [(m.id,) for m in C.morphisms if not m.is_identity]
    for _ in range(max_dim):
        chains.append(current)
        current = [c + (g2,) for c in current
                   for g2 in C.outgoing(C.morphisms[c[-1]].target)
                   if not C.morphisms[g2].is_identity]
    return chains[: max_dim + 1]


def nerve_export(C: TccCategory, max_dim: int = 3) -> dict:
    counts = nerve_counts(C, max_dim)
    chains = nerve_chains(C, max_dim)
    return {
        "max_dim": max_dim,
        "simplex_counts": list(counts),
        "alternating_sum": sum((-1) ** k * n for k, n in enumerate(counts)),
        "simplices": [[list(c) for c in level] for level in chains],
    }
