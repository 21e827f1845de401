"""JSON, DOT and text renderers.  Everything is emitted in a canonical order."""

from __future__ import annotations

import json

from .category import TccCategory
from .congruence import Congruence, contracted_labels
from .functor import InducedFunctor, lift_interval
from .intervals import enumerate_join_intervals
from .lattice import Lattice, completely_join_irreducibles, completely_meet_irreducibles

PRIME = "'"


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


# -- lattices ----------------------------------------------------------------

def lattice_summary(L: Lattice) -> dict:
    return {
        "lattice": L.to_dict(),
        "bottom": L.bottom,
        "top": L.top,
        "join_irreducibles": completely_join_irreducibles(L),
        "meet_irreducibles": completely_meet_irreducibles(L),
    }


def labels_to_dict(L: Lattice) -> dict:
    return {"arrows": [{"lower": x, "upper": y, "label": lab} for x, y, lab in L.labelled_hasse()]}


def lattice_to_dot(L: Lattice) -> str:
    lines = [
        "// Hasse diagram drawn bottom-up: an edge x -> y means x is covered by y.",
        "// (Hasse-quiver arrows in the literature point downward, y -> x.)",
        "// Edge labels are join-irreducible labels.",
        f"digraph {_dot_id(L.name or 'lattice')} {{",
        "  rankdir=BT;",
    ]
    for x in range(L.size):
        lines.append(f"  {x} [label={_dot_id(L.display(x))}];")
    labels = L.labels if L.is_labelled else {}
    for x, y in L.covers:
        lab = labels.get((x, y))
        attr = f" [label={_dot_id(str(lab))}]" if lab is not None else ""
        lines.append(f"  {x} -> {y}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- categories --------------------------------------------------------------

def category_to_dict(C: TccCategory, morphisms: bool = True) -> dict:
    out = {
        "objects": [dict(cls.to_dict(), id=k) for k, cls in enumerate(C.objects)],
        "hom_matrix": C.hom_matrix(),
        "zero_object": C.zero_object(),
        "full_object": C.full_object(),
        "morphism_count": len(C.morphisms),
        "irreducible_morphisms": [
            {"id": m.id, "source": m.source, "target": m.target, "descriptor": C.descriptor(m.id)}
            for m in C.morphisms if C.is_irreducible(m.id)
        ],
    }
    if morphisms:
        out["morphisms"] = [
            {"id": m.id, "source": m.source, "target": m.target,
             "outer": m.outer.to_dict(), "inner": m.inner.to_dict(),
             "descriptor": C.descriptor(m.id)}
            for m in C.morphisms
        ]
    return out


def category_to_dot(C: TccCategory) -> str:
    lines = [
        "// Quiver of irreducible morphisms; nodes are join-interval classes.",
        "digraph category {",
    ]
    for k, cls in enumerate(C.objects):
        labels = ",".join(map(str, sorted(cls.label_set)))
        lines.append(f"  o{k} [label={_dot_id(f'{cls.canonical.show()} {{{labels}}}')}];")
    for m in C.morphisms:
        if C.is_irreducible(m.id):
            lines.append(f"  o{m.source} -> o{m.target} [label={_dot_id(C.descriptor(m.id))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def category_to_text(C: TccCategory) -> str:
    lines = [f"objects: {len(C.objects)}  morphisms: {len(C.morphisms)}"]
    for k, cls in enumerate(C.objects):
        reps = " ".join(iv.show() for iv in cls.representatives)
        lines.append(f"  [{k}] rank {cls.rank} labels {sorted(cls.label_set)}: {reps}")
    lines.append("hom matrix:")
    lines.extend("  " + " ".join(f"{n:3d}" for n in row) for row in C.hom_matrix())
    return "\n".join(lines) + "\n"


def sequences_to_dict(C: TccCategory) -> dict:
    full = C.full_object()
    chains = C.complete_signed_sequences()
    return {
        "full_object": full,
        "complete_count": len(chains),
        "complete": [[C.descriptor(f) for f in chain] for chain in chains],
    }


# -- congruences and functors ------------------------------------------------

def congruence_to_dict(phi: Congruence) -> dict:
    out = phi.to_dict()
    out["contracted_labels"] = sorted(contracted_labels(phi))
    return out


def _desc(C: TccCategory, f: int, prime: str = "") -> str:
    return C.descriptor(f, prime=prime)


def functor_report(F: InducedFunctor) -> dict:
    C, D = F.source, F.target
    phi = F.congruence
    a = F.analysis
    flags = {k: v.holds for k, v in a.items()}

    witnesses = {}
    w = a["faithful"].witness
    if w:
        witnesses["faithful"] = {
            "identified": [_desc(C, f) for f in w],
            "image": _desc(D, F.mor_map[w[0]], PRIME),
        }
    w = a["full"].witness
    if w:
        witnesses["full"] = {
            "source_object": w["source"], "target_object": w["target"],
            "hom_size": w["hom_size"], "image_hom_size": w["image_hom_size"],
            "missing": [_desc(D, g, PRIME) for g in w["missing"]],
        }
    w = a["surjective_on_objects"].witness
    if w:
        witnesses["surjective_on_objects"] = {"missing_objects": w}
    if a["morphisms_in_essential_image"].holds:
        witnesses["morphisms_in_essential_image"] = {
            _desc(D, g, PRIME): _desc(C, f) for g, f in sorted(a["morphisms_in_essential_image"].witness.items())
        }
    else:
        witnesses["morphisms_in_essential_image"] = {
            "unliftable": [_desc(D, g, PRIME) for g in a["morphisms_in_essential_image"].witness]
        }
    w = a["image_generates_target"].witness
    if w:
        witnesses["image_generates_target"] = {"missing": [_desc(D, g, PRIME) for g in w]}

    Q = phi.quotient
    lifts = {iv.show(prime=PRIME): tuple(lift_interval(phi, iv)) for iv in enumerate_join_intervals(Q)}
    return {
        "congruence": congruence_to_dict(phi),
        "label_correspondence": {str(k): v for k, v in sorted(F.correspondence.items())},
        "flags": flags,
        "witnesses": witnesses,
        "object_map": F.obj_map,
        "morphism_map": [
            {"source": _desc(C, m.id), "image": _desc(D, F.mor_map[m.id], PRIME)}
            for m in C.morphisms
        ],
        "lifts": {k: {"bottom": v[0], "top": v[1]} for k, v in lifts.items()},
        "source_category": category_to_dict(C, morphisms=False),
        "target_category": category_to_dict(D, morphisms=False),
    }


def functor_report_text(report: dict) -> str:
    mark = {True: "✓", False: "✗"}
    lines = ["functor analysis:"]
    for k, v in report["flags"].items():
        lines.append(f"  {k.replace('_', '-')}: {mark[v]}")
    classes = " ".join("{" + ",".join(map(str, c)) + "}" for c in report["congruence"]["classes"])
    lines.append(f"classes: {classes}")
    lines.append(f"contracted labels: {report['congruence']['contracted_labels']}")
    lines.append("morphism images:")
    lines.extend(f"  {m['source']} -> {m['image']}" for m in report["morphism_map"])
    lines.append("lifts:")
    lines.extend(f"  {k} -> [{v['bottom']},{v['top']}]" for k, v in report["lifts"].items())
    return "\n".join(lines) + "\n"
