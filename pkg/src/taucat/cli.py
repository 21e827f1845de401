"""Command-line interface.

Lattice arguments are JSON files in the standard lattice schema, or
``catalog:NAME`` for a built-in lattice.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .category import build_category
from .congruence import contracted_labels, label_correspondence, parse_congruence_spec
from .errors import InvalidInput, NotSemidistributive, TauCatError
from .export import (
    category_to_dict,
    category_to_dot,
    category_to_text,
    congruence_to_dict,
    dumps,
    functor_report,
    functor_report_text,
    labels_to_dict,
    lattice_summary,
    lattice_to_dot,
    sequences_to_dict,
)
from .functor import analyze, induced_functor
from .lattice import completely_join_irreducibles, is_semidistributive, load_lattice
from .presentations import cw_f_vector, nerve_export, picture_group, picture_group_hom


def _lattice(arg: str):
    if arg.startswith("catalog:"):
        return catalog.get(arg[len("catalog:"):]).lattice
    return load_lattice(arg)


def _congruence(L, path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read congruence file {path}: {exc}") from exc
    return parse_congruence_spec(L, data)


def _require_semidistributive(L):
    ok, witness = is_semidistributive(L)
    if not ok:
        raise NotSemidistributive(
            f"{witness['law']} semidistributivity fails at u={witness['u']}, "
            f"x={witness['x']}, y={witness['y']}",
            witness=witness,
        )
    L.labels  # raises NoMinimumLabel when some cover is unlabelled


def _verify(args) -> bool:
    return args.verify == "full"


# -- commands ----------------------------------------------------------------
# each returns the text to write

def cmd_check(args) -> str:
    L = _lattice(args.lattice)
    _require_semidistributive(L)
    if args.format == "json":
        return dumps({"lattice": True, "semidistributive": True, "labelled": True,
                      "size": L.size, "arrows": len(L.covers)})
    return "lattice ✓, semidistributive ✓, labelled ✓\n"


def cmd_jirr(args) -> str:
    L = _lattice(args.lattice)
    data = lattice_summary(L)
    if args.format == "json":
        return dumps(data)
    return "join-irreducibles: " + " ".join(map(str, data["join_irreducibles"])) + "\n"


def cmd_labels(args) -> str:
    L = _lattice(args.lattice)
    _require_semidistributive(L)
    if args.format == "json":
        return dumps(labels_to_dict(L))
    if args.format == "dot":
        return lattice_to_dot(L)
    return "".join(f"{x} -> {y}: {lab}\n" for x, y, lab in L.labelled_hasse())


def _category(args):
    L = _lattice(args.lattice)
    _require_semidistributive(L)
    return L, build_category(L, verify="auto" if _verify(args) else False)


def cmd_category(args) -> str:
    _, C = _category(args)
    if args.format == "dot":
        return category_to_dot(C)
    if args.format == "text":
        return category_to_text(C)
    return dumps(category_to_dict(C))


def cmd_quotient(args) -> str:
    L = _lattice(args.lattice)
    _require_semidistributive(L)
    phi = _congruence(L, args.congruence)
    data = congruence_to_dict(phi)
    data["label_correspondence"] = {str(k): v for k, v in sorted(label_correspondence(phi).items())}
    if args.format == "dot":
        return lattice_to_dot(phi.quotient)
    if args.format == "text":
        classes = " ".join("{" + ",".join(map(str, c)) + "}" for c in phi.classes)
        return (f"classes: {classes}\n"
                f"contracted labels: {sorted(contracted_labels(phi))}\n"
                f"quotient: {phi.quotient.size} elements, covers {[list(c) for c in phi.quotient.covers]}\n")
    return dumps(data)


def cmd_functor(args) -> str:
    L = _lattice(args.lattice)
    _require_semidistributive(L)
    phi = _congruence(L, args.congruence)
    F = induced_functor(L, phi, verify=_verify(args))
    analyze(F)
    report = functor_report(F)
    if args.format == "text":
        return functor_report_text(report)
    return dumps(report)


def cmd_sequences(args) -> str:
    _, C = _category(args)
    data = sequences_to_dict(C)
    if args.format == "text":
        lines = [f"complete signed sequences: {data['complete_count']}"]
        lines.extend("  " + " ; ".join(chain) for chain in data["complete"])
        return "\n".join(lines) + "\n"
    return dumps(data)


def cmd_picture_group(args) -> str:
    L = _lattice(args.lattice)
    _require_semidistributive(L)
    if args.congruence:
        hom = picture_group_hom(_congruence(L, args.congruence))
        if args.format == "text":
            lines = [f"{k} -> {v}" for k, v in hom.to_dict()["generator_map"].items()]
            lines += [f"{s}  |->  {i}  [{st}]" for s, i, st in hom.relation_images + hom.simplified_images]
            return "\n".join(lines) + "\n"
        return dumps(hom.to_dict())
    P = picture_group(L)
    if args.format == "text":
        return P.simplified.to_text() if args.simplified else P.to_text()
    return dumps(P.to_dict())


def cmd_nerve(args) -> str:
    _, C = _category(args)
    cells = cw_f_vector(C)
    nerve = nerve_export(C, args.max_dim)
    if args.format == "text":
        return (f"f-vector: {list(cells.f_vector)}\n"
                f"euler characteristic: {cells.euler_characteristic}\n"
                f"nerve simplex counts (dim <= {args.max_dim}): {nerve['simplex_counts']}\n")
    return dumps({"cells": cells.to_dict(), "nerve": nerve})


def cmd_catalog(args) -> str:
    if args.action == "list":
        entries = catalog.standard_entries()
        if args.format == "json":
            return dumps([{"name": e.name, "size": e.lattice.size, "torsion_type": e.torsion_type,
                           "provenance": e.provenance} for e in entries])
        return "".join(f"{e.name}\t{e.lattice.size}\t{'torsion-type' if e.torsion_type else '-'}\t{e.provenance}\n"
                       for e in entries)
    if not args.name:
        raise InvalidInput("catalog emit needs a NAME")
    return dumps(catalog.get(args.name).lattice.to_dict())


def cmd_export_dot(args) -> str:
    return lattice_to_dot(_lattice(args.lattice))


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taucat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("json", "text"), default="json", lattice=True):
        p = sub.add_parser(name, help=help_text)
        if lattice:
            p.add_argument("lattice", help="lattice JSON file or catalog:NAME")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        p.add_argument("--verify", choices=("full", "fast"), default="full",
                       help="fast skips axiom and well-definedness checks")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "validate a lattice", default="text")
    add("jirr", cmd_jirr, "join- and meet-irreducibles")
    add("labels", cmd_labels, "join-irreducible arrow labels", formats=("json", "text", "dot"))
    add("category", cmd_category, "objects and Hom-sets of the category",
        formats=("json", "text", "dot"))
    p = add("quotient", cmd_quotient, "quotient by a congruence", formats=("json", "text", "dot"))
    p.add_argument("congruence", help="congruence JSON file")
    p = add("functor", cmd_functor, "induced functor analysis")
    p.add_argument("congruence", help="congruence JSON file")
    add("sequences", cmd_sequences, "complete signed sequences")
    p = add("picture-group", cmd_picture_group, "picture group presentation", default="text")
    p.add_argument("--congruence", help="emit the induced homomorphism instead")
    p.add_argument("--simplified", action="store_true", help="text: only the g-eliminated form")
    p = add("nerve", cmd_nerve, "cell counts and nerve simplices")
    p.add_argument("--max-dim", type=int, default=3)
    p = add("catalog", cmd_catalog, "built-in lattices", default="text", lattice=False)
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    add("export-dot", cmd_export_dot, "Hasse diagram as DOT", formats=("dot",), default="dot")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_dim", 0) < 0:
        parser.error("--max-dim must be non-negative")
    try:
        text = args.func(args)
    except TauCatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print("witness: " + json.dumps(exc.witness, sort_keys=True, default=str), file=sys.stderr)
        return exc.exit_code
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
