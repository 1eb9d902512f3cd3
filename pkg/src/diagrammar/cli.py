"""Command line front end.

``parse`` turns a sentence into a derivation under a grammar file,
``normalize`` rewrites diagram JSON to normal form, ``eval`` contracts a
diagram under a tensor model, ``check`` reports structural predicates,
``dot`` renders diagrams. Exit status: 0 success, 1 ungrammatical
sentence, 2 malformed input.
"""

import argparse
import json
import sys

from . import dot, hypergraph, monoidal, operad, readers, rigid, tensor
from .cat import parse_regular
from .errors import DiagrammarError, MalformedInput


def _read_path(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_json(path):
    return json.loads(_read_path(path))


def _emit(text):
    sys.stdout.write(text)
    return 0


def _tokens(sentence):
    if " " in sentence.strip():
        return sentence.split()
    return list(sentence.strip()) or [""]


def cmd_parse(args):
    kind = readers.grammar_kind(args.grammar)
    grammar = readers.read_grammar(_read_path(args.grammar), kind)
    fmt = args.format or ("text" if kind == ".cfg" else "json")
    if kind == ".rg":
        arrow = parse_regular(grammar, _tokens(args.sentence))
        if arrow is None:
            return 1
        payload = {"labels": [box.name for box in arrow.boxes],
                   "vertices": [str(arrow.dom)]
                   + [str(box.cod) for box in arrow.boxes]}
        if fmt == "text":
            return _emit(" ".join(payload["labels"]) + "\n")
        return _emit(readers.dumps(payload))
    words = args.sentence.split()
    if kind == ".cfg":
        tree = operad.parse_cfg(grammar, words)
        if tree is None:
            return 1
        if fmt == "text":
            return _emit(str(tree) + "\n")
        return _emit(readers.dumps(readers.tree_to_json(tree)))
    if kind == ".dep":
        grammar = readers.dependency_as_pregroup(grammar)
    diagram = rigid.parse_pregroup(grammar, words)
    if diagram is None:
        return 1
    if fmt == "dot":
        return _emit(dot.to_dot(diagram))
    if fmt == "text":
        return _emit(repr(diagram) + "\n")
    return _emit(readers.dumps(readers.diagram_to_json(diagram)))


def cmd_normalize(args):
    diagram = readers.diagram_from_json(_load_json(args.diagram))
    if isinstance(diagram, hypergraph.Diagram):
        result = diagram.canonical()
    elif readers._is_rigid(diagram):
        result = rigid.normal_form(diagram)
    else:
        result = diagram.normal_form()
    if args.format == "dot":
        return _emit(dot.to_dot(result))
    return _emit(readers.dumps(readers.diagram_to_json(result)))


def cmd_eval(args):
    diagram = readers.diagram_from_json(_load_json(args.diagram))
    if isinstance(diagram, hypergraph.Diagram):
        diagram = diagram.downgrade()
    semiring = tensor.SEMIRINGS[args.semiring.title()] \
        if args.semiring else None
    functor = readers.functor_from_json(_load_json(args.functor), semiring)
    result = functor(diagram)
    return _emit(readers.dumps(readers.array_to_json(result)))


def cmd_check(args):
    diagram = readers.diagram_from_json(_load_json(args.diagram))
    if not isinstance(diagram, hypergraph.Diagram):
        diagram = hypergraph.from_rigid(diagram)
    return _emit(readers.dumps(hypergraph.structure_checks(diagram)))


def cmd_dot(args):
    diagram = readers.diagram_from_json(_load_json(args.diagram))
    return _emit(dot.to_dot(diagram))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="diagrammar",
        description="string diagrams for formal grammars")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a sentence under a grammar file")
    p.add_argument("--grammar", required=True,
                   help="grammar file (.rg, .cfg, .pg or .dep)")
    p.add_argument("--sentence", required=True)
    p.add_argument("--format", choices=["json", "dot", "text"])
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("normalize", help="rewrite diagram JSON to normal form")
    p.add_argument("diagram", help="diagram JSON path or -")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("eval", help="contract a diagram under a tensor model")
    p.add_argument("diagram", help="diagram JSON path or -")
    p.add_argument("--functor", required=True, help="functor JSON path or -")
    p.add_argument("--semiring",
                   choices=["bool", "nat", "real", "complex"])
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", help="report structural predicates")
    p.add_argument("diagram", help="diagram JSON path or -")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("dot", help="render diagram JSON as DOT")
    p.add_argument("diagram", help="diagram JSON path or -")
    p.set_defaults(run=cmd_dot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except json.JSONDecodeError as exc:
        print("error: line {}, column {}: {}".format(
            exc.lineno, exc.colno, exc.msg), file=sys.stderr)
        return 2
    except MalformedInput as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return 2
    except DiagrammarError as exc:
        print("error: {}: {}".format(type(exc).__name__, exc),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
