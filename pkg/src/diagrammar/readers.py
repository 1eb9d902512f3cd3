"""Text formats for grammars and JSON formats for diagrams and models.

Grammar files are line-oriented: ``#`` starts a comment, blank lines are
skipped, and the file extension picks the dialect (.rg regular, .cfg
context-free, .pg pregroup, .dep dependency). Diagrams and tensor models
travel as JSON dictionaries with a ``kind`` tag.
"""

import json

import numpy as np

from . import cat, hypergraph, monoidal, operad, rigid, tensor
from .errors import MalformedInput


# ---------------------------------------------------------------------------
# Pregroup-type text.
# ---------------------------------------------------------------------------

def parse_ob(token, line=None):
    """Read ``name``, ``name.l`` or ``name.r.r`` into a winding object."""
    parts = token.split(".")
    if not parts[0]:
        raise MalformedInput("empty type name in {!r}".format(token), line)
    z = 0
    for part in parts[1:]:
        if part == "l":
            z -= 1
        elif part == "r":
            z += 1
        else:
            raise MalformedInput(
                "bad adjoint marker {!r} in {!r}".format(part, token), line)
    return rigid.Ob(parts[0], z)


def parse_ty(text, line=None):
    return rigid.Ty(*[parse_ob(tok, line) for tok in text.split()])


# ---------------------------------------------------------------------------
# Grammar files.
# ---------------------------------------------------------------------------

def _lines(text):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _split_colon(line, number):
    if ":" not in line:
        raise MalformedInput("expected ':' in {!r}".format(line), number)
    head, _, tail = line.partition(":")
    return head.strip(), tail.strip()


def read_regular(text):
    """``START q0`` / ``END q2`` / one ``EDGE q0 label q1`` line per edge."""
    start = end = None
    edges = []
    for number, line in _lines(text):
        parts = line.split()
        if parts[0] == "START" and len(parts) == 2:
            start = cat.Ob(parts[1])
        elif parts[0] == "END" and len(parts) == 2:
            end = cat.Ob(parts[1])
        elif parts[0] == "EDGE" and len(parts) == 4:
            src, label, dst = parts[1:]
            edges.append(cat.Box(label, cat.Ob(src), cat.Ob(dst)))
        else:
            raise MalformedInput(
                "expected START, END or EDGE directive, got {!r}".format(
                    line), number)
    if start is None or end is None:
        raise MalformedInput("regular grammar needs START and END")
    return cat.RegularGrammar(edges, start, end)


def read_cfg(text):
    """``SENTENCE S``, binary rules ``S -> VP NP``, lexical ``N -> 'word'``."""
    sentence = None
    rules = []
    nonterminals, terminals = set(), set()
    for number, line in _lines(text):
        if line.startswith("SENTENCE "):
            sentence = cat.Ob(line[9:].strip())
            nonterminals.add(sentence)
            continue
        if "->" not in line:
            raise MalformedInput(
                "expected SENTENCE or a '->' rule, got {!r}".format(line),
                number)
        head, _, tail = line.partition("->")
        head = cat.Ob(head.strip())
        nonterminals.add(head)
        symbols = tail.split()
        if len(symbols) == 1 and symbols[0][:1] == "'" \
                and symbols[0][-1:] == "'" and len(symbols[0]) > 2:
            token = symbols[0][1:-1]
            terminals.add(token)
            rules.append(operad.Node(token, head, []))
        elif len(symbols) == 2 \
                and not any("'" in symbol for symbol in symbols):
            cod = [cat.Ob(s) for s in symbols]
            nonterminals.update(cod)
            rules.append(operad.Node(head.name, head, cod))
        else:
            raise MalformedInput(
                "rule must be binary (two symbols) or lexical (one quoted "
                "word), got {!r}".format(line), number)
    if sentence is None:
        raise MalformedInput("context-free grammar needs SENTENCE")
    return operad.Cfg(nonterminals, terminals, sentence, rules)


def read_pregroup(text):
    """``SENTENCE s``, optional ``INDUCED a -> b``, words ``w : n.r s``."""
    sentence = None
    induced = []
    lexicon = {}
    for number, line in _lines(text):
        if line.startswith("SENTENCE "):
            sentence = parse_ob(line[9:].strip(), number)
        elif line.startswith("INDUCED "):
            rest = line[8:]
            if "->" not in rest:
                raise MalformedInput(
                    "expected 'a -> b' in {!r}".format(line), number)
            a, _, b = rest.partition("->")
            induced.append((parse_ob(a.strip(), number),
                            parse_ob(b.strip(), number)))
        else:
            word, ty_text = _split_colon(line, number)
            if not ty_text:
                raise MalformedInput("empty type for {!r}".format(word),
                                     number)
            lexicon.setdefault(word, []).append(parse_ty(ty_text, number))
    if sentence is None:
        raise MalformedInput("pregroup grammar needs SENTENCE")
    return rigid.PregroupGrammar(lexicon, sentence, induced)


def read_dependency(text):
    """``SENTENCE s``, ``ROOT v``, ``HEAD v : l1 l2 * r1``, ``WORD w : v``."""
    sentence = None
    heads, words, roots = set(), {}, set()
    for number, line in _lines(text):
        if line.startswith("SENTENCE "):
            sentence = line[9:].strip()
        elif line.startswith("ROOT "):
            roots.add(line[5:].strip())
        elif line.startswith("HEAD "):
            symbol, deps = _split_colon(line[5:], number)
            if "*" not in deps:
                raise MalformedInput(
                    "head rule needs '*' between sides, got {!r}".format(
                        line), number)
            left, _, right = deps.partition("*")
            heads.add((symbol, tuple(left.split()), tuple(right.split())))
        elif line.startswith("WORD "):
            word, symbol = _split_colon(line[5:], number)
            words.setdefault(word, []).append(symbol)
        else:
            raise MalformedInput("unknown directive {!r}".format(line),
                                 number)
    if sentence is None or not roots:
        raise MalformedInput("dependency grammar needs SENTENCE and ROOT")
    return rigid.DependencyGrammar(heads, words, roots, sentence)


_READERS = {".rg": read_regular, ".cfg": read_cfg,
            ".pg": read_pregroup, ".dep": read_dependency}


def grammar_kind(path):
    for extension in _READERS:
        if str(path).endswith(extension):
            return extension
    raise MalformedInput(
        "cannot infer grammar kind from {!r}; expected one of {}".format(
            str(path), " ".join(sorted(_READERS))))


def read_grammar(text, kind):
    return _READERS[kind](text)


def dependency_as_pregroup(grammar):
    """The pregroup lexicon induced by a dependency grammar.

    Every word gets, per symbol, the bare symbol type plus one type per
    head rule of that symbol; root symbols reduce to the sentence symbol
    through induced steps.
    """
    lexicon = {}
    for word, symbols in grammar.rules_word.items():
        types = []
        for symbol in symbols:
            types.append(rigid.Ty(symbol))
            for head, left, right in sorted(grammar.rules_head):
                if head == symbol:
                    types.append(
                        rigid.dependency_lexical_type(symbol, left, right))
        lexicon[word] = types
    induced = [(root, grammar.sentence) for root in sorted(grammar.rules_root)
               if rigid.Ob(root) != rigid.Ob(grammar.sentence)]
    return rigid.PregroupGrammar(lexicon, grammar.sentence, induced)


# ---------------------------------------------------------------------------
# Tree JSON.
# ---------------------------------------------------------------------------

def tree_to_json(tree):
    if isinstance(tree, operad.Id):
        return {"id": str(tree.dom)}
    return {"root": tree.root.name,
            "dom": str(tree.root.dom),
            "branches": [tree_to_json(b) for b in tree.branches]}


# ---------------------------------------------------------------------------
# Diagram JSON.
# ---------------------------------------------------------------------------

def _ty_json(ty):
    return [str(ob) for ob in ty.objects]


def _is_rigid(diagram):
    tys = [diagram.dom, diagram.cod]
    for box in diagram.boxes:
        tys += [box.dom, box.cod]
    return any(isinstance(ob, rigid.Ob) for ty in tys for ob in ty.objects) \
        or any(isinstance(box, (rigid.Cup, rigid.Cap))
               for box in diagram.boxes)


def _box_json(box):
    if isinstance(box, rigid.Cup):
        return {"box": "cup", "left": str(box.dom.objects[0]),
                "right": str(box.dom.objects[1])}
    if isinstance(box, rigid.Cap):
        return {"box": "cap", "left": str(box.cod.objects[0]),
                "right": str(box.cod.objects[1])}
    if isinstance(box, hypergraph.SpiderBox):
        return {"box": "spider", "dom": _ty_json(box.dom),
                "cod": _ty_json(box.cod), "base": str(box.base)}
    if isinstance(box, hypergraph.SwapBox):
        return {"box": "swap", "left": _ty_json(box.left),
                "right": _ty_json(box.right)}
    return {"box": "box", "name": box.name,
            "dom": _ty_json(box.dom), "cod": _ty_json(box.cod)}


def diagram_to_json(diagram):
    if isinstance(diagram, hypergraph.Diagram):
        return {
            "kind": "hypergraph",
            "dom": _ty_json(diagram.dom),
            "cod": _ty_json(diagram.cod),
            "boxes": [{"name": box.name, "dom": _ty_json(box.dom),
                       "cod": _ty_json(box.cod)} for box in diagram.boxes],
            "wires": list(diagram.wires),
            "spider_types": {str(s): str(t)
                             for s, t in sorted(diagram.spider_types.items())},
        }
    kind = "rigid" if _is_rigid(diagram) else "monoidal"
    return {
        "kind": kind,
        "dom": _ty_json(diagram.dom),
        "cod": _ty_json(diagram.cod),
        "boxes": [_box_json(box) for box in diagram.boxes],
        "offsets": list(diagram.offsets),
    }


def _rigid_ty(names):
    return rigid.Ty(*[parse_ob(name) for name in names])


def _box_from_json(data, rigid_kind):
    kind = data.get("box", "box")
    if kind == "cup":
        return rigid.Cup(parse_ob(data["left"]), parse_ob(data["right"]))
    if kind == "cap":
        return rigid.Cap(parse_ob(data["left"]), parse_ob(data["right"]))
    if kind == "spider":
        return hypergraph.SpiderBox(
            _rigid_ty(data["dom"]), _rigid_ty(data["cod"]),
            parse_ob(data["base"]))
    if kind == "swap":
        return hypergraph.SwapBox(
            _rigid_ty(data["left"]), _rigid_ty(data["right"]))
    if kind != "box":
        raise MalformedInput("unknown box kind {!r}".format(kind))
    if rigid_kind:
        return rigid.Box(data["name"], _rigid_ty(data["dom"]),
                         _rigid_ty(data["cod"]))
    return monoidal.Box(data["name"], monoidal.Ty(*data["dom"]),
                        monoidal.Ty(*data["cod"]))


def _marked(name):
    parts = str(name).split(".")
    return len(parts) > 1 and all(p in ("l", "r") for p in parts[1:])


def _infer_kind(data):
    if "wires" in data:
        return "hypergraph"
    names = list(data.get("dom", [])) + list(data.get("cod", []))
    for box in data.get("boxes", []):
        if box.get("box", "box") != "box":
            return "rigid"
        names += list(box.get("dom", [])) + list(box.get("cod", []))
    return "rigid" if any(_marked(n) for n in names) else "monoidal"


def diagram_from_json(data):
    try:
        kind = data.get("kind") or _infer_kind(data)
        if kind == "hypergraph":
            return hypergraph.Diagram(
                _rigid_ty(data["dom"]), _rigid_ty(data["cod"]),
                [rigid.Box(b["name"], _rigid_ty(b["dom"]),
                           _rigid_ty(b["cod"])) for b in data["boxes"]],
                list(data["wires"]),
                {int(s): parse_ob(t)
                 for s, t in data.get("spider_types", {}).items()})
        if kind == "rigid":
            boxes = [_box_from_json(b, True) for b in data["boxes"]]
            return monoidal.Diagram(
                _rigid_ty(data["dom"]), _rigid_ty(data["cod"]),
                boxes, list(data["offsets"]))
        if kind == "monoidal":
            boxes = [_box_from_json(b, False) for b in data["boxes"]]
            return monoidal.Diagram(
                monoidal.Ty(*data["dom"]), monoidal.Ty(*data["cod"]),
                boxes, list(data["offsets"]))
        raise MalformedInput("unknown diagram kind {!r}".format(kind))
    except (KeyError, TypeError) as exc:
        raise MalformedInput("bad diagram JSON: {}".format(exc))


# ---------------------------------------------------------------------------
# Tensor JSON.
# ---------------------------------------------------------------------------

def _encode_entry(value, semiring):
    if semiring is tensor.Bool:
        return bool(value)
    if semiring is tensor.Nat:
        return int(value)
    if semiring is tensor.Complex:
        return [float(value.real), float(value.imag)]
    return float(value)


def _decode_array(values, semiring):
    if semiring is tensor.Complex:
        return np.asarray(
            [complex(re, im) for re, im in values], np.complex128)
    return np.asarray(values, semiring.dtype)


def tensor_to_json(t):
    return {"semiring": t.semiring.tag.lower(),
            "dom": list(t.dom), "cod": list(t.cod),
            "array": [_encode_entry(v, t.semiring)
                      for v in t.array.reshape(-1).tolist()]}


def array_to_json(t):
    """Just the flat array of a tensor, the shape left implicit."""
    return [_encode_entry(v, t.semiring)
            for v in np.asarray(t.array).reshape(-1).tolist()]


def functor_from_json(data, semiring=None):
    """Build a tensor functor from ``{"semiring", "ob", "ar"}``.

    ``ob`` maps basic type names to dimensions, ``ar`` maps box names to
    flat arrays (pairs [re, im] under the complex semiring). A semiring
    passed explicitly overrides the one in the file.
    """
    try:
        if semiring is None:
            semiring = tensor.SEMIRINGS[data.get("semiring", "real").title()]
        dims = {str(k): v for k, v in data["ob"].items()}
        arrays = {str(k): v for k, v in data.get("ar", {}).items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise MalformedInput("bad functor JSON: {}".format(exc))

    def ob(x):
        try:
            return dims[x.name]
        except KeyError:
            raise MalformedInput("no dimension for type {}".format(x.name))

    def ar(box):
        try:
            return _decode_array(arrays[box.name], semiring)
        except KeyError:
            raise MalformedInput("no array for box {}".format(box.name))

    return tensor.Functor(ob=ob, ar=ar, semiring=semiring)


# ---------------------------------------------------------------------------
# Categorial types: ``a >> b``, ``a << b``, parentheses, juxtaposed tensor.
# ---------------------------------------------------------------------------

def _tokenize_biclosed(text, line):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif text[i:i + 2] in (">>", "<<"):
            tokens.append(text[i:i + 2])
            i += 2
        elif c in "()":
            tokens.append(c)
            i += 1
        elif c.isalnum() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise MalformedInput(
                "bad character {!r} in type {!r}".format(c, text),
                line, i + 1)
    return tokens


def parse_biclosed_ty(text, line=None):
    """Read ``n >> s << n`` into a biclosed type (left-associated)."""
    from . import biclosed
    tokens = _tokenize_biclosed(text, line)
    pos = [0]

    def atom():
        if pos[0] >= len(tokens):
            raise MalformedInput(
                "type ends unexpectedly in {!r}".format(text), line)
        tok = tokens[pos[0]]
        if tok == "(":
            pos[0] += 1
            inner = expr()
            if pos[0] >= len(tokens) or tokens[pos[0]] != ")":
                raise MalformedInput(
                    "unbalanced parentheses in {!r}".format(text), line)
            pos[0] += 1
            return inner
        if tok in (">>", "<<", ")"):
            raise MalformedInput(
                "expected a type name, got {!r} in {!r}".format(tok, text),
                line)
        pos[0] += 1
        return biclosed.Ty(tok)

    def expr():
        left = atom()
        while pos[0] < len(tokens) and tokens[pos[0]] in (">>", "<<"):
            op = tokens[pos[0]]
            pos[0] += 1
            right = atom()
            left = left >> right if op == ">>" else left << right
        return left

    result = expr()
    if pos[0] != len(tokens):
        raise MalformedInput(
            "trailing tokens after type in {!r}".format(text), line)
    return result


def read_categorial(text):
    """Categorial lexicon: one ``word : type`` line per entry."""
    lexicon = {}
    for number, line in _lines(text):
        word, ty_text = _split_colon(line, number)
        if not ty_text:
            raise MalformedInput("empty type for {!r}".format(word), number)
        lexicon.setdefault(word, []).append(
            parse_biclosed_ty(ty_text, number))
    return lexicon


# ---------------------------------------------------------------------------
# Tensor network JSON.
# ---------------------------------------------------------------------------

def net_to_json(net):
    return {"semiring": net.semiring.tag.lower(),
            "vertices": list(net.vertices),
            "edges": [[u, v, d] for u, v, d in net.edges],
            "arrays": {str(v): [_encode_entry(x, net.semiring)
                                for x in np.asarray(net.arrays[v])
                                .reshape(-1).tolist()]
                       for v in net.vertices}}


def net_from_json(data, semiring=None):
    from . import network
    try:
        if semiring is None:
            semiring = tensor.SEMIRINGS[data.get("semiring", "real").title()]
        vertices = list(data["vertices"])
        edges = [tuple(e) for e in data["edges"]]
        shapes = {v: tuple(d for u, w, d in edges for end in (u, w)
                           if end == v) for v in vertices}
        arrays = {v: _decode_array(data["arrays"][str(v)], semiring)
                  .reshape(shapes[v]) for v in vertices}
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput("bad network JSON: {}".format(exc))
    return network.Net(vertices, edges, arrays, semiring)


def dumps(obj):
    """Key-sorted, newline-terminated JSON for golden-file comparison."""
    return json.dumps(obj, sort_keys=True) + "\n"
