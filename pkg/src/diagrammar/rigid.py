"""Free rigid categories: adjoints, cups and caps, pregroup grammars.

Objects carry a winding number; left and right adjoints shift it and
reverse tensor order. Diagrams are monoidal diagrams whose structural boxes
are cups (a ⊗ a.r → 1) and caps (1 → a ⊗ a.l); currying transposes wires by
bending them around caps, uncurrying around cups, and the normal form
removes the resulting zig-zags before applying the interchanger normal
form. Pregroup parsing finds cup-only reductions of lexical types (by the
switching lemma contractions suffice), and dependency grammars translate
into pregroup lexicons whose reductions mirror the dependency tree.
"""

import itertools

from . import cat, monoidal
from .errors import (AdjointMismatch, InterchangerError, InvalidRelation,
                     RuleNotInGrammar, TooManyWires)


class Ob(cat.Ob):
    """A basic type with a winding number counting iterated adjoints."""

    def __init__(self, name, z=0):
        super().__init__(name)
        self.z = z

    @property
    def l(self):
        return Ob(self.name, self.z - 1)

    @property
    def r(self):
        return Ob(self.name, self.z + 1)

    def __eq__(self, other):
        return isinstance(other, Ob) and \
            (self.name, self.z) == (other.name, other.z)

    def __hash__(self):
        return hash(("rigid.Ob", self.name, self.z))

    def __repr__(self):
        if self.z:
            return "Ob({!r}, z={})".format(self.name, self.z)
        return "Ob({!r})".format(self.name)

    def __str__(self):
        return self.name + (".l" * -self.z if self.z < 0 else ".r" * self.z)


def _as_rigid_ob(x):
    if isinstance(x, Ob):
        return x
    if isinstance(x, cat.Ob):
        return Ob(x.name)
    return Ob(x)


class Ty(monoidal.Ty):
    """A pregroup type: a list of basic types with winding numbers."""

    _ob_factory = staticmethod(_as_rigid_ob)

    @property
    def l(self):
        return Ty(*[x.l for x in self.objects[::-1]])

    @property
    def r(self):
        return Ty(*[x.r for x in self.objects[::-1]])

    def __lshift__(self, other):
        return self @ other.l

    def __rshift__(self, other):
        return self.r @ other


class Box(monoidal.Box):
    """A generator box over pregroup types, with an optional payload.

    ``data`` is carried along for round-trip constructions (a curried word
    box remembering its original boundary, say) and takes no part in
    equality.
    """

    def __init__(self, name, dom, cod, data=None):
        self.data = data
        super().__init__(name, dom, cod)


Diagram = monoidal.Diagram


def Id(ty):
    if not isinstance(ty, monoidal.Ty):
        ty = Ty(ty)
    return Diagram.id(ty)


class Cup(Box):
    """The evaluation a ⊗ a.r → 1 on a single basic type."""

    def __init__(self, left, right):
        left, right = _as_ty(left), _as_ty(right)
        if len(left) != 1 or len(right) != 1:
            raise AdjointMismatch("cups take basic types, got {} and {}"
                                  .format(left, right))
        if right != left.r:
            raise AdjointMismatch(
                "{} is not the right adjoint of {}".format(right, left))
        super().__init__("Cup({}, {})".format(left, right), left @ right, Ty())


class Cap(Box):
    """The coevaluation 1 → a ⊗ a.l on a single basic type."""

    def __init__(self, left, right):
        left, right = _as_ty(left), _as_ty(right)
        if len(left) != 1 or len(right) != 1:
            raise AdjointMismatch("caps take basic types, got {} and {}"
                                  .format(left, right))
        if right != left.l:
            raise AdjointMismatch(
                "{} is not the left adjoint of {}".format(right, left))
        super().__init__("Cap({}, {})".format(left, right), Ty(), left @ right)


def _as_ty(t):
    if isinstance(t, monoidal.Ty):
        return t
    return Ty(t)


def cups(left, right):
    """Nested cups left ⊗ right → 1, peeling the outermost pair first."""
    left, right = _as_ty(left), _as_ty(right)
    if right != left.r:
        raise AdjointMismatch(
            "{} is not the right adjoint of {}".format(right, left))
    if len(left) == 0:
        return Diagram.id(Ty())
    head, tail = left[:1], left[1:]
    inner = cups(tail, tail.r)
    return (Id(head) @ inner @ Id(head.r)) >> Cup(head, head.r)


def caps(left, right):
    """Nested caps 1 → left ⊗ right, outermost pair first."""
    left, right = _as_ty(left), _as_ty(right)
    if right != left.l:
        raise AdjointMismatch(
            "{} is not the left adjoint of {}".format(right, left))
    if len(left) == 0:
        return Diagram.id(Ty())
    head, tail = left[:1], left[1:]
    inner = caps(tail, tail.l)
    return Cap(head, head.l) >> (Id(head) @ inner @ Id(head.l))


def curry(diagram, n_wires=1, left=False):
    """Transpose n_wires of the domain up around caps."""
    if n_wires <= 0:
        return diagram
    if n_wires > len(diagram.dom):
        raise TooManyWires(
            "cannot curry {} of {} wires".format(n_wires, len(diagram.dom)))
    if left:
        wires = diagram.dom[:n_wires]
        return caps(wires.r, wires) @ Id(diagram.dom[n_wires:]) \
            >> Id(wires.r) @ diagram
    wires = diagram.dom[len(diagram.dom) - n_wires:]
    return Id(diagram.dom[:len(diagram.dom) - n_wires]) @ caps(wires, wires.l) \
        >> diagram @ Id(wires.l)


def uncurry(diagram, n_wires=1, left=False):
    """Transpose n_wires of the codomain down around cups."""
    if n_wires <= 0:
        return diagram
    if n_wires > len(diagram.cod):
        raise TooManyWires(
            "cannot uncurry {} of {} wires".format(n_wires, len(diagram.cod)))
    if left:
        wires = diagram.cod[:n_wires]
        return Id(wires.l) @ diagram \
            >> cups(wires.l, wires) @ Id(diagram.cod[n_wires:])
    wires = diagram.cod[len(diagram.cod) - n_wires:]
    return diagram @ Id(wires.r) \
        >> Id(diagram.cod[:len(diagram.cod) - n_wires]) @ cups(wires, wires.r)


def _wire_trace(diagram):
    """Wire identities consumed and produced by each box, plus cod wires."""
    counter = itertools.count()
    scan = [next(counter) for _ in diagram.dom]
    io = []
    for box, off in zip(diagram.boxes, diagram.offsets):
        ins = scan[off:off + len(box.dom)]
        outs = [next(counter) for _ in box.cod]
        scan[off:off + len(box.dom)] = outs
        io.append((ins, outs))
    return io, scan


def _find_redexes(diagram):
    """All (cap index, cup index) pairs joined by a yankable wire."""
    io, _ = _wire_trace(diagram)
    out = []
    for i, box_i in enumerate(diagram.boxes):
        if not isinstance(box_i, Cap):
            continue
        p, q = io[i][1]
        for j in range(i + 1, len(diagram.boxes)):
            if not isinstance(diagram.boxes[j], Cup):
                continue
            u, v = io[j][0]
            if v == p or u == q:
                out.append((i, j))
    return out


def _move(diagram, src, dst):
    """Move the box at index src to index dst by adjacent interchanges."""
    if src < dst:
        for t in range(src, dst):
            diagram = diagram.interchange(t, t + 1)
    else:
        for t in range(src, dst, -1):
            diagram = diagram.interchange(t - 1, t)
    return diagram


def _producer_block(io, a, b, wire):
    """Indices in (a, b) that transitively produce the given wire."""
    produced_by = {}
    for idx in range(a + 1, b):
        for out in io[idx][1]:
            produced_by[out] = idx
    block, queue = set(), [wire]
    while queue:
        idx = produced_by.get(queue.pop())
        if idx is not None and idx not in block:
            block.add(idx)
            queue.extend(io[idx][0])
    return sorted(block)


def _yank(diagram, a, b):
    """Cancel the cap at index a against the cup at index b.

    The cup's partner input hangs strictly to one side of the snake wire,
    so its producers (within the span) hoist above the cap without ever
    crossing it; the cup then slides up until adjacent and the pair drops
    out, leaving every other offset unchanged.
    """
    io, _ = _wire_trace(diagram)
    u, v = io[b][0]
    partner = u if v in io[a][1] else v
    for idx in _producer_block(io, a, b, partner):
        diagram = _move(diagram, idx, a)
        a += 1
    diagram = _move(diagram, b, a + 1)
    return Diagram(
        diagram.dom, diagram.cod,
        diagram.boxes[:a] + diagram.boxes[a + 2:],
        diagram.offsets[:a] + diagram.offsets[a + 2:])


def _yank_by_search(diagram, cap=20000):
    """Find an interchange-equivalent diagram with a yankable redex."""
    seen = {diagram._state_key()}
    frontier = [diagram]
    while frontier and len(seen) < cap:
        nxt = []
        for d in frontier:
            for i in range(len(d.boxes) - 1):
                for variant in d._adjacent_variants(i):
                    key = variant._state_key()
                    if key in seen:
                        continue
                    seen.add(key)
                    for a, b in _find_redexes(variant):
                        try:
                            return _yank(variant, a, b)
                        except InterchangerError:
                            continue
                    nxt.append(variant)
        frontier = nxt
    return None


def snake_removal(diagram):
    """Remove all cup/cap zig-zags, yielding an equivalent diagram.

    Redexes are yanked innermost first: a nested pair blocks the one
    around it, never the other way round. When every redex is obstructed
    (a floating bubble pinned inside a snake, say) a bounded search over
    interchange-equivalent diagrams finds a yankable position.
    """
    while True:
        redexes = _find_redexes(diagram)
        if not redexes:
            return diagram
        redexes.sort(key=lambda ij: (ij[1] - ij[0], ij))
        next_diagram = None
        for a, b in redexes:
            try:
                next_diagram = _yank(diagram, a, b)
                break
            except InterchangerError:
                continue
        if next_diagram is None:
            next_diagram = _yank_by_search(diagram)
        if next_diagram is None:
            return diagram
        diagram = next_diagram


def normal_form(diagram):
    """Snake removal followed by the monoidal interchanger normal form."""
    return snake_removal(diagram).normal_form()


def nf_equal(d1, d2):
    """Rigid equality: snake equations plus interchangers."""
    return normal_form(d1) == normal_form(d2)


class Functor(monoidal.Functor):
    """Functor out of a free rigid category.

    Objects map through their base name with windings re-applied, so
    F(x.l) == F(x).l holds by construction. Cups and caps map to the
    target's own cups and caps (the target class's, or this module's when
    the target has none) at the translated types.
    """

    def __init__(self, ob, ar, cod=None):
        super().__init__(ob, ar, cod=cod if cod is not None else (Ty, Diagram))

    def map_ob(self, ob):
        z = getattr(ob, "z", 0)
        base = super().map_ob(Ob(ob.name) if z else ob)
        while z > 0:
            base, z = base.r, z - 1
        while z < 0:
            base, z = base.l, z + 1
        return base

    def _cups(self):
        return getattr(self.cod_ar, "cups", cups)

    def _caps(self):
        return getattr(self.cod_ar, "caps", caps)

    def __call__(self, other):
        if isinstance(other, Cup):
            return self._cups()(self(other.dom[:1]), self(other.dom[1:]))
        if isinstance(other, Cap):
            return self._caps()(self(other.cod[:1]), self(other.cod[1:]))
        return super().__call__(other)


# ---------------------------------------------------------------------------
# Pregroup grammars.
# ---------------------------------------------------------------------------

class PregroupGrammar:
    """A lexicon of pregroup types with induced steps and a sentence type.

    ``lexicon`` maps words to lists of types in declaration order; parsing
    tries assignments in that order and the first successful reduction
    wins. ``induced`` is a set of (a, b) pairs licensing unary steps a → b.
    """

    def __init__(self, lexicon, sentence, induced=(), basic=None):
        self.lexicon = {w: list(ts) for w, ts in lexicon.items()}
        self.sentence = _as_rigid_ob(sentence)
        self.induced = [( _as_rigid_ob(a), _as_rigid_ob(b)) for a, b in induced]
        self.vocab = set(self.lexicon)
        if basic is None:
            basic = {ob.name for ts in self.lexicon.values()
                     for t in ts for ob in t}
            basic |= {self.sentence.name}
            basic |= {x.name for a, b in self.induced for x in (a, b)}
        self.basic = set(basic)
        for word, types in self.lexicon.items():
            for t in types:
                for ob in t:
                    if ob.name not in self.basic:
                        raise ValueError(
                            "lexical type for {!r} uses undeclared basic "
                            "type {!r}".format(word, ob.name))

    def __repr__(self):
        return "PregroupGrammar({} words, sentence={})".format(
            len(self.lexicon), self.sentence)


def _induced_chain(grammar, source, target):
    """Shortest chain of induced steps source -> target, None if absent."""
    if source == target:
        return []
    frontier = [(source, [])]
    seen = {source}
    while frontier:
        nxt = []
        for ob, path in frontier:
            for a, b in grammar.induced:
                if a == ob and b not in seen:
                    seen.add(b)
                    new_path = path + [(a, b)]
                    if b == target:
                        return new_path
                    nxt.append((b, new_path))
        frontier = nxt
    return None


def _empty_reducible(symbols):
    """Table E[i][j]: symbols[i:j] reduces to nothing by cups alone."""
    n = len(symbols)
    E = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        E[i][i] = True
    for length in range(2, n + 1, 2):
        for i in range(n - length + 1):
            j = i + length
            for k in range(i + 1, j, 2):
                if symbols[k] == symbols[i].r and E[i + 1][k] and E[k + 1][j]:
                    E[i][j] = True
                    break
    return E


def _cup_pairs(symbols, E, i, j):
    """Leftmost-deepest cup pairing of the empty-reducible span [i, j)."""
    if i == j:
        return []
    for k in range(i + 1, j, 2):
        if symbols[k] == symbols[i].r and E[i + 1][k] and E[k + 1][j]:
            return [(i, k)] + _cup_pairs(symbols, E, i + 1, k) \
                + _cup_pairs(symbols, E, k + 1, j)
    raise AssertionError("span marked reducible but no split found")


def _reduction_diagram(words, assignment, pairs, chain):
    diagram = Diagram.id(Ty())
    for word, ty in zip(words, assignment):
        diagram = diagram @ Box(word, Ty(), ty)
    symbols = [ob for ty in assignment for ob in ty]
    alive = list(range(len(symbols)))
    pending = sorted(pairs)
    while pending:
        for pair in pending:
            i, k = pair
            pos = alive.index(i)
            if pos + 1 < len(alive) and alive[pos + 1] == k:
                cup = Cup(Ty(symbols[i]), Ty(symbols[k]))
                diagram = diagram >> (
                    Id(Ty(*[symbols[a] for a in alive[:pos]]))
                    @ cup
                    @ Id(Ty(*[symbols[a] for a in alive[pos + 2:]])))
                alive = alive[:pos] + alive[pos + 2:]
                pending.remove(pair)
                break
        else:
            raise AssertionError("no adjacent cup in planar pairing")
    for a, b in chain:
        diagram = diagram >> Box(
            "induced:{}->{}".format(a, b), Ty(a), Ty(b))
    return diagram


def parse_pregroup(grammar, words, target=None):
    """Parse words by cup-only reduction to the sentence type.

    Tries lexical assignments in declaration order; for each, a dynamic
    program over spans finds whether all but one symbol cancel by cups and
    the survivor reaches the target through induced steps. Returns the
    reduction diagram (word states, cups, then induced boxes), or None when
    no assignment reduces. O(n^3) per assignment in total type length.
    """
    target = _as_rigid_ob(target if target is not None else grammar.sentence)
    if any(w not in grammar.lexicon for w in words):
        return None
    if not words:
        return None
    for assignment in itertools.product(*(grammar.lexicon[w] for w in words)):
        symbols = [ob for ty in assignment for ob in ty]
        E = _empty_reducible(symbols)
        n = len(symbols)
        for p in range(n):
            if not (E[0][p] and E[p + 1][n]):
                continue
            chain = _induced_chain(grammar, symbols[p], target)
            if chain is None:
                continue
            pairs = _cup_pairs(symbols, E, 0, p) + _cup_pairs(symbols, E, p + 1, n)
            return _reduction_diagram(words, assignment, pairs, chain)
    return None


def is_grammatical(grammar, words, target=None):
    return parse_pregroup(grammar, words, target) is not None


# ---------------------------------------------------------------------------
# Dependency grammars.
# ---------------------------------------------------------------------------

class DependencyGrammar:
    """Head rules, word-symbol assignments, and root symbols.

    ``rules_head`` is a set of (head symbol, left dependent symbols, right
    dependent symbols) triples; ``rules_word`` maps words to their possible
    symbols; ``rules_root`` lists symbols that may govern a sentence.
    """

    def __init__(self, rules_head, rules_word, rules_root, sentence):
        self.rules_head = {(h, tuple(l), tuple(r)) for h, l, r in rules_head}
        self.rules_word = {w: list(ss) for w, ss in rules_word.items()}
        self.rules_root = set(rules_root)
        self.sentence = sentence

    def __repr__(self):
        return "DependencyGrammar({} head rules, {} words)".format(
            len(self.rules_head), len(self.rules_word))


class DependencyRelation:
    """Words' symbols, who depends on whom, and the root index."""

    def __init__(self, symbols, deps, root):
        self.symbols = list(symbols)
        self.deps = set(deps)
        self.root = root

    def heads_of(self, i):
        return [j for k, j in self.deps if k == i]

    def dependents_of(self, j):
        return sorted(i for i, k in self.deps if k == j)

    def __repr__(self):
        return "DependencyRelation({!r}, {!r}, root={})".format(
            self.symbols, sorted(self.deps), self.root)


def validate_dependency(rel):
    """Names of the violated well-formedness conditions (empty if valid)."""
    n = len(rel.symbols)
    violations = []
    if any(not (0 <= i < n and 0 <= j < n) or i == j for i, j in rel.deps):
        return ["typing"]
    # acyclicity: follow head links
    cyclic = False
    for start in range(n):
        seen, stack = set(), [start]
        while stack:
            node = stack.pop()
            if node in seen:
                cyclic = True
                break
            seen.add(node)
            stack.extend(rel.heads_of(node))
        if cyclic:
            break
    if cyclic:
        violations.append("acyclicity")
    if any(len(rel.heads_of(i)) > 1 for i in range(n)):
        violations.append("monogamy")
    arcs = [(min(i, j), max(i, j)) for i, j in rel.deps]
    crossed = any(
        a < c < b < d or c < a < d < b
        for (a, b), (c, d) in itertools.combinations(arcs, 2))
    if crossed:
        violations.append("planarity")
    if not (0 <= rel.root < n) or rel.heads_of(rel.root):
        violations.append("rootedness")
    elif not cyclic:
        reached = {i for i in range(n)
                   if i == rel.root or _reaches_root(rel, i)}
        if len(reached) != n:
            violations.append("connectedness")
    return violations


def _reaches_root(rel, i):
    seen = set()
    while True:
        heads = rel.heads_of(i)
        if not heads:
            return i == rel.root
        i = heads[0]
        if i in seen:
            return False
        seen.add(i)
        if i == rel.root:
            return True


def dependency_lexical_type(symbol, left, right):
    """The pregroup type of a head: left adjoints, symbol, right adjoints.

    ``left`` and ``right`` list dependent symbols in sentence order; taking
    the adjoint of the whole tensor reverses them, which is exactly the
    nesting that keeps reductions planar.
    """
    return Ty(*left).r @ Ty(symbol) @ Ty(*right).l


def _word_state(word, symbol, left, right):
    box = Box(word, Ty(*left) @ Ty(*right), Ty(symbol),
              data=[Ty(*left), Ty(symbol), Ty(*right)])
    return curry(curry(box, len(left), left=True), len(right))


def dependency_to_pregroup(grammar, words, rel):
    """Translate a dependency analysis into a pregroup reduction.

    Each word becomes a state of its lexical type (the doubly curried
    dependency box, so its caps are internal); each dependency arc becomes
    a cup between the dependent's symbol wire and the head's matching
    adjoint wire; an induced step from the root symbol to the sentence
    symbol tops it off when the two differ. The result has dom 1 and cod
    the sentence type.
    """
    violations = validate_dependency(rel)
    if violations:
        raise InvalidRelation("dependency relation violates: {}".format(
            ", ".join(violations)))
    if len(words) != len(rel.symbols):
        raise InvalidRelation("{} words but {} symbols".format(
            len(words), len(rel.symbols)))
    for word, symbol in zip(words, rel.symbols):
        if symbol not in grammar.rules_word.get(word, []):
            raise RuleNotInGrammar(
                "no word rule {} : {}".format(word, symbol))
    lefts, rights = {}, {}
    for i in range(len(words)):
        deps = rel.dependents_of(i)
        lefts[i] = [j for j in deps if j < i]
        rights[i] = [j for j in deps if j > i]
        if lefts[i] or rights[i]:
            triple = (rel.symbols[i],
                      tuple(rel.symbols[j] for j in lefts[i]),
                      tuple(rel.symbols[j] for j in rights[i]))
            if triple not in grammar.rules_head:
                raise RuleNotInGrammar(
                    "no head rule {} : {} * {}".format(*triple))
    if rel.symbols[rel.root] not in grammar.rules_root:
        raise RuleNotInGrammar(
            "symbol {} may not govern a sentence".format(rel.symbols[rel.root]))

    diagram = Diagram.id(Ty())
    wire_of = {}     # word index -> its symbol wire position
    cup_partner = {}  # word index -> (head index, head wire position)
    position = 0
    for i, word in enumerate(words):
        state = _word_state(
            word, rel.symbols[i],
            [rel.symbols[j] for j in lefts[i]],
            [rel.symbols[j] for j in rights[i]])
        diagram = diagram @ state
        # state cod: reversed left adjoints, symbol, reversed right adjoints
        for slot, j in enumerate(reversed(lefts[i])):
            cup_partner[j] = position + slot
        wire_of[i] = position + len(lefts[i])
        for slot, j in enumerate(reversed(rights[i])):
            cup_partner[j] = position + len(lefts[i]) + 1 + slot
        position += len(lefts[i]) + 1 + len(rights[i])

    pairs = []
    for i in range(len(words)):
        if i == rel.root:
            continue
        a, b = wire_of[i], cup_partner[i]
        pairs.append((min(a, b), max(a, b)))
    symbols_flat = [None] * position
    for i in range(len(words)):
        symbols_flat[wire_of[i]] = rel.symbols[i]
        for j in lefts[i]:
            symbols_flat[cup_partner[j]] = Ob(rel.symbols[j]).r
        for j in rights[i]:
            symbols_flat[cup_partner[j]] = Ob(rel.symbols[j]).l
    symbols_flat = [s if isinstance(s, Ob) else Ob(s) for s in symbols_flat]

    alive = list(range(position))
    pending = sorted(pairs)
    while pending:
        for pair in pending:
            a, b = pair
            pos = alive.index(a)
            if pos + 1 < len(alive) and alive[pos + 1] == b:
                cup = Cup(Ty(symbols_flat[a]), Ty(symbols_flat[b]))
                diagram = diagram >> (
                    Id(Ty(*[symbols_flat[w] for w in alive[:pos]]))
                    @ cup
                    @ Id(Ty(*[symbols_flat[w] for w in alive[pos + 2:]])))
                alive = alive[:pos] + alive[pos + 2:]
                pending.remove(pair)
                break
        else:
            raise AssertionError("dependency cups not planar")
    root_symbol = rel.symbols[rel.root]
    if Ty(root_symbol) != Ty(grammar.sentence):
        diagram = diagram >> Box(
            "induced:{}->{}".format(root_symbol, grammar.sentence),
            Ty(root_symbol), Ty(grammar.sentence))
    return diagram
