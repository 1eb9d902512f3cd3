"""Free operads: labelled trees with typed grafting, algebras, and a CYK
parser for context-free grammars whose derivations are such trees.

A ``Node`` has one input colour (dom) and a list of output colours (cod);
leaves have empty cod. Trees graft by ``__call__``, identities cancel, and
an ``Algebra`` folds a tree through maps on colours and nodes.
"""

from .cat import Ob
from .errors import ArityMismatch, MissingMapping, NotCnf, UnknownNode


class Tree:
    """A tree over a signature: a root node and one branch per root output.

    A bare node is itself a tree (with open slots); an ``Id`` branch keeps a
    slot open. The codomain is the concatenation of branch codomains.
    """

    def __init__(self, root, *branches):
        if branches and len(branches) != len(root.cod):
            raise ArityMismatch(
                "node {} has {} outputs, got {} branches".format(
                    root.name, len(root.cod), len(branches)))
        for ob, branch in zip(root.cod, branches):
            if branch.dom != ob:
                raise ArityMismatch(
                    "branch {} has dom {}, slot expects {}".format(
                        branch, branch.dom, ob))
        self.root, self.branches = root, tuple(branches)
        self.dom = root.dom
        if branches:
            self.cod = [x for branch in branches for x in branch.cod]
        else:
            self.cod = list(root.cod)

    @classmethod
    def id(cls, dom):
        return Id(dom)

    def __call__(self, *others):
        """Graft ``others`` into the open slots, one tree per slot."""
        if len(others) != len(self.cod):
            raise ArityMismatch(
                "tree with {} open slots got {} arguments".format(
                    len(self.cod), len(others)))
        for ob, other in zip(self.cod, others):
            if other.dom != ob:
                raise ArityMismatch(
                    "argument {} has dom {}, slot expects {}".format(
                        other, other.dom, ob))
        if not others or all(isinstance(other, Id) for other in others):
            return self
        if isinstance(self, Id):
            return others[0]
        if isinstance(self, Node):
            return Tree(self, *others)
        lengths = [len(branch.cod) for branch in self.branches]
        ranges = [sum(lengths[:i]) for i in range(len(lengths) + 1)]
        branches = [branch(*others[ranges[i]:ranges[i + 1]])
                    for i, branch in enumerate(self.branches)]
        return Tree(self.root, *branches)

    def __eq__(self, other):
        if isinstance(other, Id):
            return False
        if isinstance(other, Node):
            return not self.branches and self.root == other
        if isinstance(other, Tree):
            return self.root == other.root and self.branches == other.branches
        return False

    def __hash__(self):
        return hash((self.root, self.branches))

    def __repr__(self):
        return "Tree({!r}, {})".format(
            self.root, ", ".join(map(repr, self.branches)))

    def __str__(self):
        if not self.branches:
            return str(self.root)
        return "{}({})".format(
            self.root.name, ", ".join(map(str, self.branches)))

    def leaves(self):
        """Leaf nodes in left-to-right order."""
        if not self.branches:
            return [self.root] if not self.root.cod else []
        return [leaf for branch in self.branches for leaf in branch.leaves()]


class Node(Tree):
    """A generator: one input colour, a list of output colours.

    Nodes with empty cod are leaves. A node used as a tree is the bare
    one-node tree with all slots open.
    """

    def __init__(self, name, dom, cod):
        self.name = str(name)
        cod = list(cod)
        self.root, self.branches = self, ()
        self.dom, self.cod = dom, cod

    def __eq__(self, other):
        if isinstance(other, Node):
            return (self.name, self.dom, self.cod) \
                == (other.name, other.dom, other.cod)
        if isinstance(other, Tree) and not isinstance(other, Id):
            return not other.branches and other.root == self
        return False

    def __hash__(self):
        return hash((type(self).__name__, self.name, self.dom, tuple(self.cod)))

    def __repr__(self):
        return "Node({!r}, {!r}, {!r})".format(self.name, self.dom, self.cod)

    def __str__(self):
        return self.name


class Id(Tree):
    """The identity tree: a single open slot, unit for grafting."""

    def __init__(self, dom):
        self.root, self.branches = self, ()
        self.dom, self.cod = dom, [dom]

    def __eq__(self, other):
        return isinstance(other, Id) and self.dom == other.dom

    def __hash__(self):
        return hash((type(self).__name__, self.dom))

    def __repr__(self):
        return "Id({!r})".format(self.dom)

    def __str__(self):
        return "Id({})".format(self.dom)


def graft(root, args):
    """Functional spelling of ``root(*args)``."""
    return root(*args)


class Algebra:
    """An operad algebra: maps colours and nodes into a target with grafting.

    ``ob`` maps colours to target objects; ``ar`` maps nodes to target
    morphisms. The target class supplies ``id``; node images are applied to
    the branch images, which for tree targets is grafting. Subclasses
    override ``__call__`` for targets with a different application shape.
    """

    def __init__(self, ob, ar, cod=Tree):
        self.ob, self.ar, self.cod = dict(ob), dict(ar), cod

    def __call__(self, tree):
        if isinstance(tree, Id):
            try:
                return self.cod.id(self.ob[tree.dom])
            except KeyError:
                raise MissingMapping("no image for colour {}".format(tree.dom))
        if isinstance(tree, Node):
            try:
                return self.ar[tree]
            except KeyError:
                raise MissingMapping("no image for node {}".format(tree.name))
        return self(tree.root)(*map(self, tree.branches))


class Weight:
    """A multiplicative scalar weight; grafting multiplies."""

    def __init__(self, m):
        self.m = float(m)

    @classmethod
    def id(cls, _ob=None):
        return cls(1.0)

    def __call__(self, *others):
        out = self.m
        for other in others:
            out *= other.m
        return Weight(out)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.m == other.m

    def __hash__(self):
        return hash((type(self).__name__, self.m))

    def __repr__(self):
        return "Weight({})".format(self.m)


class Cfg:
    """A context-free grammar in Chomsky normal form.

    Rules are nodes: binary rules ``nt -> nt nt`` and lexical leaves
    ``word: nt -> []``. Rule order is the tie-break priority for parsing.
    """

    def __init__(self, nonterminals, terminals, sentence, rules):
        self.nonterminals = set(nonterminals)
        self.terminals = set(terminals)
        self.sentence = sentence
        self.rules = list(rules)
        if sentence not in self.nonterminals:
            raise NotCnf("sentence symbol {} not a nonterminal".format(sentence))
        for rule in self.rules:
            self._check_cnf(rule)

    def _check_cnf(self, rule):
        if rule.dom not in self.nonterminals:
            raise NotCnf("rule head {} not a nonterminal".format(rule.dom))
        if len(rule.cod) == 0:
            return
        if len(rule.cod) != 2:
            raise NotCnf(
                "rule {} has arity {}; need binary or lexical".format(
                    rule.name, len(rule.cod)))
        for ob in rule.cod:
            if ob not in self.nonterminals:
                raise NotCnf(
                    "rule {} expands to non-nonterminal {}".format(rule.name, ob))


def parse_cfg(grammar, tokens):
    """CYK chart parse; returns the derivation tree or None.

    Among multiple parses, each chart cell keeps the candidate with the
    lexicographically least (rule index, split point), so results are
    deterministic.
    """
    tokens = list(tokens)
    n = len(tokens)
    if n == 0:
        return None
    lexical = [(i, r) for i, r in enumerate(grammar.rules) if len(r.cod) == 0]
    binary = [(i, r) for i, r in enumerate(grammar.rules) if len(r.cod) == 2]
    chart = {}
    for i, token in enumerate(tokens):
        cell = {}
        for idx, rule in lexical:
            if rule.name == token and rule.dom not in cell:
                cell[rule.dom] = (idx, None)
        chart[i, i + 1] = cell
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            j = i + span
            cell = {}
            for idx, rule in binary:
                left, right = rule.cod
                for k in range(i + 1, j):
                    if left in chart[i, k] and right in chart[k, j]:
                        if rule.dom not in cell or (idx, k) < cell[rule.dom]:
                            cell[rule.dom] = (idx, k)
                        break
            chart[i, j] = cell
    if grammar.sentence not in chart[0, n]:
        return None

    def build(i, j, symbol):
        idx, split = chart[i, j][symbol]
        rule = grammar.rules[idx]
        if split is None:
            return rule
        left, right = rule.cod
        return Tree(rule, build(i, split, left), build(split, j, right))

    return build(0, n, grammar.sentence)


def tree_text(tree):
    """Render a tree as ``name(branch, ..., branch)`` text."""
    return str(tree)


def parse_tree_text(text, sig):
    """Parse ``name(child, ...)`` text against a signature of nodes.

    Every name must resolve to exactly one node in ``sig``; bare names are
    bare nodes (leaves keep empty slots closed, other nodes stay open).
    """
    by_name = {}
    for node in sig:
        if node.name in by_name and by_name[node.name] != node:
            by_name[node.name] = None
        else:
            by_name.setdefault(node.name, node)

    def lookup(name):
        node = by_name.get(name)
        if node is None:
            raise UnknownNode("name {!r} does not resolve uniquely".format(name))
        return node

    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_name():
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos] not in "()," and not text[pos].isspace():
            pos += 1
        if pos == start:
            raise SyntaxError("expected a name at position {}".format(pos))
        return text[start:pos]

    def parse_expr():
        nonlocal pos
        skip_ws()
        name = parse_name()
        node = lookup(name)
        skip_ws()
        if pos < len(text) and text[pos] == "(":
            pos += 1
            children = [parse_expr()]
            skip_ws()
            while pos < len(text) and text[pos] == ",":
                pos += 1
                children.append(parse_expr())
                skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise SyntaxError("unbalanced parentheses at position {}".format(pos))
            pos += 1
            return Tree(node, *children)
        return node

    result = parse_expr()
    skip_ws()
    if pos != len(text):
        raise SyntaxError("trailing input at position {}".format(pos))
    return result
