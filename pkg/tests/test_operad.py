"""Free operads: trees, grafting, algebras, CYK parsing, tree text."""

import itertools
import random

import pytest

import oracles
from diagrammar.cat import Ob
from diagrammar.operad import (Algebra, Cfg, Id, Node, Tree, Weight, graft,
                               parse_cfg, parse_tree_text, tree_text)
from diagrammar.errors import (ArityMismatch, MissingMapping, NotCnf,
                               UnknownNode)

x, y = Ob('x'), Ob('y')
f = Node('f', x, [x, x])
g = Node('g', x, [x, y])
h = Node('h', x, [y, x])


def test_graft_builds_tree():
    assert f(g, h) == Tree(f, g, h)
    assert f(g, h).cod == [x, y, y, x]


def test_identity_laws():
    assert Id(x)(f) == f
    assert f(Id(x), Id(x)) == f


def test_two_stage_grafting_orders_agree():
    left = f(Id(x), h)(g, Id(y), Id(x))
    right = f(g, Id(x))(Id(x), Id(y), h)
    assert left == f(g, h) == right


def test_graft_function_spelling():
    assert graft(f, [g, h]) == f(g, h)


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        f(g)
    with pytest.raises(ArityMismatch):
        Tree(f, g, h, g)
    with pytest.raises(ArityMismatch):
        f(Node('k', y, []), h)


def test_cod_of_leaves_and_nodes():
    caesar = Node('Caesar', Ob('N'), [])
    assert caesar.cod == []
    assert f.cod == [x, x]


def test_tree_equality_and_hash():
    assert f(g, h) == f(g, h)
    assert f(g, h) != f(h, g)
    assert hash(f(g, h)) == hash(f(g, h))
    assert Id(x) != Node('f', x, [x])
    assert f != Id(x)


def test_random_graft_interchange():
    rng = random.Random(3)
    colours = [Ob(c) for c in 'uv']
    pool = [Node('n{}'.format(i), rng.choice(colours),
                 [rng.choice(colours) for _ in range(rng.randrange(3))])
            for i in range(12)]
    for _ in range(200):
        root = rng.choice([n for n in pool if n.cod])
        args1 = [rng.choice([n for n in pool if n.dom == ob] + [Id(ob)])
                 for ob in root.cod]
        staged = root(*args1)
        args2 = [rng.choice([n for n in pool if n.dom == ob] + [Id(ob)])
                 for ob in staged.cod]
        once = staged(*args2)
        # graft the second stage through the first in one pass
        slots = iter(args2)
        merged = [arg(*[next(slots) for _ in arg.cod]) for arg in args1]
        assert once == root(*merged)


# Caesar grammar in CNF, used across parsing tests.
S, VP, NP, N, V, D = (Ob(s) for s in ['S', 'VP', 'NP', 'N', 'V', 'D'])
rules = [
    Node('S', S, [VP, NP]),
    Node('VP', VP, [N, V]),
    Node('NP', NP, [D, N]),
    Node('Caesar', N, []),
    Node('crossed', V, []),
    Node('the', D, []),
    Node('Rubicon', N, []),
]
caesar_cfg = Cfg({S, VP, NP, N, V, D}, {'Caesar', 'crossed', 'the', 'Rubicon'},
                 S, rules)
caesar_tree = parse_cfg(caesar_cfg, "Caesar crossed the Rubicon".split())


def test_parse_cfg_caesar():
    assert caesar_tree is not None
    assert str(caesar_tree) == "S(VP(Caesar, crossed), NP(the, Rubicon))"
    assert caesar_tree.cod == []
    assert [leaf.name for leaf in caesar_tree.leaves()] \
        == "Caesar crossed the Rubicon".split()


def test_parse_cfg_rejects():
    assert parse_cfg(caesar_cfg, "crossed Caesar the Rubicon".split()) is None
    assert parse_cfg(caesar_cfg, []) is None
    assert parse_cfg(caesar_cfg, ["Caesar"]) is None
    assert parse_cfg(caesar_cfg, ["Brutus"]) is None


def test_parse_cfg_single_lexical_rule():
    s = Ob('s')
    tiny = Cfg({s}, {'a'}, s, [Node('a', s, [])])
    assert parse_cfg(tiny, ['a']) == Node('a', s, [])


def test_parse_cfg_agrees_with_derivation_oracle():
    binary = [('S', ('VP', 'NP')), ('VP', ('N', 'V')), ('NP', ('D', 'N'))]
    lexical = [('Caesar', 'N'), ('crossed', 'V'), ('the', 'D'),
               ('Rubicon', 'N')]
    words = ['Caesar', 'crossed', 'the', 'Rubicon']
    for length in range(1, 5):
        for tokens in itertools.product(words, repeat=length):
            expected = oracles.cfg_derives(binary, lexical, 'S', tokens)
            assert (parse_cfg(caesar_cfg, list(tokens)) is not None) \
                == expected


def test_parse_cfg_language_oracle():
    binary = [('S', ('VP', 'NP')), ('VP', ('N', 'V')), ('NP', ('D', 'N'))]
    lexical = [('Caesar', 'N'), ('crossed', 'V'), ('the', 'D'),
               ('Rubicon', 'N')]
    language = oracles.enumerate_cfg_language(binary, lexical, 'S', 5)
    assert language == {('Caesar', 'crossed', 'the', 'Rubicon'),
                        ('Caesar', 'crossed', 'the', 'Caesar'),
                        ('Rubicon', 'crossed', 'the', 'Rubicon'),
                        ('Rubicon', 'crossed', 'the', 'Caesar')}
    for tokens in language:
        assert parse_cfg(caesar_cfg, list(tokens)) is not None


def test_cfg_cnf_validation():
    s = Ob('s')
    with pytest.raises(NotCnf):
        Cfg({s}, set(), Ob('t'), [])
    with pytest.raises(NotCnf):
        Cfg({s}, set(), s, [Node('r', s, [s, s, s])])
    with pytest.raises(NotCnf):
        Cfg({s}, set(), s, [Node('r', Ob('t'), [])])
    with pytest.raises(NotCnf):
        Cfg({s}, set(), s, [Node('r', s, [s, Ob('t')])])


def test_weight_monoid():
    assert Weight.id() == Weight(1.0)
    assert Weight(0.5)(Weight(1.0), Weight(0.5)) == Weight(0.25)
    assert Weight(2) != Weight(3)


def test_weighted_grammar_evaluates_to_quarter():
    A, Nn = Ob('A'), Ob('N')
    rule = Node('A', Nn, [A, Nn])
    tree = rule(Id(A), rule)
    wcfg = Algebra(ob={A: None, Nn: None}, ar={rule: Weight(0.5)}, cod=Weight)
    assert wcfg(tree) == Weight(0.25)


def test_weighted_moses_trees_rank_by_depth():
    # more adjective stackings multiply in more 0.5 factors
    A, Nn = Ob('A'), Ob('N')
    rule = Node('A', Nn, [A, Nn])
    once = rule
    thrice = rule(Id(A), rule(Id(A), rule))
    wcfg = Algebra(ob={A: None, Nn: None}, ar={rule: Weight(0.5)}, cod=Weight)
    assert wcfg(once).m > wcfg(thrice).m
    assert wcfg(thrice) == Weight(0.125)


class Count:
    """Leaf counter: a toy algebra target."""

    def __init__(self, n):
        self.n = n

    @classmethod
    def id(cls, _ob=None):
        return cls(0)

    def __call__(self, *others):
        return Count(self.n + sum(o.n for o in others))


def test_leaf_counting_algebra():
    alg = Algebra(
        ob={ob: None for ob in [S, VP, NP, N, V, D]},
        ar={rule: Count(1 if not rule.cod else 0) for rule in rules},
        cod=Count)
    assert alg(caesar_tree).n == 4


def test_identity_algebra():
    alg = Algebra(ob={ob: ob for ob in [S, VP, NP, N, V, D]},
                  ar={rule: rule for rule in rules}, cod=Tree)
    assert alg(caesar_tree) == caesar_tree


def test_algebra_missing_mapping():
    alg = Algebra(ob={}, ar={}, cod=Tree)
    with pytest.raises(MissingMapping):
        alg(caesar_tree)
    with pytest.raises(MissingMapping):
        alg(Id(x))


def test_tree_text_round_trip():
    assert tree_text(caesar_tree) == "S(VP(Caesar, crossed), NP(the, Rubicon))"
    assert parse_tree_text(tree_text(caesar_tree), rules) == caesar_tree


def test_tree_text_dependency_signature():
    w = Ob('w')
    sig = [Node('crossed', w, [w, w]), Node('Moses', w, []),
           Node('Sea', w, [w, w]), Node('the', w, []), Node('Red', w, [])]
    tree = parse_tree_text("crossed(Moses, Sea(the, Red))", sig)
    assert str(tree) == "crossed(Moses, Sea(the, Red))"
    assert tree.root == sig[0]


def test_parse_tree_text_leaf():
    caesar = Node('Caesar', N, [])
    assert parse_tree_text("Caesar", [caesar]) == caesar


def test_parse_tree_text_errors():
    with pytest.raises(UnknownNode):
        parse_tree_text("nope", rules)
    with pytest.raises(UnknownNode):
        # two different nodes under one name do not resolve
        parse_tree_text("f", [Node('f', x, []), Node('f', y, [])])
    with pytest.raises(SyntaxError):
        parse_tree_text("S(VP(Caesar, crossed)", rules)
    with pytest.raises(SyntaxError):
        parse_tree_text("S(,)", rules)
