"""Free categories: objects, arrows, functors, regular-grammar parsing."""

import random

import pytest
from hypothesis import given, strategies as st

import oracles
from diagrammar.cat import (Arrow, Box, Functor, Ob, RegularGrammar,
                            is_grammatical, parse_regular)
from diagrammar.errors import CompositionMismatch, MissingMapping

x, y, z = Ob('x'), Ob('y'), Ob('z')
f, g, h = Box('f', x, y), Box('g', y, z), Box('h', z, x)


def test_ob_equality_and_display():
    assert Ob('x') == x
    assert Ob('x') != Ob('y')
    assert hash(Ob('x')) == hash(x)
    assert str(x) == 'x' and repr(x) == "Ob('x')"
    assert Ob(3).name == '3'


def test_unit_laws():
    assert f >> Arrow.id(y) == f == Arrow.id(x) >> f


def test_associativity():
    assert (f >> g) >> h == f >> g >> h == f >> (g >> h)


def test_lshift_is_precomposition():
    assert g << f == f >> g


def test_box_equals_singleton_arrow():
    assert f == Arrow(x, y, [f])
    assert Arrow(x, y, [f]) == f
    assert f != g
    assert f != Box('f', x, z)


def test_arrow_validation():
    with pytest.raises(CompositionMismatch):
        f >> f
    with pytest.raises(CompositionMismatch):
        Arrow(x, z, [f])
    with pytest.raises(CompositionMismatch):
        Arrow(x, x, [f, f])
    with pytest.raises(TypeError):
        Arrow('x', y, [])


def test_arrow_display_and_len():
    assert str(f >> g) == "f >> g"
    assert str(Arrow.id(x)) == "Id(x)"
    assert len(f >> g >> h) == 3
    assert len(Arrow.id(x)) == 0


names = st.sampled_from(['a', 'b', 'c', 'd'])


@given(names, names, names, names, names, names, names)
def test_associativity_property(o1, o2, o3, o4, n1, n2, n3):
    p = Box(n1, Ob(o1), Ob(o2))
    q = Box(n2, Ob(o2), Ob(o3))
    r = Box(n3, Ob(o3), Ob(o4))
    assert (p >> q) >> r == p >> (q >> r)
    assert p >> Arrow.id(Ob(o2)) == p == Arrow.id(Ob(o1)) >> p


def test_functor_axioms():
    fw, bw = Box('f', x, y), Box('g', y, x)
    F = Functor(ob={x: y, y: x}, ar={fw: bw, bw: fw})
    assert F(fw >> bw) == F(fw) >> F(bw)
    assert F(Arrow.id(x)) == Arrow.id(F(x))


def test_functor_missing_mapping():
    F = Functor(ob={x: x}, ar={})
    with pytest.raises(MissingMapping):
        F(y)
    with pytest.raises(MissingMapping):
        F(f)


def test_functor_checks_image_boundary():
    F = Functor(ob={x: x, y: y}, ar={f: Box('k', y, y)})
    with pytest.raises(CompositionMismatch):
        F(f)


def test_functor_preserves_composition_random():
    rng = random.Random(0)
    obs = [Ob(c) for c in 'abcd']
    image = {ob: obs[(i + 1) % 4] for i, ob in enumerate(obs)}
    boxes = [Box('b{}'.format(i), obs[i % 4], obs[(i + 1) % 4])
             for i in range(8)]
    ar = {b: Box(b.name + "'", image[b.dom], image[b.cod]) for b in boxes}
    F = Functor(ob=image, ar=ar)
    for _ in range(50):
        start = rng.randrange(4)
        arrow = Arrow.id(obs[start])
        for _ in range(rng.randrange(4)):
            nxt = [b for b in boxes if b.dom == arrow.cod]
            arrow = arrow >> rng.choice(nxt)
        tail = [b for b in boxes if b.dom == arrow.cod]
        extra = rng.choice(tail)
        assert F(arrow >> extra) == F(arrow) >> F(extra)


# The three-edge grammar: A B*A between distinguished start/end states.
s0, mid, s1 = Ob('s0'), Ob('x'), Ob('s1')
A_in, B_loop, A_out = Box('A', s0, mid), Box('B', mid, mid), Box('A', mid, s1)
grammar = RegularGrammar([A_in, B_loop, A_out], s0, s1)


def test_regular_parsing_goldens():
    assert is_grammatical(grammar, "ABBA")
    assert not is_grammatical(grammar, "ABAB")
    assert parse_regular(grammar, "ABBA") == A_in >> B_loop >> B_loop >> A_out
    assert parse_regular(grammar, "ABAB") is None


def test_regular_parsing_rejects_unknown_label_and_bad_end():
    assert not is_grammatical(grammar, "ACBA")
    assert not is_grammatical(grammar, "A")
    assert not is_grammatical(grammar, "")


def test_empty_word_accepted_when_start_equals_end():
    loop_grammar = RegularGrammar([A_in], s0, s0)
    assert is_grammatical(loop_grammar, "")
    assert parse_regular(loop_grammar, "") == Arrow.id(s0)


def test_regular_parse_agrees_with_path_oracle():
    edges = [('A', 's0', 'x'), ('B', 'x', 'x'), ('A', 'x', 's1')]
    language = oracles.enumerate_paths(edges, 's0', 's1', 5)
    for length in range(6):
        for word in _words('AB', length):
            assert is_grammatical(grammar, word) == (tuple(word) in language)


def _words(alphabet, length):
    if length == 0:
        yield ""
        return
    for prefix in _words(alphabet, length - 1):
        for c in alphabet:
            yield prefix + c


def test_grammar_vertices():
    assert grammar.vertices() == {s0, mid, s1}
