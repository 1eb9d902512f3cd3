"""Biclosed types, currying and the categorial combinators."""

import pytest

from diagrammar.biclosed import (BA, BC, BX, FA, FC, FX, TYR_bwd, TYR_fwd,
                                 Box, Curry, Diagram, Functor, Id, Over, Ty,
                                 UnCurry, categorial_rule, swap)
from diagrammar.cat import Ob
from diagrammar.errors import BadRuleTypes, MissingMapping, TooManyWires

a, b, c = Ty('a'), Ty('b'), Ty('c')
n, s = Ty('n'), Ty('s')


def test_type_formers():
    assert a << b == Over(a, b)
    assert a >> b != a << b
    assert (a << b).left == a and (a << b).right == b
    assert str(a << b) == '(a << b)'
    assert str(a >> b) == '(a >> b)'
    # function types are single objects inside a tensor
    assert len((a << b) @ c) == 2
    assert ((a << b) @ c)[0] == a << b
    # wrapping in a plain type changes nothing
    assert Ty(a << b) == a << b


def test_type_formers_unit_edge():
    assert a << Ty() == a
    assert Ty() >> b == b


def test_nested_types_are_distinct():
    assert (a << b) << c != a << (b << c)
    assert hash(a << b) != hash(a >> b)


def test_curry_right():
    f = Box('f', a @ b, c)
    g = Curry(f)
    assert g.dom == a and g.cod == c << b
    assert g.inside == f and g.n_wires == 1 and g.left is False


def test_curry_left():
    f = Box('f', a @ b, c)
    g = Curry(f, left=True)
    assert g.dom == b and g.cod == a >> c


def test_curry_all_wires():
    f = Box('f', a @ b, c)
    g = Curry(f, n_wires=2)
    assert g.dom == Ty() and g.cod == c << (a @ b)
    h = Curry(f, n_wires=2, left=True)
    assert h.dom == Ty() and h.cod == (a @ b) >> c


def test_curry_too_many_wires():
    f = Box('f', a @ b, c)
    with pytest.raises(TooManyWires):
        Curry(f, n_wires=3)
    with pytest.raises(TooManyWires):
        Curry(f, n_wires=0)


def test_uncurry_over_and_under():
    f = Box('f', a, c << b)
    assert UnCurry(f).dom == a @ b and UnCurry(f).cod == c
    g = Box('g', b, a >> c)
    assert UnCurry(g).dom == a @ b and UnCurry(g).cod == c


def test_uncurry_plain_cod_is_a_wrapper():
    f = Box('f', a, b)
    assert UnCurry(f).dom == a and UnCurry(f).cod == b


def test_uncurry_of_curry_is_a_redex():
    f = Box('f', a @ b, c)
    redex = UnCurry(Curry(f))
    assert redex.dom == f.dom and redex.cod == f.cod
    assert redex != f  # kept as syntax, not rewritten away


def test_forward_application():
    r = FA(a, b)
    assert r.dom == a @ (a >> b) and r.cod == b


def test_backward_application():
    r = BA(a, b)
    assert r.dom == (b << a) @ a and r.cod == b


def test_forward_composition():
    r = FC(a, b, c)
    assert r.dom == (a >> b) @ (b >> c) and r.cod == a >> c


def test_backward_composition():
    r = BC(a, b, c)
    assert r.dom == (a << b) @ (b << c) and r.cod == a << c


def test_type_raising():
    assert TYR_fwd(a, b).dom == a
    assert TYR_fwd(a, b).cod == b << (a >> b)
    assert TYR_bwd(a, b).dom == a
    assert TYR_bwd(a, b).cod == (b << a) >> b


def test_crossed_composition():
    r = BX(a, b, c)
    assert r.dom == (a << b) @ (c >> b) and r.cod == a << c
    r = FX(a, b, c)
    assert r.dom == (b << a) @ (b >> c) and r.cod == a >> c


def test_swap_generator():
    assert swap(a, b).dom == a @ b and swap(a, b).cod == b @ a


def test_categorial_rule_by_name():
    assert categorial_rule('FA', a, b) == FA(a, b)
    assert categorial_rule('BC', 'a', 'b', 'c') == BC(a, b, c)
    with pytest.raises(BadRuleTypes):
        categorial_rule('XX', a, b)
    with pytest.raises(BadRuleTypes):
        categorial_rule('FA', a, b, c)


def test_derivation_composes():
    alice = Box('Alice', Ty(), n)
    runs = Box('runs', Ty(), n >> s)
    sentence = (alice @ runs) >> FA(n, s)
    assert sentence.dom == Ty() and sentence.cod == s


def test_multi_wire_types_in_rules():
    wide = Ty('a', 'b')
    r = FA(wide, c)
    assert r.dom == wide @ (wide >> c) and r.cod == c


def test_functor_maps_function_types():
    d, e = Ty('d'), Ty('e')
    F = Functor(ob={Ob('n'): d, Ob('s'): e}, ar={})
    assert F(n >> s) == d >> e
    assert F(s << n) == e << d
    assert F((s << n) @ n) == (e << d) @ d
    with pytest.raises(MissingMapping):
        F(a)


def test_functor_maps_rules_to_rules():
    d, e = Ty('d'), Ty('e')
    F = Functor(ob={Ob('n'): d, Ob('s'): e}, ar={})
    assert F(FA(n, s)) == FA(d, e)
    assert F(BA(n, s)) == BA(d, e)


def test_functor_maps_whole_derivation():
    d, e = Ty('d'), Ty('e')
    alice = Box('Alice', Ty(), n)
    runs = Box('runs', Ty(), n >> s)
    alice2 = Box('alice2', Ty(), d)
    runs2 = Box('runs2', Ty(), d >> e)
    F = Functor(ob={Ob('n'): d, Ob('s'): e},
                ar={alice: alice2, runs: runs2})
    expected = (alice2 @ runs2) >> FA(d, e)
    assert F((alice @ runs) >> FA(n, s)) == expected


def test_functor_widens_curry_wire_counts():
    u, v, w, t = Ty('u'), Ty('v'), Ty('w'), Ty('t')
    f = Box('f', a @ b, c)
    g = Box('g', u @ v @ w, t)
    F = Functor(ob={Ob('a'): u @ v, Ob('b'): w, Ob('c'): t}, ar={f: g})
    image = F(Curry(f))
    assert image.dom == u @ v and image.cod == t << w
    image = F(Curry(f, left=True))
    assert image.dom == w and image.cod == (u @ v) >> t
    # one source wire became two target wires
    assert image.n_wires == 2


def test_functor_on_uncurry():
    d, e = Ty('d'), Ty('e')
    F = Functor(ob={Ob('n'): d, Ob('s'): e}, ar={})
    image = F(UnCurry(Id(n >> s)))
    assert image.dom == d @ (d >> e) and image.cod == e


def test_id_on_bare_name():
    assert Id('a') == Diagram.id(a)
