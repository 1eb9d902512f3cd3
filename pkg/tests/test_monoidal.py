"""Monoidal diagrams: the offset encoding, interchangers, normal form."""

import random

import pytest

import oracles
from diagrammar import operad
from diagrammar.cat import Ob
from diagrammar.errors import (IllTyped, InterchangerError, MissingMapping,
                               NegativeOffset)
from diagrammar.monoidal import (Box, Diagram, Functor, Id, Ty, nf_equal,
                                 tree_to_diagram)

x, y, z, w = Ty('x'), Ty('y'), Ty('z'), Ty('w')
f = Box('f', x, y)
g = Box('g', y, z)
h = Box('h', z, w)


def test_ty_monoid():
    assert x @ y @ z == Ty('x', 'y', 'z')
    assert (x @ y) @ z == x @ (y @ z)
    assert Ty() @ x == x == x @ Ty()
    assert len(x @ y) == 2
    assert list(x @ y) == [Ob('x'), Ob('y')]
    assert (x @ y)[1] == Ob('y')
    assert str(x @ y) == 'x @ y'
    assert str(Ty()) == 'Ty()'


def test_diagram_validation():
    with pytest.raises(IllTyped):
        Diagram(x, z, [f], [0, 0])
    with pytest.raises(IllTyped):
        Diagram(x, z, [f], [0])  # scan ends at y, declared cod z
    with pytest.raises(IllTyped):
        Diagram(x, y, [g], [0])  # box wants y, scan has x
    with pytest.raises(NegativeOffset):
        Diagram(x, y, [f], [-1])
    with pytest.raises(IllTyped):
        Diagram(x, y, [f], [1])  # offset past the right edge


def test_then_and_tensor():
    assert (f >> g).dom == x and (f >> g).cod == z
    assert (f @ g).dom == x @ y and (f @ g).cod == y @ z
    assert (f @ g).offsets == [0, 1]
    assert g << f == f >> g
    assert Id(x) >> f == f == f >> Id(y)
    assert f @ Id(Ty()) == f == Id(Ty()) @ f


def test_tensor_is_associative():
    assert (f @ g) @ h == f @ (g @ h)


def test_interchange_law_via_nf():
    lhs = (f @ Id(y)) >> (Id(y) @ g)
    rhs = (Id(x) @ g) >> (f @ Id(z))
    assert lhs != rhs  # different encodings
    assert nf_equal(lhs, rhs)  # same monoidal morphism
    assert lhs.normal_form() == rhs.normal_form()


def test_interchange_moves_boxes():
    d = (f @ Id(y)) >> (Id(y) @ g)
    moved = d.interchange(0, 1)
    assert moved == (Id(x) @ g) >> (f @ Id(z))
    assert moved.interchange(0, 1) == d


def test_interchange_blocked_on_shared_wire():
    with pytest.raises(InterchangerError):
        (f >> g).interchange(0, 1)


def test_layers_whisker_each_box():
    d = f @ g
    layers = d.layers()
    assert layers[0].dom == x @ y and layers[0].cod == y @ y
    assert layers[1].dom == y @ y and layers[1].cod == y @ z
    assert layers[0].left == Ty() and layers[0].right == y
    assert layers[1].left == y and layers[1].right == Ty()


def test_normal_form_idempotent_and_canonical():
    d = (Id(x) @ g) >> (f @ Id(z))
    nf = d.normal_form()
    assert nf.normal_form() == nf
    assert nf == (f @ Id(y)) >> (Id(y) @ g)


def _random_diagram(rng, signature, n_boxes):
    dom = Ty(*[rng.choice(signature) for _ in range(rng.randrange(4))])
    d = Diagram.id(dom)
    for _ in range(n_boxes):
        scan = d.cod
        offset = rng.randrange(len(scan) + 1)
        take = rng.randrange(len(scan) - offset + 1)
        b_cod = Ty(*[rng.choice(signature) for _ in range(rng.randrange(3))])
        box = Box(rng.choice('pqr'), scan[offset:offset + take], b_cod)
        d = d >> (Id(scan[:offset]) @ box @ Id(scan[offset + take:]))
    return d


def _encoding(d):
    return (tuple(ob.name for ob in d.dom.objects),
            tuple((b.name, tuple(o.name for o in b.dom.objects),
                   tuple(o.name for o in b.cod.objects)) for b in d.boxes),
            tuple(d.offsets))


def test_normal_form_matches_closure_oracle():
    rng = random.Random(5)
    for _ in range(150):
        d = _random_diagram(rng, 'ab', rng.randrange(1, 5))
        dom, boxes, offsets = _encoding(d)
        expected = oracles.closure_least(dom, boxes, offsets)
        nf = d.normal_form()
        assert _encoding(nf)[1:] == expected


def test_equivalent_diagrams_share_normal_form():
    rng = random.Random(6)
    for _ in range(80):
        d = _random_diagram(rng, 'ab', rng.randrange(2, 5))
        variant = d
        for _ in range(4):
            i = rng.randrange(max(1, len(variant.boxes) - 1))
            try:
                variant = variant.interchange(i, i + 1)
            except InterchangerError:
                pass
        assert nf_equal(d, variant)
        assert d.normal_form() == variant.normal_form()


def test_functor_on_objects_and_boxes():
    F = Functor(ob={Ob('x'): y, Ob('y'): x @ x}, ar={f: Box('f2', y, x @ x)})
    assert F(x) == y
    assert F(x @ y) == y @ x @ x
    assert F(f).boxes[0].name == 'f2'
    with pytest.raises(MissingMapping):
        F(z)
    with pytest.raises(MissingMapping):
        F(g)


def test_functor_preserves_composition():
    f2 = Box('f2', y, x @ x)
    g2 = Box('g2', x @ x, y)
    F = Functor(ob={Ob('x'): y, Ob('y'): x @ x, Ob('z'): y},
                ar={f: f2, g: g2})
    d = (f @ f) >> (g @ g)
    assert F(d) == (f2 @ f2) >> (g2 @ g2)
    assert F(Id(x @ y)) == Id(y @ x @ x)
    assert F(f >> g) == F(f) >> F(g)


def test_functor_with_callable_maps():
    F = Functor(ob=lambda ob: Ty(ob.name.upper()),
                ar=lambda box: Box(box.name.upper(),
                                   Ty(*[o.name.upper() for o in box.dom]),
                                   Ty(*[o.name.upper() for o in box.cod])))
    assert F(f >> g) == Box('F', Ty('X'), Ty('Y')) >> Box('G', Ty('Y'), Ty('Z'))


def test_tree_to_diagram_covariant():
    colour = Ob('c')
    node = operad.Node('n', colour, [colour, colour])
    leaf = operad.Node('l', colour, [])
    d = tree_to_diagram(node(leaf, leaf))
    assert d.dom == Ty('c') and d.cod == Ty()
    assert [b.name for b in d.boxes] == ['n', 'l', 'l']


def test_tree_to_diagram_contravariant():
    colour = Ob('c')
    node = operad.Node('n', colour, [colour, colour])
    leaf = operad.Node('l', colour, [])
    d = tree_to_diagram(node(leaf, leaf), contravariant=True)
    assert d.dom == Ty() and d.cod == Ty('c')
    assert [b.name for b in d.boxes] == ['l', 'l', 'n']
    # leaves become states feeding the flipped root box
    assert d.boxes[0].dom == Ty() and d.boxes[2].cod == Ty('c')


def test_tree_to_diagram_respects_grafting():
    colour = Ob('c')
    node = operad.Node('n', colour, [colour, colour])
    leaf = operad.Node('l', colour, [])
    staged = tree_to_diagram(node(operad.Id(colour), leaf), contravariant=True)
    full = tree_to_diagram(node(leaf, leaf), contravariant=True)
    # grafting a tree into the identity slot composes the diagrams
    assert tree_to_diagram(leaf, contravariant=True) >> staged == full


def test_str_and_repr_round():
    d = f >> g
    assert 'f' in str(d) and 'g' in str(d)
    assert d == eval(repr(d), {'Diagram': Diagram, 'Box': Box, 'Ty': Ty})
