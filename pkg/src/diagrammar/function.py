"""Functions on tuples of values: a cartesian closed evaluation target.

Values are plain Python objects: ints, bools, strings and the closures
produced by currying. Typing is arity-level, so a morphism with an
n-fold domain is a pure function of n arguments returning a tuple.
Copy, delete and swap make the category cartesian rather than merely
monoidal; curry and uncurry close it, which is what Montague-style
models of higher-order words need.
"""

from . import biclosed, monoidal, operad
from .cat import Ob
from .errors import (
    ArityError, ArityMismatch, CompositionMismatch, NotClosedType,
    TooManyWires)


def _as_ty(t):
    if isinstance(t, monoidal.Ty):
        return t
    return biclosed.Ty(t)


def _closed(t):
    """Lift a plain monoidal type so << and >> are available on it."""
    if isinstance(t, biclosed.Ty):
        return t
    out = monoidal.Ty.__new__(biclosed.Ty)
    out.objects = list(t.objects)
    return out


class Function(monoidal.Box):
    """A pure function from |dom|-tuples to |cod|-tuples of values."""

    def __init__(self, inside, dom, cod):
        self.inside = inside
        dom, cod = _as_ty(dom), _as_ty(cod)
        name = "Function({}, {}, {})".format(inside, dom, cod)
        super().__init__(name, dom, cod)

    def __call__(self, *values):
        if len(values) != len(self.dom):
            raise ArityError("{} takes {} arguments, got {}".format(
                self.name, len(self.dom), len(values)))
        result = tuple(self.inside(*values))
        if len(result) != len(self.cod):
            raise ArityError("{} returned {} values, cod is {}".format(
                self.name, len(result), self.cod))
        return result

    def then(self, other):
        if not isinstance(other, Function):
            raise CompositionMismatch(
                "cannot compose a function with {!r}".format(other))
        if self.cod != other.dom:
            raise CompositionMismatch(
                "cod {} does not match dom {}".format(self.cod, other.dom))
        return Function(
            lambda *xs: other(*self(*xs)), self.dom, other.cod)

    def tensor(self, other):
        def inside(*xs):
            left, right = xs[:len(self.dom)], xs[len(self.dom):]
            return tuple(self(*left)) + tuple(other(*right))
        return Function(inside, self.dom @ other.dom, self.cod @ other.cod)

    __rshift__ = then
    __matmul__ = tensor

    @staticmethod
    def id(t=None):
        t = _as_ty(t) if t is not None else biclosed.Ty()
        return Function(lambda *xs: xs, t, t)

    @staticmethod
    def copy(t):
        t = _as_ty(t)
        return Function(lambda *xs: (*xs, *xs), t, t @ t)

    @staticmethod
    def delete(t):
        t = _as_ty(t)
        return Function(lambda *xs: (), t, t[:0])

    @staticmethod
    def swap(t, u):
        t, u = _as_ty(t), _as_ty(u)
        return Function(
            lambda *xs: xs[len(t):] + xs[:len(t)], t @ u, u @ t)

    def curry(self, n_wires=1, left=False):
        """Bend trailing (or, with ``left``, leading) inputs into the cod.

        The result takes the remaining inputs and returns a closure over
        the bent ones, typed with an Over (resp. Under) codomain.
        """
        if not 1 <= n_wires <= len(self.dom):
            raise TooManyWires("cannot curry {} of {} wires".format(
                n_wires, len(self.dom)))
        if left:
            dom = self.dom[n_wires:]
            cod = _closed(self.dom[:n_wires]) >> _closed(self.cod)
            inside = lambda *xl: (
                lambda *xr: self.inside(*(tuple(xr) + tuple(xl))),)
        else:
            cut = len(self.dom) - n_wires
            dom = self.dom[:cut]
            cod = _closed(self.cod) << _closed(self.dom[cut:])
            inside = lambda *xl: (
                lambda *xr: self.inside(*(tuple(xl) + tuple(xr))),)
        return Function(inside, dom, cod)

    def uncurry(self):
        """Feed a function-typed codomain with fresh input wires."""
        cod = self.cod
        if len(cod) == 1 and isinstance(cod.objects[0], biclosed.Over):
            over = cod.objects[0]
            n = len(self.dom)
            inside = lambda *xs: self.inside(*xs[:n])[0](*xs[n:])
            return Function(inside, self.dom @ over.right, over.left)
        if len(cod) == 1 and isinstance(cod.objects[0], biclosed.Under):
            under = cod.objects[0]
            n = len(under.left)
            inside = lambda *xs: self.inside(*xs[n:])[0](*xs[:n])
            return Function(inside, under.left @ self.dom, under.right)
        raise NotClosedType(
            "cannot uncurry plain codomain {}".format(cod))


def structural(kind, *types):
    """One of the cartesian structure maps: id, copy, delete or swap."""
    makers = {"id": (Function.id, 1), "copy": (Function.copy, 1),
              "delete": (Function.delete, 1), "swap": (Function.swap, 2)}
    if kind not in makers:
        raise ArityMismatch("unknown structural map {!r}".format(kind))
    maker, arity = makers[kind]
    if len(types) != arity:
        raise ArityMismatch("{} takes {} types, got {}".format(
            kind, arity, len(types)))
    return maker(*types)


class Functor(biclosed.Functor):
    """Evaluate diagrams into functions.

    Curry and UnCurry boxes map through the target's own transposition;
    plain monoidal diagrams work too, since they contain neither.
    """

    def __init__(self, ob, ar):
        super().__init__(ob, ar, cod=(biclosed.Ty, Function),
                         curry=lambda f, n, left: f.curry(n, left),
                         uncurry=lambda f, n, left: f.uncurry())


def montague_demo():
    """The sentence "two plus three is five" with its arithmetic model.

    Returns the categorial derivation and a functor evaluating it to
    (True,).
    """
    N, S = biclosed.Ty('N'), biclosed.Ty('S')
    two = biclosed.Box('two', biclosed.Ty(), N)
    three = biclosed.Box('three', biclosed.Ty(), N)
    five = biclosed.Box('five', biclosed.Ty(), N)
    plus = biclosed.Box('plus', biclosed.Ty(), N >> (N << N))
    is_ = biclosed.Box('is', biclosed.Ty(), N >> S << N)

    words = two @ plus @ three @ is_ @ five
    grammar = (
        biclosed.FA(N, N << N) @ biclosed.Id(N) @ biclosed.BA(N, N >> S)
        >> biclosed.BA(N, N) @ biclosed.Id(N >> S)
        >> biclosed.FA(N, S))
    sentence = words >> grammar

    number = lambda y: Function(lambda: (y,), biclosed.Ty(), N)
    add = Function(lambda x, y: (x + y,), N @ N, N)
    equals = Function(lambda x, y: (x == y,), N @ N, S)
    ar = {two: number(2), three: number(3), five: number(5),
          is_: equals.curry(left=True).curry(),
          plus: add.curry().curry(left=True)}
    return sentence, Functor(ob=lambda x: biclosed.Ty(x), ar=ar)


def lawvere_demo():
    """The sentence "Fifty four was my number" as a Lawvere-style model.

    The dependency tree was(four(Fifty), number(my)) is read
    contravariantly, so leaves become constants; the functor sends every
    word to a function on a one-object type and the whole diagram to a
    0-ary function returning (True,).
    """
    w = Ob('w')
    tree = operad.Tree(
        operad.Node('was', w, [w, w]),
        operad.Tree(operad.Node('four', w, [w]),
                    operad.Node('Fifty', w, [])),
        operad.Tree(operad.Node('number', w, [w]),
                    operad.Node('my', w, [])))
    diagram = monoidal.tree_to_diagram(tree, contravariant=True)

    X = biclosed.Ty('X')

    def box_to_function(box):
        if box.name == 'was':
            return Function(lambda x, y: (x == y,), X @ X, X)
        if box.name == 'number':
            return Function.id(X)
        if box.name == 'four':
            return Function(lambda x: (4 + x,), X, X)
        if box.name == 'Fifty':
            return Function(lambda: (50,), biclosed.Ty(), X)
        if box.name == 'my':
            return Function(lambda: (54,), biclosed.Ty(), X)
        raise CompositionMismatch("unknown word {}".format(box.name))

    return diagram, Functor(ob=lambda x: X, ar=box_to_function)
