"""Free biclosed categories: function types and currying.

Types extend monoidal types with two binary formers: ``a << b`` (a function
eating ``b`` on the right to give ``a``) and ``a >> b`` (eating ``a`` on the
left to give ``b``). Diagrams are monoidal diagrams over these types with
two distinguished box kinds, Curry and UnCurry, that record transposition
without imposing the biclosed axioms: diagrams are syntax, equality is
structural, and an UnCurry applied to a Curry is kept as a redex rather
than rewritten away.
"""

from . import monoidal
from .cat import Ob
from .errors import BadRuleTypes, TooManyWires


def _as_element(x):
    if isinstance(x, (Over, Under, Ob)):
        return x
    return Ob(x)


class Ty(monoidal.Ty):
    """Biclosed type: a tensor of objects, Over and Under types."""

    _ob_factory = staticmethod(_as_element)

    def __lshift__(self, other):
        if len(other) == 0:
            return self
        return Over(self, other)

    def __rshift__(self, other):
        if len(self) == 0:
            return other
        return Under(self, other)


class Over(Ty):
    """The type ``a << b`` of functions from b to a, eating on the right."""

    def __init__(self, left, right):
        self.left, self.right = left, right
        self.objects = [self]

    def _plain(self):
        return Ty

    def __eq__(self, other):
        if isinstance(other, Over):
            return self.left == other.left and self.right == other.right
        if isinstance(other, Under):
            return False
        if isinstance(other, monoidal.Ty):
            return len(other.objects) == 1 and other.objects[0] == self
        return False

    def __hash__(self):
        return hash(("Over", self.left, self.right))

    def __repr__(self):
        return "({!r} << {!r})".format(self.left, self.right)

    def __str__(self):
        return "({} << {})".format(self.left, self.right)


class Under(Ty):
    """The type ``a >> b`` of functions from a to b, eating on the left."""

    def __init__(self, left, right):
        self.left, self.right = left, right
        self.objects = [self]

    def _plain(self):
        return Ty

    def __eq__(self, other):
        if isinstance(other, Under):
            return self.left == other.left and self.right == other.right
        if isinstance(other, Over):
            return False
        if isinstance(other, monoidal.Ty):
            return len(other.objects) == 1 and other.objects[0] == self
        return False

    def __hash__(self):
        return hash(("Under", self.left, self.right))

    def __repr__(self):
        return "({!r} >> {!r})".format(self.left, self.right)

    def __str__(self):
        return "({} >> {})".format(self.left, self.right)


class Box(monoidal.Box):
    """A generator box over biclosed types."""


Diagram = monoidal.Diagram


def Id(ty):
    if not isinstance(ty, monoidal.Ty):
        ty = Ty(ty)
    return Diagram.id(ty)


class Curry(Box):
    """Transpose wires of the domain into a function type on the codomain.

    Right currying (default) moves the last n_wires of the domain into an
    Over type; left currying moves the first n_wires into an Under type.
    """

    def __init__(self, inside, n_wires=1, left=False):
        if not 1 <= n_wires <= len(inside.dom):
            raise TooManyWires(
                "cannot curry {} of {} wires".format(n_wires, len(inside.dom)))
        self.inside, self.n_wires, self.left = inside, n_wires, left
        if left:
            dom = inside.dom[n_wires:]
            cod = inside.dom[:n_wires] >> inside.cod
        else:
            dom = inside.dom[:len(inside.dom) - n_wires]
            cod = inside.cod << inside.dom[len(inside.dom) - n_wires:]
        name = "Curry({}, {}, {})".format(inside, n_wires, left)
        super().__init__(name, dom, cod)


class UnCurry(Box):
    """Evaluate a function type on the codomain against fresh wires.

    On a codomain ``a << b`` the result takes an extra b on the right and
    returns a; on ``a >> b`` an extra a on the left returns b; on a plain
    codomain this is just an identity-shaped wrapper.
    """

    def __init__(self, inside):
        self.inside = inside
        cod = inside.cod
        if len(cod) == 1 and isinstance(cod.objects[0], Over):
            over = cod.objects[0]
            dom, cod = inside.dom @ over.right, over.left
        elif len(cod) == 1 and isinstance(cod.objects[0], Under):
            under = cod.objects[0]
            dom, cod = under.left @ inside.dom, under.right
        else:
            dom = inside.dom
        name = "UnCurry({})".format(inside)
        super().__init__(name, dom, cod)


def swap(a, b):
    """An explicit swap generator; free biclosed categories have none."""
    return Box("Swap", a @ b, b @ a)


def FA(x, y):
    """Forward application: x @ (x >> y) -> y."""
    return UnCurry(Id(x >> y))


def BA(x, y):
    """Backward application: (y << x) @ x -> y."""
    return UnCurry(Id(y << x))


def FC(x, y, z):
    """Forward composition: (x >> y) @ (y >> z) -> x >> z."""
    return Curry(FA(x, y) @ Id(y >> z) >> FA(y, z), left=True)


def BC(x, y, z):
    """Backward composition: (x << y) @ (y << z) -> x << z."""
    return Curry(Id(x << y) @ BA(z, y) >> BA(y, x))


def TYR_fwd(x, y):
    """Forward type raising: x -> y << (x >> y)."""
    return Curry(UnCurry(Id(x >> y)))


def TYR_bwd(x, y):
    """Backward type raising: x -> (y << x) >> y."""
    return Curry(UnCurry(Id(y << x)), left=True)


def BX(x, y, z):
    """Backward crossed composition: (x << y) @ (z >> y) -> x << z."""
    return Curry(
        Id(x << y) @ (swap(Ty(z >> y), z) >> FA(z, y)) >> BA(y, x))


def FX(x, y, z):
    """Forward crossed composition: (y << x) @ (y >> z) -> x >> z."""
    return Curry(
        (swap(x, Ty(y << x)) >> BA(x, y)) @ Id(y >> z) >> FA(y, z),
        left=True)


_RULES = {
    "FA": (FA, 2), "BA": (BA, 2), "FC": (FC, 3), "BC": (BC, 3),
    "TYR_fwd": (TYR_fwd, 2), "TYR_bwd": (TYR_bwd, 2),
    "FX": (FX, 3), "BX": (BX, 3),
}


def categorial_rule(kind, *types):
    """Construct one of the eight categorial rules by name."""
    if kind not in _RULES:
        raise BadRuleTypes("unknown rule kind {!r}".format(kind))
    rule, arity = _RULES[kind]
    if len(types) != arity:
        raise BadRuleTypes(
            "rule {} takes {} types, got {}".format(kind, arity, len(types)))
    types = tuple(t if isinstance(t, monoidal.Ty) else Ty(t) for t in types)
    return rule(*types)


class Functor(monoidal.Functor):
    """Functor out of a free biclosed category.

    Over and Under map to the target's << and >>; Curry and UnCurry boxes
    map through the target's own transposition, supplied as the ``curry``
    and ``uncurry`` hooks, both with signature ``(diagram, n_wires, left)``.
    Wire counts are translated through the functor since one source wire
    may map to several target wires.
    """

    def __init__(self, ob, ar, cod=None, curry=None, uncurry=None):
        super().__init__(ob, ar, cod=cod if cod is not None else (Ty, Diagram))
        if curry is None and (cod is None or cod == (Ty, Diagram)):
            curry = lambda d, n, left: Curry(d, n, left)
            uncurry = lambda d, n, left: UnCurry(d)
        self.curry_hook, self.uncurry_hook = curry, uncurry

    def map_ob(self, ob):
        if isinstance(ob, Over):
            return self(ob.left) << self(ob.right)
        if isinstance(ob, Under):
            return self(ob.left) >> self(ob.right)
        return super().map_ob(ob)

    def __call__(self, other):
        if isinstance(other, Over):
            return self(other.left) << self(other.right)
        if isinstance(other, Under):
            return self(other.left) >> self(other.right)
        if isinstance(other, monoidal.Ty):
            result = self.cod_ty()
            for el in other.objects:
                result = result @ (
                    self(el) if isinstance(el, (Over, Under))
                    else self.map_ob(el))
            return result
        if isinstance(other, Curry):
            inner = self(other.inside)
            if other.left:
                n = len(self(other.inside.dom[:other.n_wires]))
            else:
                n = len(self(other.inside.dom[
                    len(other.inside.dom) - other.n_wires:]))
            return self.curry_hook(inner, n, other.left)
        if isinstance(other, UnCurry):
            cod = other.inside.cod
            if len(cod) == 1 and isinstance(cod.objects[0], (Over, Under)):
                fn = cod.objects[0]
                left = isinstance(fn, Under)
                n = len(self(fn.left if left else fn.right))
                return self.uncurry_hook(self(other.inside), n, left)
            return self(other.inside)
        return super().__call__(other)
