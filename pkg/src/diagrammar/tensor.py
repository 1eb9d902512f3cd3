"""Tensors over commutative semirings and functors evaluating diagrams.

Objects are dimension lists (unit entries dropped, reversal as adjoint),
morphisms are flat row-major arrays reshaped to dom ⊗ cod. Four semirings
are supported: Bool with saturating addition (so composition of relations
is exists-composition), Nat over machine integers, Real and Complex over
floats with a fixed comparison tolerance. Structural tensors (identity,
cups, caps, swap, spiders as generalized Kronecker deltas) satisfy the
compact-closed axioms numerically, and ``Functor`` evaluates monoidal,
rigid or downgraded hypergraph diagrams layer by layer.
"""

import numpy as np

from . import _kernels, cat, monoidal, rigid
from .errors import (BackendUnsupported, IllTyped, MissingMapping,
                     ShapeMismatch)


class Semiring:
    """A named commutative semiring with a comparison tolerance."""

    def __init__(self, tag, dtype, add, mul, tol=None):
        self.tag, self.dtype, self.tol = tag, np.dtype(dtype), tol
        self.add, self.mul = add, mul
        self.zero = self.dtype.type(0).item()
        self.one = self.dtype.type(1).item()

    def eq(self, a, b):
        if self.tol is None:
            return a == b
        return abs(a - b) <= self.tol

    def allclose(self, x, y):
        x, y = np.asarray(x, self.dtype), np.asarray(y, self.dtype)
        if x.shape != y.shape:
            return False
        if self.tol is None:
            return bool((x == y).all())
        return bool((abs(x - y) <= self.tol).all())

    def __repr__(self):
        return "Semiring({})".format(self.tag)


Bool = Semiring("Bool", np.bool_, lambda a, b: a or b, lambda a, b: a and b)
Nat = Semiring("Nat", np.int64, lambda a, b: a + b, lambda a, b: a * b)
Real = Semiring("Real", np.float64,
                lambda a, b: a + b, lambda a, b: a * b, tol=1e-9)
Complex = Semiring("Complex", np.complex128,
                   lambda a, b: a + b, lambda a, b: a * b, tol=1e-9)

SEMIRINGS = {s.tag: s for s in (Bool, Nat, Real, Complex)}


class _DimOb(cat.Ob):
    """An object whose name is an integer dimension, not a string."""

    def __init__(self, name):
        self.name = int(name)


def _as_dim_ob(x):
    if isinstance(x, cat.Ob):
        x = x.name
    if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
        raise IllTyped("dimensions must be integers, got {!r}".format(x))
    if x < 1:
        raise IllTyped("dimensions must be at least 1, got {}".format(x))
    return _DimOb(x)


class Dim(monoidal.Ty):
    """A list of dimensions; entries equal to 1 are dropped, Dim() is 1."""

    _ob_factory = staticmethod(_as_dim_ob)

    def __init__(self, *dims):
        objects = [_as_dim_ob(x) for x in dims]
        super().__init__(*[x for x in objects if x.name != 1])

    def __getitem__(self, key):
        if isinstance(key, slice):
            return super().__getitem__(key)
        return super().__getitem__(key).name

    def __iter__(self):
        return (ob.name for ob in self.objects)

    @property
    def l(self):
        return Dim(*tuple(self)[::-1])

    r = l

    def prod(self):
        out = 1
        for d in self:
            out *= d
        return out

    def __repr__(self):
        return "Dim({})".format(", ".join(map(repr, self)) or "1")

    __str__ = __repr__


def _as_dim(x):
    if isinstance(x, Dim):
        return x
    if isinstance(x, monoidal.Ty):
        return Dim(*[ob.name for ob in x.objects])
    if isinstance(x, (int, np.integer)):
        return Dim(x)
    return Dim(*x)


def _pow(dim, n):
    out = Dim()
    for _ in range(n):
        out = out @ dim
    return out


class Tensor(rigid.Box):
    """A morphism of dimensions: a flat semiring array, dom ⊗ cod shaped."""

    def __init__(self, dom, cod, array, semiring=Real):
        dom, cod = _as_dim(dom), _as_dim(cod)
        self.semiring = semiring
        array = np.asarray(array)
        if array.size != dom.prod() * cod.prod():
            raise ShapeMismatch("{} entries for {} -> {}".format(
                array.size, dom, cod))
        self._array = array.astype(semiring.dtype).reshape(
            tuple(dom) + tuple(cod))
        super().__init__("Tensor", dom, cod)

    @property
    def array(self):
        return self._array

    def _match(self, other):
        if not isinstance(other, Tensor):
            raise ShapeMismatch("expected a tensor, got {!r}".format(other))
        if other.semiring is not self.semiring:
            raise ShapeMismatch("semirings differ: {} vs {}".format(
                self.semiring.tag, other.semiring.tag))

    def then(self, other):
        self._match(other)
        if self.cod != other.dom:
            raise ShapeMismatch("cannot compose {} with {}".format(
                self.cod, other.dom))
        array = _kernels.contract(self.array, other.array, len(self.cod),
                                  self.semiring.tag)
        return Tensor(self.dom, other.cod, array, self.semiring)

    __rshift__ = then

    def tensor(self, other):
        self._match(other)
        dom, cod = self.dom @ other.dom, self.cod @ other.cod
        array = _kernels.contract(self.array, other.array, 0,
                                  self.semiring.tag)
        source = range(len(dom) + len(cod))
        target = [i if i < len(self.dom)
                  or i >= len(self.dom) + len(self.cod) + len(other.dom)
                  else i - len(self.cod)
                  if i >= len(self.dom) + len(self.cod)
                  else i + len(other.dom) for i in source]
        return Tensor(dom, cod, np.moveaxis(array, list(source), target),
                      self.semiring)

    __matmul__ = tensor

    def map(self, func):
        return Tensor(self.dom, self.cod,
                      [func(x) for x in self._array.reshape(-1).tolist()],
                      self.semiring)

    def __eq__(self, other):
        return isinstance(other, Tensor) \
            and self.semiring is other.semiring \
            and (self.dom, self.cod) == (other.dom, other.cod) \
            and self.semiring.allclose(self.array, other.array)

    def __hash__(self):
        return hash(("Tensor", self.dom, self.cod, self.semiring.tag))

    def __repr__(self):
        return "Tensor({!r}, {!r}, {}, semiring={})".format(
            self.dom, self.cod, self._array.reshape(-1).tolist(),
            self.semiring.tag)

    @staticmethod
    def id(dom=Dim(), semiring=Real):
        dom = _as_dim(dom)
        return Tensor(dom, dom, np.eye(dom.prod()), semiring)

    @staticmethod
    def cups(left, right, semiring=Real):
        left, right = _as_dim(left), _as_dim(right)
        if tuple(right) != tuple(left)[::-1]:
            raise ShapeMismatch("{} is not the reversal of {}".format(
                right, left))
        k = len(left)
        array = np.eye(left.prod()).reshape(tuple(left) + tuple(left))
        array = array.transpose(
            list(range(k)) + list(range(2 * k - 1, k - 1, -1)))
        return Tensor(left @ right, Dim(), array, semiring)

    @staticmethod
    def caps(left, right, semiring=Real):
        cup = Tensor.cups(left, right, semiring)
        return Tensor(Dim(), cup.dom, cup.array, semiring)

    @staticmethod
    def swap(left, right, semiring=Real):
        left, right = _as_dim(left), _as_dim(right)
        both = left @ right
        array = Tensor.id(both, semiring).array
        source = range(len(both), 2 * len(both))
        target = [i + len(right) if i < 2 * len(both) - len(right)
                  else i - len(left) for i in source]
        return Tensor(both, right @ left,
                      np.moveaxis(array, list(source), target), semiring)

    @staticmethod
    def spiders(n_in, n_out, dim, semiring=Real):
        """The generalized Kronecker delta: all legs carry equal indices.

        With no legs at all this is the dimension itself (the trace of the
        identity), one closed loop per object.
        """
        dim = _as_dim(dim)
        legs = n_in + n_out
        array = np.array(1.0)
        for d in dim:
            if legs == 0:
                factor = np.array(float(d))
            else:
                factor = np.zeros((d,) * legs)
                for i in range(d):
                    factor[(i,) * legs] = 1
            array = np.tensordot(array, factor, 0)
        if len(dim) > 1 and legs > 1:
            # object-major axes -> leg-major axes
            perm = [obj * legs + leg
                    for leg in range(legs) for obj in range(len(dim))]
            array = array.transpose(perm)
        return Tensor(_pow(dim, n_in), _pow(dim, n_out), array, semiring)


class _TensorOps:
    """Target-category hooks binding a semiring for functor application."""

    def __init__(self, semiring):
        self.semiring = semiring

    def id(self, dim):
        return Tensor.id(dim, self.semiring)

    def cups(self, left, right):
        return Tensor.cups(left, right, self.semiring)

    def caps(self, left, right):
        return Tensor.caps(left, right, self.semiring)


class Functor(rigid.Functor):
    """Evaluate diagrams as tensors.

    ``ob`` maps basic objects to dimensions (ints, tuples or Dims);
    adjoints land on reversed dimensions. ``ar`` maps boxes to arrays (or
    Tensors); cups, caps and the spider and swap boxes emitted by
    hypergraph downgrading all route to the structural tensors of the
    chosen semiring.
    """

    def __init__(self, ob, ar, semiring=Real):
        super().__init__(ob, ar, cod=(Dim, _TensorOps(semiring)))
        self.semiring = semiring

    def map_ob(self, ob):
        z = getattr(ob, "z", 0)
        base = monoidal.Functor.map_ob(
            self, rigid.Ob(ob.name) if z else ob)
        base = _as_dim(base)
        return base.l if z % 2 else base

    def map_box(self, box):
        image = monoidal.Functor.map_box(self, box)
        if isinstance(image, Tensor):
            if image.semiring is not self.semiring:
                raise ShapeMismatch("box {} mapped into {}, not {}".format(
                    box.name, image.semiring.tag, self.semiring.tag))
            return image
        return Tensor(self(box.dom), self(box.cod), image, self.semiring)

    def __call__(self, other):
        from . import hypergraph
        if isinstance(other, hypergraph.SpiderBox):
            leg_dims = [self(other.dom[i:i + 1])
                        for i in range(len(other.dom))]
            leg_dims += [self(other.cod[i:i + 1])
                         for i in range(len(other.cod))]
            if any(d != leg_dims[0] for d in leg_dims):
                raise BackendUnsupported(
                    "spider legs map to unequal dimensions: {}".format(
                        leg_dims))
            dim = leg_dims[0] if leg_dims else self(
                rigid.Ty(other.base))
            return Tensor.spiders(len(other.dom), len(other.cod), dim,
                                  self.semiring)
        if isinstance(other, hypergraph.SwapBox):
            return Tensor.swap(self(other.left), self(other.right),
                               self.semiring)
        return super().__call__(other)
