import random

import diagrammar.biclosed as B
import diagrammar.function as Fn
from diagrammar.errors import (
    ArityError, ArityMismatch, CompositionMismatch, NotClosedType,
    TooManyWires)

F = Fn.Function
X = B.Ty('X')

# cartesian axioms, straight from the axioms listing
copy, delete, I, swap = (F.copy(X), F.delete(X), F.id(X), F.swap(X, X))
assert (copy >> copy @ I)(54) == (copy >> I @ copy)(54)
assert (copy >> delete @ I)(46) == (copy >> I @ delete)(46) == (46,)
assert (copy >> swap)('was my number') == copy('was my number')
f = F(lambda x: (46,) if x == 54 else (54,), X, X)
assert (f >> copy)(54) == (copy >> f @ f)(54)
assert (copy @ copy >> I @ swap @ I)(54, 46) == F.copy(X @ X)(54, 46)

# then / tensor
inc = F(lambda x: (x + 1,), X, X)
double = F(lambda x: (2 * x,), X, X)
assert (inc >> double)(3) == (8,)
assert (inc @ double)(3, 3) == (4, 6)
try:
    g2 = F(lambda x, y: (x,), X @ X, X)
    inc >> g2
    raise SystemExit("mismatched then accepted")
except CompositionMismatch:
    pass
try:
    inc(1, 2)
    raise SystemExit("bad arity accepted")
except ArityError:
    pass
try:
    F(lambda x: (x, x), X, X)(1)
    raise SystemExit("bad output arity accepted")
except ArityError:
    pass

# block swap
sw = F.swap(X @ X, X)
assert sw(1, 2, 3) == (3, 1, 2)

# curry / uncurry round trips, including asymmetric functions
sub = F(lambda x, y: (x - y,), X @ X, X)
assert sub.curry().uncurry()(10, 4) == (6,)
assert sub.curry(left=True).uncurry()(10, 4) == (6,)
add3 = F(lambda x, y, z: (x + y + z,), X @ X @ X, X)
assert add3.curry(n_wires=2).uncurry()(1, 2, 3) == (6,)
assert add3.curry(n_wires=2, left=True).uncurry()(1, 2, 3) == (6,)
assert add3.curry().curry().uncurry().uncurry()(1, 2, 3) == (6,)
add = F(lambda x, y: (x + y,), X @ X, X)
assert add.curry().curry(left=True).cod == B.Ty('X') >> (X << X)
equals = F(lambda x, y: (x == y,), X @ X, X)
assert equals.curry(left=True).curry().cod == X >> X << X
try:
    inc.uncurry()
    raise SystemExit("plain uncurry accepted")
except NotClosedType:
    pass
try:
    inc.curry(n_wires=2)
    raise SystemExit("overwide curry accepted")
except TooManyWires:
    pass

# structural dispatcher
assert Fn.structural("copy", X)(7) == (7, 7)
assert Fn.structural("swap", X, X)(1, 2) == (2, 1)
try:
    Fn.structural("swap", X)
    raise SystemExit("bad structural arity accepted")
except ArityMismatch:
    pass

# random extensional round trips
rng = random.Random(11)
for _ in range(100):
    n = rng.randint(1, 4)
    coeffs = [rng.randint(-5, 5) for _ in range(n)]
    base = F(
        lambda *xs, c=tuple(coeffs): (sum(a * x for a, x in zip(c, xs)),),
        B.Ty(*['X'] * n), X)
    k = rng.randint(1, n)
    left = rng.choice([True, False])
    args = tuple(rng.randint(-9, 9) for _ in range(n))
    assert base.curry(k, left).uncurry()(*args) == base(*args)

# Montague: two plus three is five
sentence, M = Fn.montague_demo()
assert M(sentence)() == (True,)
# altered constant gives False
N, S = B.Ty('N'), B.Ty('S')
two_w = B.Box('two', B.Ty(), N)
three_w = B.Box('three', B.Ty(), N)
five_w = B.Box('five', B.Ty(), N)
plus_w = B.Box('plus', B.Ty(), N >> (N << N))
is_w = B.Box('is', B.Ty(), N >> S << N)
number = lambda y: F(lambda: (y,), B.Ty(), N)
add_f = F(lambda x, y: (x + y,), N @ N, N)
eq_f = F(lambda x, y: (x == y,), N @ N, S)
M2 = Fn.Functor(ob=lambda x: B.Ty(x), ar={
    two_w: number(2), three_w: number(3), five_w: number(6),
    is_w: eq_f.curry(left=True).curry(),
    plus_w: add_f.curry().curry(left=True)})
assert M2(sentence)() == (False,)

# Lawvere: Fifty four was my number
diagram, L = Fn.lawvere_demo()
assert L(diagram)() == (True,)

print("function smoke ok")
