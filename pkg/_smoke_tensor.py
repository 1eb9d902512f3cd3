import itertools

import numpy as np

import diagrammar.tensor as T
import diagrammar.rigid as R
import diagrammar.hypergraph as H
import diagrammar.network as N
from diagrammar import _kernels
from diagrammar.errors import (
    BackendUnsupported, BadOrder, IllTyped, NotClosed, ShapeMismatch)

print("backend:", _kernels.backend_in_use())

# --- Dim basics ---
assert T.Dim(2, 3, 1) == T.Dim(2, 3)
assert T.Dim(1) == T.Dim()
assert tuple(T.Dim(2, 3)) == (2, 3)
assert T.Dim(2, 3).l == T.Dim(3, 2) == T.Dim(2, 3).r
assert T.Dim(2, 3).prod() == 6
assert T.Dim(2) @ T.Dim(3) == T.Dim(2, 3)
try:
    T.Dim(0)
    raise SystemExit("Dim(0) accepted")
except IllTyped:
    pass
try:
    T.Dim(True)
    raise SystemExit("Dim(True) accepted")
except IllTyped:
    pass

# --- Tensor then/tensor ---
x = T.Dim(2)
f = T.Tensor(x, x, [[0, 1], [1, 0]])
g = T.Tensor(T.Dim(), x, [1, 2])
assert (g >> f) == T.Tensor(T.Dim(), x, [2, 1])
h = T.Tensor(x, x, [[1, 2], [3, 4]])
assert (f >> h) == T.Tensor(x, x, [[3, 4], [1, 2]])
assert (f @ h).dom == x @ x and (f @ h).cod == x @ x
# tensor product vs kron on matrices
fk = (f @ h).array.reshape(4, 4)
assert np.allclose(fk, np.kron(f.array, h.array))

# scalar then
one = T.Tensor(T.Dim(), T.Dim(), [2.0])
two = T.Tensor(T.Dim(), T.Dim(), [3.0])
assert (one >> two).array == 6.0
assert (one @ two).array == 6.0

# id
assert T.Tensor.id(T.Dim(2, 3)) >> T.Tensor.id(T.Dim(2, 3)) \
    == T.Tensor.id(T.Dim(2, 3))
assert (T.Tensor.id(T.Dim(2)) @ T.Tensor.id(T.Dim(3))) \
    == T.Tensor.id(T.Dim(2, 3))

# --- snake equations on Dim(3, 2) ---
d = T.Dim(3, 2)
cup_r, cap_r = T.Tensor.cups(d, d.r), T.Tensor.caps(d.r, d)
snake_r = T.Tensor.id(d) @ cap_r >> cup_r @ T.Tensor.id(d)
assert np.allclose(snake_r.array, T.Tensor.id(d).array, atol=1e-9)
cup_l, cap_l = T.Tensor.cups(d.l, d), T.Tensor.caps(d, d.l)
snake_l = cap_l @ T.Tensor.id(d) >> T.Tensor.id(d) @ cup_l
assert np.allclose(snake_l.array, T.Tensor.id(d).array, atol=1e-9)

# --- swap ---
s23 = T.Tensor.swap(T.Dim(2), T.Dim(3))
s32 = T.Tensor.swap(T.Dim(3), T.Dim(2))
assert (s23 >> s32) == T.Tensor.id(T.Dim(2, 3))
xx = T.Dim(2)
assert (T.Tensor.swap(xx, xx) @ T.Tensor.id(xx)
        >> T.Tensor.id(xx) @ T.Tensor.swap(xx, xx)) \
    == T.Tensor.swap(xx, xx @ xx)
v = T.Tensor(T.Dim(), T.Dim(2), [1, 2])
w = T.Tensor(T.Dim(), T.Dim(3), [1, 2, 3])
assert (v @ w >> s23) == (w @ v)

# --- spiders ---
sp = T.Tensor.spiders(1, 2, T.Dim(2))
assert sp.array.shape == (2, 2, 2)
assert sp.array[0, 0, 0] == 1 and sp.array[1, 1, 1] == 1
assert sp.array.sum() == 2
# fusion
m = T.Tensor.spiders(2, 1, T.Dim(2)) >> T.Tensor.spiders(1, 3, T.Dim(2))
assert m == T.Tensor.spiders(2, 3, T.Dim(2))
assert T.Tensor.spiders(1, 1, T.Dim(4)) == T.Tensor.id(T.Dim(4))
assert T.Tensor.spiders(0, 0, T.Dim(5)).array == 5.0
# multi-object spider interleaving: must equal spiders(x) interleaved
big = T.Tensor.spiders(1, 2, T.Dim(2, 3))
for i, j in itertools.product(range(2), range(3)):
    assert big.array[i, j, i, j, i, j] == 1
assert big.array.sum() == 6
# Bool spider(3, 0) over Dim(2): AND of equality
b = T.Tensor.spiders(3, 0, T.Dim(2), T.Bool)
assert b.array.dtype == np.bool_
for i, j, k in itertools.product(range(2), repeat=3):
    assert b.array[i, j, k] == (i == j == k)

# --- semirings ---
r1 = T.Tensor(x, x, [[1, 1], [0, 1]], T.Bool)
r2 = T.Tensor(x, x, [[0, 1], [1, 0]], T.Bool)
comp = r1 >> r2
for i, j in itertools.product(range(2), repeat=2):
    assert comp.array[i, j] == any(
        r1.array[i, k] and r2.array[k, j] for k in range(2))
n1 = T.Tensor(x, x, [[2, 1], [0, 3]], T.Nat)
assert (n1 >> n1).array.dtype == np.int64
assert ((n1 >> n1).array == n1.array @ n1.array).all()
c1 = T.Tensor(T.Dim(), x, [1j, 1], T.Complex)
assert np.allclose((c1 >> T.Tensor.id(x, T.Complex)).array, [1j, 1])
try:
    r1 >> n1
    raise SystemExit("semiring mix accepted")
except ShapeMismatch:
    pass
try:
    T.Tensor(x, x, [1, 2, 3])
    raise SystemExit("bad size accepted")
except ShapeMismatch:
    pass

# --- interchange numerically ---
a = T.Tensor(T.Dim(2), T.Dim(3), np.arange(6))
bb = T.Tensor(T.Dim(3), T.Dim(4), np.arange(12))
c = T.Tensor(T.Dim(5), T.Dim(2), np.arange(10))
dd = T.Tensor(T.Dim(2), T.Dim(4), np.arange(8))
lhs = (a @ c) >> (bb @ dd)
rhs = (a >> bb) @ (c >> dd)
assert lhs == rhs

# --- functor: DisCoCat Moses sentence ---
n, s = R.Ty('n'), R.Ty('s')
Moses = R.Box('Moses', R.Ty(), n)
Sea = R.Box('Sea', R.Ty(), n)
crossed = R.Box('crossed', R.Ty(), n.r @ s @ n.l)
sentence = Moses @ crossed @ Sea \
    >> R.cups(n, n.r) @ R.Diagram.id(s) @ R.cups(n.l, n)
F = T.Functor(
    ob={R.Ob('n'): 2, R.Ob('s'): 1},
    ar={Moses: [1, 0], Sea: [0, 1],
        crossed: [[0, 1], [1, 0]]})
assert F(n) == T.Dim(2) and F(s) == T.Dim()
assert F(n.r) == T.Dim(2)
assert F(sentence).array == 1.0
assert F(sentence) == F(Moses @ crossed @ Sea) \
    >> F(R.cups(n, n.r) @ R.Diagram.id(s) @ R.cups(n.l, n))

# functor with callable ob/ar
G = T.Functor(ob=lambda ob: 2, ar=lambda box: np.eye(2))
assert G(R.Box('f', n, n)) == T.Tensor.id(T.Dim(2))

# caps under functor
cap_d = R.caps(n, n.l)
assert np.allclose(F(cap_d).array, T.Tensor.caps(T.Dim(2), T.Dim(2)).array)

# --- functor through hypergraph downgrade ---
rng = np.random.default_rng(7)
f1 = R.Box('f1', n, n @ n)
f2 = R.Box('f2', n @ n, n)
diag = f1 >> f2
arrays = {f1: rng.integers(0, 3, 8), f2: rng.integers(0, 3, 8)}
F2 = T.Functor(ob={R.Ob('n'): 2}, ar=arrays)
down = H.from_rigid(diag).downgrade()
assert F2(down) == F2(diag)
# spider box straight through the functor
spbox = H.spider(2, 1, R.Ty('n'))
sdown = spbox.downgrade()
assert F2(sdown) == T.Tensor.spiders(2, 1, T.Dim(2))
# unequal leg dims refuse
F3 = T.Functor(ob={R.Ob('n'): 2, R.Ob('m'): 3}, ar={})
try:
    F3(H.SpiderBox(R.Ty('n'), R.Ty('m'), R.Ob('n')))
    raise SystemExit("unequal spider dims accepted")
except BackendUnsupported:
    pass

# --- networks ---
net = N.net_from_diagram(sentence, F)
assert sorted(net.vertices) == [0, 1, 2]
assert len(net.edges) == 2
val = N.contract_with_order(net, N.greedy_order(net))
assert abs(val - 1.0) < 1e-9
for order in itertools.permutations(net.vertices):
    assert abs(N.contract_with_order(net, list(order)) - 1.0) < 1e-9

# inner product: cup-closed pair
u1 = R.Box('u1', R.Ty(), n)
u2 = R.Box('u2', R.Ty(), n.r)
pair = u1 @ u2 >> R.cups(n, n.r)
Fp = T.Functor(ob={R.Ob('n'): 3}, ar={u1: [1, 2, 3], u2: [4, 5, 6]})
netp = N.net_from_diagram(pair, Fp)
assert len(netp.vertices) == 2 and len(netp.edges) == 1
assert netp.edges[0][2] == 3
assert abs(N.contract_with_order(netp, [0, 1]) - 32.0) < 1e-9
assert abs(N.contract_with_order(netp, [1, 0]) - 32.0) < 1e-9

# not closed
try:
    N.net_from_diagram(u1, Fp)
    raise SystemExit("open diagram accepted")
except NotClosed:
    pass
# dim-1 boundary is fine
okF = T.Functor(ob={R.Ob('n'): 1}, ar={u1: [7.0]})
net1 = N.net_from_diagram(u1, okF)
assert abs(N.contract_with_order(net1, net1.vertices) - 7.0) < 1e-9

# three-box hub: spider with three legs
g1 = R.Box('g1', R.Ty(), n)
g2 = R.Box('g2', n, R.Ty())
g3 = R.Box('g3', n, R.Ty())
tri = H.from_rigid(g1).then(H.spider(1, 2, R.Ty('n'))).then(
    H.from_rigid(g2 @ g3)).downgrade()
Ft = T.Functor(ob={R.Ob('n'): 2},
               ar={g1: [1, 2], g2: [3, 5], g3: [7, 11]})
nett = N.net_from_diagram(tri, Ft)
expect = 1 * 3 * 7 + 2 * 5 * 11
for order in itertools.permutations(nett.vertices):
    assert abs(N.contract_with_order(nett, list(order)) - expect) < 1e-9

# Bool network equals brute force
rb = np.array([[True, False], [True, True]])
hb1 = R.Box('hb1', R.Ty(), n)
hb2 = R.Box('hb2', n @ n, R.Ty())
bool_diag = hb1 @ hb1 >> hb2
Fb = T.Functor(ob={R.Ob('n'): 2},
               ar={hb1: [True, True], hb2: rb}, semiring=T.Bool)
netb = N.net_from_diagram(bool_diag, Fb)
brute = any(rb[i, j] for i in range(2) for j in range(2))
for order in itertools.permutations(netb.vertices):
    assert N.contract_with_order(netb, list(order)) == brute

# bubblewidth on a triangle: 2 under every order
tri_net = N.Net([0, 1, 2],
                [(0, 1, 2), (1, 2, 2), (0, 2, 2)],
                {0: np.ones((2, 2)), 1: np.ones((2, 2)),
                 2: np.ones((2, 2))})
for order in itertools.permutations([0, 1, 2]):
    assert N.bubblewidth_of_order(tri_net, list(order)) == 2
# path A - B - C contracted A, B, C has width 1
path_net = N.Net([0, 1, 2], [(0, 1, 2), (1, 2, 2)],
                 {0: np.ones(2), 1: np.ones((2, 2)), 2: np.ones(2)})
assert N.bubblewidth_of_order(path_net, [0, 1, 2]) == 1
assert N.bubblewidth_of_order(path_net, [0, 2, 1]) == 2
single = N.Net([0], [], {0: np.asarray(3.0)})
assert N.bubblewidth_of_order(single, [0]) == 0
assert N.best_order(path_net) in ([0, 1, 2], [2, 1, 0])
assert N.bubblewidth_of_order(path_net, N.best_order(path_net)) == 1
assert N.bubblewidth_of_order(tri_net, N.greedy_order(tri_net)) == 2
try:
    N.contract_with_order(tri_net, [0, 1])
    raise SystemExit("partial order accepted")
except BadOrder:
    pass

# self-loop trace
loop = N.Net([0], [(0, 0, 3)], {0: np.eye(3)})
assert abs(N.contract_with_order(loop, [0]) - 3.0) < 1e-9

# random order invariance, Real and Bool
for trial in range(30):
    size = int(rng.integers(2, 5))
    verts = list(range(size))
    edges = []
    for i in range(1, size):
        j = int(rng.integers(0, i))
        edges.append((j, i, int(rng.integers(1, 4))))
    for _ in range(int(rng.integers(0, 3))):
        i, j = int(rng.integers(0, size)), int(rng.integers(0, size))
        edges.append(tuple(sorted((i, j))) + (int(rng.integers(1, 4)),))
    shapes = {v: tuple(d for a, b, d in edges for e in (a, b) if e == v)
              for v in verts}
    arrays_r = {v: rng.standard_normal(shapes[v]) for v in verts}
    net_r = N.Net(verts, edges, arrays_r)
    vals = [N.contract_with_order(net_r, list(o))
            for o in itertools.permutations(verts)]
    assert all(abs(v - vals[0]) < 1e-9 * max(1, abs(vals[0])) for v in vals)
    arrays_b = {v: rng.integers(0, 2, shapes[v]).astype(bool) for v in verts}
    net_b = N.Net(verts, edges, arrays_b, T.Bool)
    bvals = {N.contract_with_order(net_b, list(o))
             for o in itertools.permutations(verts)}
    assert len(bvals) == 1

print("tensor smoke ok")
