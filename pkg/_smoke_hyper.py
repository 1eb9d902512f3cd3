import random
import sys
sys.path.insert(0, "src")

from diagrammar import hypergraph as H
from diagrammar import rigid
from diagrammar.errors import (BadPort, BadWireCount, CompositionMismatch,
                               TypeConflict)

x, y, z = H.Ty('x'), H.Ty('y'), H.Ty('z')

# construction + validation
ident = H.Id(x)
assert ident.wires == [0, 0]
assert H.spider(1, 1, x) == ident
try:
    H.Diagram(x, x, [], [0, 0, 0])
    raise AssertionError("BadWireCount not raised")
except BadWireCount:
    pass
try:
    H.Diagram(x @ y, H.Ty(), [], [0, 0])
    raise AssertionError("TypeConflict not raised")
except TypeConflict:
    pass

# spider fusion via pushout
assert (H.spider(1, 2, x) >> H.spider(2, 1, x)) == H.spider(1, 1, x)
assert (H.spider(1, 2, x) >> H.spider(2, 1, x)) == ident
assert (H.spider(1, 2, x) >> (H.spider(1, 1, x) @ H.spider(1, 1, x))) \
    == H.spider(1, 2, x)
assert (H.spider(2, 1, x) >> H.spider(1, 3, x)) == H.spider(2, 3, x)

# swaps cancel
assert (H.swap(x, y) >> H.swap(y, x)) == H.Id(x @ y)
sw = H.swap(x @ y, z)
assert sw.dom == x @ y @ z and sw.cod == z @ x @ y

# snake via self-dual cups/caps
cap, cup = H.Diagram.caps(x, x), H.Diagram.cups(x, x)
snake = (H.Id(x) @ cap) >> (cup @ H.Id(x))
assert snake == H.Id(x)
other_snake = (cap @ H.Id(x)) >> (H.Id(x) @ cup)
assert other_snake == H.Id(x)

# closed loop survives as a scalar spider
loop = cap >> cup
assert loop.dom == H.Ty() and loop.cod == H.Ty()
assert loop.scalars() == [H.Ob('x')]
assert loop != H.Id(H.Ty())
assert (loop @ H.Id(y)) >> (loop @ H.Id(y)) != H.Id(y)
assert len(((loop @ H.Id(y)) >> (loop @ H.Id(y))).scalars()) == 2

# structure checks: cups and caps are the canonical non-monogamous shapes
assert H.structure_checks(ident) == {
    "monogamous": True, "bijective": True, "progressive": True}
assert not H.spider(1, 3, x).is_monogamous
assert H.spider(1, 3, x).is_progressive
assert H.structure_checks(cup) == {
    "monogamous": False, "bijective": False, "progressive": False}
assert H.structure_checks(cap) == {
    "monogamous": False, "bijective": False, "progressive": False}
f = H.Box('f', x, y @ z)
g = H.Box('g', y, x)
comp = f >> (g @ H.Id(z))
assert H.structure_checks(comp) == {
    "monogamous": True, "bijective": True, "progressive": True}

# composition errors
try:
    f >> g
    raise AssertionError("CompositionMismatch not raised")
except CompositionMismatch:
    pass

# associativity of pushout composition
rng = random.Random(7)
atoms = [H.spider(1, 2, x), H.spider(2, 1, x), H.spider(0, 1, x),
         H.spider(1, 0, x), H.Box('f', x, x), H.Box('g', x @ x, x),
         H.Id(x), H.swap(x, x) if True else None]

def rand_layer(n_in):
    """Random diagram with dom x^n_in built by tensoring atoms."""
    out = None
    need = n_in
    while need > 0:
        a = rng.choice([a for a in atoms if len(a.dom) <= need])
        out = a if out is None else out @ a
        need -= len(a.dom)
    return out if out is not None else H.Id(H.Ty())

for _ in range(200):
    n = rng.randint(1, 4)
    d1 = rand_layer(n)
    d2 = rand_layer(len(d1.cod))
    d3 = rand_layer(len(d2.cod))
    assert ((d1 >> d2) >> d3) == (d1 >> (d2 >> d3))

# from_rigid: tree diagrams are monogamous and progressive
n, s, d = rigid.Ty('n'), rigid.Ty('s'), rigid.Ty('d')
caesar = rigid.Box('Caesar', rigid.Ty(), n)
crossed = rigid.Box('crossed', rigid.Ty(), n.r @ s @ n.l)
the = rigid.Box('the', rigid.Ty(), d)
rubicon = rigid.Box('Rubicon', rigid.Ty(), d.r @ n)
words = caesar @ crossed @ the @ rubicon
sentence = words \
    >> (rigid.cups(n, n.r) @ rigid.Id(s @ n.l) @ rigid.cups(d, d.r) @ rigid.Id(n)) \
    >> (rigid.Id(s) @ rigid.cups(n.l, n))
img = H.from_rigid(sentence)
assert img.dom == H.Ty() and img.cod == H.Ty('s')
assert not img.is_monogamous
assert not img.is_progressive
tree = rigid.Box('root', rigid.Ty('a'), rigid.Ty('b') @ rigid.Ty('c'))
timg = H.from_rigid(tree >> (rigid.Box('u', rigid.Ty('b'), rigid.Ty()) @ rigid.Id(rigid.Ty('c'))))
assert H.structure_checks(timg) == {
    "monogamous": True, "bijective": True, "progressive": True}

# downgrade
assert H.downgrade(H.Id(x @ y)) == rigid.Id(rigid.Ty('x') @ rigid.Ty('y'))
dg = H.downgrade(H.spider(1, 2, x))
assert len(dg.boxes) == 1 and isinstance(dg.boxes[0], H.SpiderBox)
assert dg.boxes[0].dom == rigid.Ty('x') and dg.boxes[0].cod == rigid.Ty('x', 'x')

def roundtrip(diag):
    return H.from_rigid(H.downgrade(diag)) == diag

for diag in [ident, H.Id(x @ y @ z), H.spider(1, 2, x), H.spider(3, 2, y),
             H.spider(0, 0, x), cup, cap, snake, loop, comp, img, timg,
             H.swap(x, y), H.swap(x @ y, z), sw,
             H.spider(2, 2, x @ y)]:
    assert roundtrip(diag), repr(diag)

for _ in range(150):
    n0 = rng.randint(0, 3)
    diag = rand_layer(n0)
    for _ in range(rng.randint(0, 3)):
        diag = diag >> rand_layer(len(diag.cod))
    assert roundtrip(diag), repr(diag)
    assert H.structure_checks(H.from_rigid(H.downgrade(diag))) \
        == H.structure_checks(diag.canonical())

# coreference linking
alice = H.Box('Alice', H.Ty(), H.Ty('n'))
likes = H.Box('likes', H.Ty(), H.Ty('n', 's', 'n'))
bob = H.Box('Bob', H.Ty(), H.Ty('n'))
text = alice @ likes @ bob
assert text.cod == H.Ty('n', 'n', 's', 'n', 'n')
linked = H.coref_link(text, 0, 4)
assert linked.cod == H.Ty('n', 'n', 's', 'n')
writers, readers = linked._degrees()
assert sorted(writers.values()) == [1, 1, 1, 2]
assert sorted(readers.values()) == [1, 1, 1, 1]

# the same linking, spelled as swap-to-adjacency then an explicit 2->1 merge
nn, nsn = H.Ty('n'), H.Ty('n', 's', 'n')
routed = text >> (H.Id(nn) @ H.swap(nsn, nn)) \
    >> (H.spider(2, 1, nn) @ H.Id(nsn))
assert routed.cod == nn @ nsn
assert routed == linked

try:
    H.coref_link(text, 1, 1)
    raise AssertionError("BadPort not raised")
except BadPort:
    pass
try:
    H.coref_link(text, 0, 9)
    raise AssertionError("BadPort not raised")
except BadPort:
    pass
try:
    H.coref_link(text, 0, 2)
    raise AssertionError("TypeConflict not raised")
except TypeConflict:
    pass

# linking folds over a cluster
three = alice @ alice @ alice
folded = H.coref_link(H.coref_link(three, 0, 1), 0, 1)
assert folded.cod == H.Ty('n')
w2, r2 = folded._degrees()
assert sorted(r2.values()) == [0, 0, 1] or sorted(r2.values()) == [1]

# downgrade of a coreference text diagram stays valid rigid
resolved = H.coref_link(H.coref_link(text, 0, 1), 0, 3)
assert resolved.cod == H.Ty('n', 's', 'n')
assert roundtrip(resolved)

print("hypergraph smoke ok")
