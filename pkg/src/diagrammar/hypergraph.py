"""Free hypergraph categories: diagrams as boxes wired through spiders.

A diagram is stored by its incidence graph: a list of boxes and one spider
id per port, ports running through the diagram domain, each box's domain
and codomain in order, and the diagram codomain. Composition identifies
spiders across the shared boundary by a union-find pushout, so spider
fusion needs no rewrite rules. Every object is self-dual: winding numbers
on the underlying types are ignored when typing spiders.
"""

from . import rigid
from .errors import (BadPort, BadWireCount, CompositionMismatch,
                     TypeConflict)

Ty = rigid.Ty
Ob = rigid.Ob


def _base(ob):
    """Strip the winding: spiders are typed by self-dual base objects."""
    return Ob(ob.name) if getattr(ob, "z", 0) else ob


def _as_ty(t):
    if isinstance(t, rigid.Ty):
        return t
    if t is None:
        return Ty()
    return Ty(t)


def _pow(ty, n):
    out = Ty()
    for _ in range(n):
        out = out @ ty
    return out


class Diagram:
    """A hypergraph diagram: boxes plus a ports-to-spiders map.

    ``wires`` lists one spider id per port in the order [diagram dom,
    box1 dom, box1 cod, box2 dom, ..., diagram cod]. ``spider_types``
    may declare extra spiders with no ports (scalars); all port types
    hitting one spider must agree up to winding.
    """

    def __init__(self, dom, cod, boxes, wires, spider_types=None):
        dom, cod = _as_ty(dom), _as_ty(cod)
        self.dom, self.cod, self.boxes = dom, cod, list(boxes)
        self.wires = list(wires)
        port_types = list(dom.objects)
        for box in self.boxes:
            port_types += list(box.dom.objects) + list(box.cod.objects)
        port_types += list(cod.objects)
        if len(self.wires) != len(port_types):
            raise BadWireCount("{} wires for {} ports".format(
                len(self.wires), len(port_types)))
        types = {}
        for spider, ob in zip(self.wires, port_types):
            base = _base(ob)
            if types.setdefault(spider, base) != base:
                raise TypeConflict("spider {} carries both {} and {}".format(
                    spider, types[spider], base))
        if spider_types is not None:
            declared = spider_types if isinstance(spider_types, dict) \
                else dict(enumerate(spider_types))
            for spider, ob in declared.items():
                base = _base(ob)
                if types.setdefault(spider, base) != base:
                    raise TypeConflict(
                        "spider {} declared {} but carries {}".format(
                            spider, base, types[spider]))
        self.spider_types = types

    @classmethod
    def id(cls, ty=None):
        ty = _as_ty(ty)
        return cls(ty, ty, [], list(range(len(ty))) * 2)

    # --- port-slice helpers --------------------------------------------
    def _dom_wires(self):
        return self.wires[:len(self.dom)]

    def _cod_wires(self):
        return self.wires[len(self.wires) - len(self.cod):]

    def _box_wires(self):
        """Per box, the pair (dom spider ids, cod spider ids)."""
        out, i = [], len(self.dom)
        for box in self.boxes:
            n, m = len(box.dom), len(box.cod)
            out.append((self.wires[i:i + n], self.wires[i + n:i + n + m]))
            i += n + m
        return out

    # --- composition ----------------------------------------------------
    def then(self, other):
        if not isinstance(other, Diagram):
            raise CompositionMismatch("expected a hypergraph diagram")
        if self.cod != other.dom:
            raise CompositionMismatch(
                "cannot compose {} with {}".format(self.cod, other.dom))
        shift = max(self.spider_types, default=-1) + 1
        parent = {}

        def find(s):
            root = s
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(s, s) != s:
                parent[s], s = root, parent[s]
            return root

        for a, b in zip(self._cod_wires(), other._dom_wires()):
            parent[find(a)] = find(b + shift)
        wires = [find(s) for s in self.wires[:len(self.wires) - len(self.cod)]]
        wires += [find(s + shift) for s in other.wires[len(other.dom):]]
        spider_types = {}
        for s, ob in self.spider_types.items():
            spider_types[find(s)] = ob
        for s, ob in other.spider_types.items():
            spider_types[find(s + shift)] = ob
        return Diagram(self.dom, other.cod, self.boxes + other.boxes,
                       wires, spider_types)

    def tensor(self, other=None, *rest):
        if other is None:
            return self
        shift = max(self.spider_types, default=-1) + 1
        n, m = len(self.dom), len(self.cod)
        n2, m2 = len(other.dom), len(other.cod)
        wires = (self.wires[:n]
                 + [s + shift for s in other.wires[:n2]]
                 + self.wires[n:len(self.wires) - m]
                 + [s + shift
                    for s in other.wires[n2:len(other.wires) - m2]]
                 + self.wires[len(self.wires) - m:]
                 + [s + shift
                    for s in other.wires[len(other.wires) - m2:]])
        spider_types = dict(self.spider_types)
        spider_types.update(
            {s + shift: ob for s, ob in other.spider_types.items()})
        result = Diagram(self.dom @ other.dom, self.cod @ other.cod,
                         self.boxes + other.boxes, wires, spider_types)
        return result.tensor(*rest) if rest else result

    def __rshift__(self, other):
        return self.then(other)

    def __matmul__(self, other):
        return self.tensor(other)

    # --- canonical form ---------------------------------------------------
    def canonical(self):
        """Renumber spiders densely: wire order first, then isolated ones."""
        mapping = {}
        for s in self.wires:
            if s not in mapping:
                mapping[s] = len(mapping)
        isolated = sorted(
            (s for s in self.spider_types if s not in mapping),
            key=lambda s: (self.spider_types[s].name, s))
        for s in isolated:
            mapping[s] = len(mapping)
        return Diagram(self.dom, self.cod, self.boxes,
                       [mapping[s] for s in self.wires],
                       {mapping[s]: ob
                        for s, ob in self.spider_types.items()})

    def scalars(self):
        """Types of the isolated spiders (closed loops), in canonical order."""
        canon = self.canonical()
        used = set(canon.wires)
        return [canon.spider_types[s]
                for s in sorted(canon.spider_types) if s not in used]

    def _key(self):
        canon = self.canonical()
        return (canon.dom, canon.cod,
                tuple((type(b).__name__, b.name, b.dom, b.cod)
                      for b in canon.boxes),
                tuple(canon.wires),
                tuple(sorted(canon.spider_types.items())))

    def __eq__(self, other):
        return isinstance(other, Diagram) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "hypergraph.Diagram({!r}, {!r}, boxes={}, wires={})".format(
            self.dom, self.cod, [box.name for box in self.boxes], self.wires)

    # --- structure predicates -----------------------------------------
    def _degrees(self):
        """Writers and readers per spider.

        A spider is written by diagram dom ports and box cod ports, and
        read by box dom ports and diagram cod ports.
        """
        writers = {s: 0 for s in self.spider_types}
        readers = {s: 0 for s in self.spider_types}
        for s in self._dom_wires():
            writers[s] += 1
        for dom_w, cod_w in self._box_wires():
            for s in dom_w:
                readers[s] += 1
            for s in cod_w:
                writers[s] += 1
        for s in self._cod_wires():
            readers[s] += 1
        return writers, readers

    @property
    def is_monogamous(self):
        writers, readers = self._degrees()
        return all(writers[s] <= 1 and readers[s] <= 1
                   for s in self.spider_types)

    @property
    def is_bijective(self):
        writers, readers = self._degrees()
        return all(writers[s] == 1 and readers[s] == 1
                   for s in self.spider_types)

    @property
    def is_progressive(self):
        """Wires flow downward: one writer, and every read comes after it."""
        writers, _ = self._degrees()
        if any(count > 1 for count in writers.values()):
            return False
        seen = set(self._dom_wires())
        for dom_w, cod_w in self._box_wires():
            if not set(dom_w) <= seen:
                return False
            seen |= set(cod_w)
        return set(self._cod_wires()) <= seen

    # --- structural morphisms (also used as functor hooks) ------------------
    @staticmethod
    def swap(left, right):
        left, right = _as_ty(left), _as_ty(right)
        dom = left @ right
        wires = list(range(len(dom))) \
            + list(range(len(left), len(dom))) + list(range(len(left)))
        return Diagram(dom, right @ left, [], wires)

    @staticmethod
    def spiders(n_in, n_out, ty):
        ty = _as_ty(ty)
        wires = (n_in + n_out) * list(range(len(ty)))
        return Diagram(_pow(ty, n_in), _pow(ty, n_out), [], wires,
                       {i: _base(ob) for i, ob in enumerate(ty.objects)})

    @staticmethod
    def cups(left, right):
        left, right = _as_ty(left), _as_ty(right)
        if [_base(a) for a in left] != [_base(b) for b in right[::-1]]:
            raise TypeConflict(
                "cannot bend {} against {}".format(left, right))
        n = len(left)
        return Diagram(left @ right, Ty(), [],
                       list(range(n)) + list(reversed(range(n))))

    @staticmethod
    def caps(left, right):
        left, right = _as_ty(left), _as_ty(right)
        if [_base(a) for a in left] != [_base(b) for b in right[::-1]]:
            raise TypeConflict(
                "cannot bend {} against {}".format(left, right))
        n = len(left)
        return Diagram(Ty(), left @ right, [],
                       list(range(n)) + list(reversed(range(n))))

    def downgrade(self):
        return downgrade(self)


class Box(Diagram):
    """A single generator box as a hypergraph diagram."""

    def __init__(self, name, dom, cod):
        dom, cod = _as_ty(dom), _as_ty(cod)
        self.name = str(name)
        n, m = len(dom), len(cod)
        wires = list(range(n)) + list(range(n)) \
            + list(range(n, n + m)) + list(range(n, n + m))
        Diagram.__init__(self, dom, cod, [rigid.Box(name, dom, cod)], wires)


def Id(ty=None):
    return Diagram.id(ty)


def spider(n_in, n_out, ty):
    return Diagram.spiders(n_in, n_out, ty)


def swap(left, right):
    return Diagram.swap(left, right)


def structure_checks(diagram):
    return {"monogamous": diagram.is_monogamous,
            "bijective": diagram.is_bijective,
            "progressive": diagram.is_progressive}


class SpiderBox(rigid.Box):
    """Explicit spider generator emitted by downgrade.

    Boundary types may disagree on windings (the spider does not care), so
    dom and cod are stored verbatim; 2→0 and 0→2 spider boxes play the
    role of self-dual cups and caps.
    """

    def __init__(self, dom, cod, base):
        self.base = base
        super().__init__(
            "Spider({}, {}, {})".format(len(dom), len(cod), base), dom, cod)


class SwapBox(rigid.Box):
    """Explicit wire crossing emitted by downgrade."""

    def __init__(self, left, right):
        left, right = _as_ty(left), _as_ty(right)
        self.left, self.right = left, right
        super().__init__("Swap({}, {})".format(left, right),
                         left @ right, right @ left)


def from_rigid(diagram, ar=None):
    """Reinterpret a rigid diagram as a hypergraph diagram.

    Cups and caps become bent wires, spider and swap boxes (as emitted by
    ``downgrade``) become wiring, and any other box maps through ``ar``,
    defaulting to a same-name hypergraph box.
    """
    def dispatch(box):
        if isinstance(box, SpiderBox):
            n, m = len(box.dom), len(box.cod)
            if n + m == 0:
                return Diagram(Ty(), Ty(), [], [], {0: _base(box.base)})
            return Diagram(box.dom, box.cod, [], [0] * (n + m))
        if isinstance(box, SwapBox):
            return Diagram.swap(box.left, box.right)
        if ar is not None:
            return ar(box)
        return Box(box.name, box.dom, box.cod)

    functor = rigid.Functor(ob=lambda ob: Ty(Ob(ob.name)), ar=dispatch,
                            cod=(Ty, Diagram))
    return functor(diagram)


def coref_link(diagram, port_a, port_b):
    """Merge the spiders under two codomain ports of equal type.

    Post-composes a two-to-one identification, so the codomain loses the
    second port; repeated linking folds a whole coreference cluster.
    """
    n = len(diagram.cod)
    if not (0 <= port_a < n and 0 <= port_b < n) or port_a == port_b:
        raise BadPort("cannot link cod ports {} and {} of {}".format(
            port_a, port_b, diagram.cod))
    lo, hi = min(port_a, port_b), max(port_a, port_b)
    if _base(diagram.cod.objects[lo]) != _base(diagram.cod.objects[hi]):
        raise TypeConflict("linked ports carry types {} and {}".format(
            diagram.cod.objects[lo], diagram.cod.objects[hi]))
    dom_wires = list(range(n))
    dom_wires[hi] = lo
    cod_wires = [i for i in range(n) if i != hi]
    merge = Diagram(diagram.cod, diagram.cod[:hi] @ diagram.cod[hi + 1:],
                    [], dom_wires + cod_wires)
    return diagram >> merge


# ---------------------------------------------------------------------------
# downgrade to a rigid diagram
# ---------------------------------------------------------------------------

def _bring_adjacent(diagram, scan, positions):
    """Bubble the scan entries at ``positions`` into one block, in order.

    Mutates ``scan`` alongside the growing rigid diagram; returns the
    extended diagram and the leftmost index of the gathered block.
    """
    target = min(positions) if positions else len(scan)
    order = list(positions)
    for slot, pos in enumerate(order):
        dest = target + slot
        pos = pos + sum(1 for q in order[:slot] if q > pos)
        while pos > dest:
            box = SwapBox(Ty(scan[pos - 1][1]), Ty(scan[pos][1]))
            diagram = diagram >> (
                rigid.Id(Ty(*[ob for _, ob in scan[:pos - 1]]))
                @ box
                @ rigid.Id(Ty(*[ob for _, ob in scan[pos + 1:]])))
            scan[pos - 1], scan[pos] = scan[pos], scan[pos - 1]
            pos -= 1
        while pos < dest:
            box = SwapBox(Ty(scan[pos][1]), Ty(scan[pos + 1][1]))
            diagram = diagram >> (
                rigid.Id(Ty(*[ob for _, ob in scan[:pos]]))
                @ box
                @ rigid.Id(Ty(*[ob for _, ob in scan[pos + 2:]])))
            scan[pos], scan[pos + 1] = scan[pos + 1], scan[pos]
            pos += 1
    return diagram, target


def _emit(diagram, scan, at, width, box, legs):
    """Replace ``width`` scan entries at ``at`` by ``box`` emitting ``legs``."""
    result = diagram >> (rigid.Id(Ty(*[ob for _, ob in scan[:at]]))
                         @ box
                         @ rigid.Id(Ty(*[ob for _, ob in scan[at + width:]])))
    scan[at:at + width] = legs
    return result


def downgrade(diagram):
    """Realize a hypergraph diagram as a rigid diagram.

    One spider box per spider (one-in one-out spiders elide to plain
    wires), swap boxes bubbling wires into place, and 2→0 spider boxes
    cupping the feedback legs of writers that sit below their spider. The
    layout promises validity rather than minimality: re-reading the
    output as a hypergraph diagram recovers the canonical form of the
    input.
    """
    diagram = diagram.canonical()
    box_wires = diagram._box_wires()
    cod_wires = diagram._cod_wires()

    out = rigid.Id(diagram.dom)
    scan = [(("top", s, i), ob) for i, (s, ob)
            in enumerate(zip(diagram._dom_wires(), diagram.dom))]

    # spider band: gather each spider's dom legs and emit one spider box
    # with a leg per reader plus a feedback leg per box-side writer
    for s in sorted(diagram.spider_types):
        positions = [i for i, (tok, _) in enumerate(scan)
                     if tok[0] == "top" and tok[1] == s]
        legs = []
        for b, (dom_w, _) in enumerate(box_wires):
            legs += [(("read", s, b, p), diagram.boxes[b].dom.objects[p])
                     for p, w in enumerate(dom_w) if w == s]
        legs += [(("codread", s, i), diagram.cod.objects[i])
                 for i, w in enumerate(cod_wires) if w == s]
        for b, (_, cod_w) in enumerate(box_wires):
            legs += [(("feedback", s, b, p), diagram.boxes[b].cod.objects[p])
                     for p, w in enumerate(cod_w) if w == s]
        if len(positions) == 1 and len(legs) == 1 \
                and scan[positions[0]][1] == legs[0][1]:
            scan[positions[0]] = legs[0]
            continue
        out, at = _bring_adjacent(out, scan, positions)
        box = SpiderBox(Ty(*[scan[at + k][1] for k in range(len(positions))]),
                        Ty(*[ob for _, ob in legs]),
                        diagram.spider_types[s])
        out = _emit(out, scan, at, len(positions), box, legs)

    # box band: feed each box, then cup its outputs against feedback legs
    for b, box in enumerate(diagram.boxes):
        dom_w, cod_w = box_wires[b]
        tokens = [("read", dom_w[p], b, p) for p in range(len(dom_w))]
        positions = [next(i for i, (t, _) in enumerate(scan) if t == tok)
                     for tok in tokens]
        out, at = _bring_adjacent(out, scan, positions)
        produced = [(("feedout", cod_w[p], b, p), box.cod.objects[p])
                    for p in range(len(cod_w))]
        out = _emit(out, scan, at, len(dom_w), box, produced)
        for p in range(len(cod_w)):
            i = next(k for k, (t, _) in enumerate(scan)
                     if t == ("feedout", cod_w[p], b, p))
            j = next(k for k, (t, _) in enumerate(scan)
                     if t == ("feedback", cod_w[p], b, p))
            out, at = _bring_adjacent(out, scan, [min(i, j), max(i, j)])
            cup = SpiderBox(Ty(scan[at][1], scan[at + 1][1]), Ty(),
                            _base(scan[at][1]))
            out = _emit(out, scan, at, 2, cup, [])

    # bottom band: permute the remaining legs into codomain order
    positions = [next(k for k, (t, _) in enumerate(scan)
                      if t == ("codread", s, i))
                 for i, s in enumerate(cod_wires)]
    out, _ = _bring_adjacent(out, scan, positions)
    return out
