"""Free monoidal categories via the premonoidal encoding.

A diagram is a list of boxes with offsets: box ``i`` acts at ``offsets[i]``
wires from the left of the current scan type. Validity is checked by
replaying the scan; interchangers swap adjacent boxes acting on disjoint
intervals; the normal form is the least element of the interchanger
equivalence class under a fixed layer key, so two diagrams are monoidally
equal iff their normal forms coincide structurally.
"""

from .cat import Ob
from .errors import (CompositionMismatch, IllTyped, InterchangerError,
                     MissingMapping, NegativeOffset)


def _as_ob(x):
    return x if isinstance(x, Ob) else Ob(x)


class Ty:
    """A tensor of objects; the empty type is the monoidal unit."""

    _ob_factory = staticmethod(_as_ob)

    def __init__(self, *objects):
        self.objects = [self._ob_factory(x) for x in objects]

    def _plain(self):
        """The class used for slices and tensors of this type.

        Special length-one types (function types, say) override this so
        that combining them yields an ordinary tensor type again.
        """
        return type(self)

    def tensor(self, other):
        out = Ty.__new__(self._plain())
        out.objects = self.objects + other.objects
        return out

    __matmul__ = tensor

    def __getitem__(self, key):
        if isinstance(key, slice):
            out = Ty.__new__(self._plain())
            out.objects = self.objects[key]
            return out
        return self.objects[key]

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def __eq__(self, other):
        return isinstance(other, Ty) and self.objects == other.objects

    def __hash__(self):
        return hash(tuple(self.objects))

    def __repr__(self):
        return "{}({})".format(
            type(self).__name__,
            ", ".join(repr(ob.name) if type(ob) is Ob else repr(ob)
                      for ob in self.objects))

    def __str__(self):
        return " @ ".join(map(str, self.objects)) or "Ty()"

    def sort_key(self):
        return tuple(str(ob) for ob in self.objects)


class Layer:
    """One slice of a diagram: a box whiskered by identity wires."""

    def __init__(self, left, box, right):
        self.left, self.box, self.right = left, box, right

    @property
    def dom(self):
        return self.left @ self.box.dom @ self.right

    @property
    def cod(self):
        return self.left @ self.box.cod @ self.right

    def __eq__(self, other):
        return isinstance(other, Layer) and \
            (self.left, self.box, self.right) == (other.left, other.box, other.right)

    def __hash__(self):
        return hash((self.left, self.box, self.right))

    def __repr__(self):
        return "Layer({!r}, {!r}, {!r})".format(self.left, self.box, self.right)


class Diagram:
    """A premonoidal encoding: dom, cod, boxes and their offsets."""

    def __init__(self, dom, cod, boxes, offsets):
        boxes, offsets = list(boxes), list(offsets)
        if len(boxes) != len(offsets):
            raise IllTyped("need one offset per box")
        scan = dom
        scans = [scan]
        for box, offset in zip(boxes, offsets):
            if offset < 0:
                raise NegativeOffset("offset {} is negative".format(offset))
            if offset + len(box.dom) > len(scan):
                raise IllTyped(
                    "box {} at offset {} does not fit in width {}".format(
                        box.name, offset, len(scan)))
            if scan[offset:offset + len(box.dom)] != box.dom:
                raise IllTyped(
                    "box {} expects {}, scan has {}".format(
                        box.name, box.dom,
                        scan[offset:offset + len(box.dom)]))
            scan = scan[:offset] @ box.cod @ scan[offset + len(box.dom):]
            scans.append(scan)
        if scan != cod:
            raise IllTyped("declared cod {}, scan ends at {}".format(cod, scan))
        self.dom, self.cod = dom, cod
        self.boxes, self.offsets = boxes, offsets
        self.scans = scans

    @classmethod
    def id(cls, ty):
        return Diagram(ty, ty, [], [])

    def then(self, other):
        if self.cod != other.dom:
            raise CompositionMismatch(
                "cannot compose: cod {} != dom {}".format(self.cod, other.dom))
        return Diagram(self.dom, other.cod,
                       self.boxes + other.boxes, self.offsets + other.offsets)

    __rshift__ = then

    def __lshift__(self, other):
        return other.then(self)

    def tensor(self, other):
        return Diagram(
            self.dom @ other.dom, self.cod @ other.cod,
            self.boxes + other.boxes,
            self.offsets + [n + len(self.cod) for n in other.offsets])

    __matmul__ = tensor

    def layers(self):
        out = []
        for box, offset, scan in zip(self.boxes, self.offsets, self.scans):
            out.append(Layer(scan[:offset], box,
                             scan[offset + len(box.dom):]))
        return out

    def __getitem__(self, key):
        if isinstance(key, slice):
            start, stop, step = key.indices(len(self.boxes))
            if step != 1:
                raise IndexError("diagrams slice with step 1 only")
            return Diagram(self.scans[start], self.scans[stop],
                           self.boxes[start:stop], self.offsets[start:stop])
        raise IndexError("diagrams support slicing only")

    def __len__(self):
        return len(self.boxes)

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return False
        return (self.dom, self.cod, self.boxes, self.offsets) \
            == (other.dom, other.cod, other.boxes, other.offsets)

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(self.boxes), tuple(self.offsets)))

    def __repr__(self):
        if not self.boxes:
            return "Id({!r})".format(self.dom)
        return "Diagram({!r}, {!r}, {!r}, {!r})".format(
            self.dom, self.cod, self.boxes, self.offsets)

    def __str__(self):
        if not self.boxes:
            return "Id({})".format(self.dom)
        return " >> ".join(
            "{} @ {}".format(box.name, offset)
            for box, offset in zip(self.boxes, self.offsets))

    def interchange(self, i, j):
        """Move box i to position j by adjacent interchanges.

        Adjacent boxes can swap iff their wire intervals are disjoint;
        otherwise they share a wire and InterchangerError is raised.
        """
        if not 0 <= i < len(self.boxes) or not 0 <= j < len(self.boxes):
            raise IndexError("box index out of range")
        if i == j:
            return self
        if abs(i - j) > 1:
            step = 1 if j > i else -1
            return self.interchange(i, i + step).interchange(i + step, j)
        i = min(i, j)
        box0, box1 = self.boxes[i], self.boxes[i + 1]
        off0, off1 = self.offsets[i], self.offsets[i + 1]
        if off1 + len(box1.dom) <= off0:
            new_boxes = [box1, box0]
            new_offsets = [off1, off0 + len(box1.cod) - len(box1.dom)]
        elif off1 >= off0 + len(box0.cod):
            new_boxes = [box1, box0]
            new_offsets = [off1 - len(box0.cod) + len(box0.dom), off0]
        else:
            raise InterchangerError(
                "boxes {} and {} share a wire".format(box0.name, box1.name))
        return Diagram(
            self.dom, self.cod,
            self.boxes[:i] + new_boxes + self.boxes[i + 2:],
            self.offsets[:i] + new_offsets + self.offsets[i + 2:])

    def _layer_key(self, i):
        box = self.boxes[i]
        return (self.offsets[i], box.name,
                box.dom.sort_key(), box.cod.sort_key())

    def _flat_key(self):
        return tuple(self._layer_key(i) for i in range(len(self.boxes)))

    def _adjacent_variants(self, i):
        """All legal interchanges of boxes i and i+1.

        Usually zero or one, but two when a state meets an effect at the
        same point: the state may pass on either side.
        """
        box0, box1 = self.boxes[i], self.boxes[i + 1]
        off0, off1 = self.offsets[i], self.offsets[i + 1]
        out = []
        if off1 + len(box1.dom) <= off0:
            out.append((box1, off1, box0, off0 + len(box1.cod) - len(box1.dom)))
        if off1 >= off0 + len(box0.cod):
            out.append((box1, off1 - len(box0.cod) + len(box0.dom), box0, off0))
        return [
            Diagram(self.dom, self.cod,
                    self.boxes[:i] + [b1, b0] + self.boxes[i + 2:],
                    self.offsets[:i] + [o1, o0] + self.offsets[i + 2:])
            for b1, o1, b0, o0 in out]

    def normal_form(self, cap=50000):
        """The least interchanger-equivalent encoding under the layer key.

        The interchanger equivalence class is enumerated by breadth-first
        search and its lexicographically least element under the flat
        (offset, name, dom, cod) layer key is returned, so boxes migrate to
        their minimal sequential position with ties resolved leftmost and
        disconnected pieces end up ordered by (offset, name) of their first
        boxes, fixing a canonical order where the quotient alone does not.

        Classes larger than ``cap`` fall back to a greedy fixpoint of O(n^3)
        bubbling sweeps. Equivalent diagrams share one class, hence one code
        path, so equal inputs normalize equally either way; only minimality
        of the chosen representative is approximate beyond the cap.
        """
        seen = {self._state_key(): self}
        frontier = [self]
        exceeded = False
        while frontier and not exceeded:
            nxt = []
            for diagram in frontier:
                for i in range(len(diagram.boxes) - 1):
                    for variant in diagram._adjacent_variants(i):
                        key = variant._state_key()
                        if key not in seen:
                            seen[key] = variant
                            nxt.append(variant)
                if len(seen) > cap:
                    exceeded = True
                    break
            frontier = nxt
        if not exceeded:
            return min(seen.values(), key=Diagram._flat_key)
        diagram = self
        while True:
            swept = diagram._normalize(0)
            if swept._flat_key() >= diagram._flat_key():
                return diagram
            diagram = swept

    def _state_key(self):
        return (tuple(self.boxes), tuple(self.offsets))

    def _normalize(self, start):
        diagram = self
        for k in range(start, len(diagram.boxes)):
            candidates = []
            for j in range(k, len(diagram.boxes)):
                trial = diagram
                for p in range(j, k, -1):
                    try:
                        trial = trial.interchange(p, p - 1)
                    except InterchangerError:
                        trial = None
                        break
                if trial is not None:
                    candidates.append(trial)
            best = min(c._layer_key(k) for c in candidates)
            winners = [c for c in candidates if c._layer_key(k) == best]
            if len(winners) > 1:
                return min((w._normalize(k + 1) for w in winners),
                           key=Diagram._flat_key)
            diagram = winners[0]
        return diagram

    def dagger_free_equal(self, other):
        return nf_equal(self, other)


class Box(Diagram):
    """A generator box, itself a one-layer diagram."""

    def __init__(self, name, dom, cod):
        self.name = str(name)
        self.dom, self.cod = dom, cod
        Diagram.__init__(self, dom, cod, [self], [0])

    def __eq__(self, other):
        if isinstance(other, Box):
            return type(self) is type(other) and \
                (self.name, self.dom, self.cod) == (other.name, other.dom, other.cod)
        if isinstance(other, Diagram):
            return other.boxes == [self] and other.offsets == [0] \
                and (self.dom, self.cod) == (other.dom, other.cod)
        return False

    def __hash__(self):
        return hash((type(self).__name__, self.name, self.dom, self.cod))

    def __repr__(self):
        return "Box({!r}, {!r}, {!r})".format(self.name, self.dom, self.cod)

    def __str__(self):
        return self.name


def Id(ty):
    """Identity diagram on a type (or on a bare object)."""
    if not isinstance(ty, Ty):
        ty = Ty(ty)
    return Diagram.id(ty)


def nf_equal(d1, d2):
    """Monoidal equality: structural equality of normal forms."""
    return d1.normal_form() == d2.normal_form()


class Functor:
    """A monoidal functor defined on generators.

    ``ob`` maps objects to target types (dict or callable); ``ar`` maps
    boxes to target morphisms. Application replays the scan, whiskering the
    image of each box by identities, so both compositions are preserved by
    construction. ``cod`` is the pair (type class, morphism class) of the
    target; morphism classes must provide ``id``, ``then``/``>>`` and
    ``tensor``/``@``.
    """

    def __init__(self, ob, ar, cod=None):
        self.ob, self.ar = ob, ar
        self.cod_ty, self.cod_ar = cod if cod is not None else (Ty, Diagram)

    def map_ob(self, ob):
        if callable(self.ob) and not isinstance(self.ob, dict):
            return self.ob(ob)
        try:
            return self.ob[ob]
        except KeyError:
            raise MissingMapping("no image for object {}".format(ob))

    def map_box(self, box):
        if callable(self.ar) and not isinstance(self.ar, dict):
            return self.ar(box)
        try:
            return self.ar[box]
        except KeyError:
            raise MissingMapping("no image for box {}".format(box.name))

    def __call__(self, other):
        if isinstance(other, Ty):
            result = self.cod_ty()
            for ob in other:
                result = result @ self.map_ob(ob)
            return result
        if isinstance(other, Box):
            return self.map_box(other)
        if isinstance(other, Diagram):
            result = self.cod_ar.id(self(other.dom))
            for layer in other.layers():
                result = result >> (
                    self.cod_ar.id(self(layer.left))
                    @ self(layer.box)
                    @ self.cod_ar.id(self(layer.right)))
            return result
        raise TypeError("cannot apply functor to {!r}".format(other))


def tree_to_diagram(tree, contravariant=False, ty_factory=Ty, box_factory=Box):
    """Turn an operad tree into a diagram.

    Covariant: a node ``x -> [y1..yk]`` becomes a box ``x -> y1 @ .. @ yk``
    placed above the tensored branch images. Contravariant: the box is
    flipped to ``y1 @ .. @ yk -> x`` and placed below them, so leaves become
    states.
    """
    from . import operad

    def ob(colour):
        return ty_factory(colour.name)

    def ty_of(colours):
        result = ty_factory()
        for colour in colours:
            result = result @ ob(colour)
        return result

    def node_box(node):
        if contravariant:
            return box_factory(node.name, ty_of(node.cod), ob(node.dom))
        return box_factory(node.name, ob(node.dom), ty_of(node.cod))

    def go(t):
        if isinstance(t, operad.Id):
            return Diagram.id(ob(t.dom))
        if isinstance(t, operad.Node):
            return node_box(t)
        branches = [go(branch) for branch in t.branches]
        tensored = branches[0]
        for branch in branches[1:]:
            tensored = tensored @ branch
        if contravariant:
            return tensored >> node_box(t.root)
        return node_box(t.root) >> tensored

    return go(tree)
