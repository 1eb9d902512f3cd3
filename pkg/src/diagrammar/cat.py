"""Free categories on a directed-graph signature.

Objects and boxes generate arrows (paths); composition concatenates box
lists. A regular grammar is a signature with distinguished start/end
vertices whose edge names are the alphabet; parsing a word is a greedy
left-to-right arrow search.
"""

from .errors import CompositionMismatch, MissingMapping


class Ob:
    """A named object (vertex of the signature)."""

    def __init__(self, name):
        self.name = str(name)

    def __eq__(self, other):
        return isinstance(other, Ob) and self.name == other.name

    def __hash__(self):
        return hash((type(self).__name__, self.name))

    def __repr__(self):
        return "Ob({!r})".format(self.name)

    def __str__(self):
        return self.name


class Arrow:
    """A path in the free category: a typed, composable list of boxes."""

    def __init__(self, dom, cod, boxes):
        if not isinstance(dom, Ob) or not isinstance(cod, Ob):
            raise TypeError("dom and cod must be objects")
        boxes = list(boxes)
        scan = dom
        for box in boxes:
            if box.dom != scan:
                raise CompositionMismatch(
                    "box {} expects dom {}, got {}".format(box.name, box.dom, scan))
            scan = box.cod
        if scan != cod:
            raise CompositionMismatch(
                "arrow declared cod {}, boxes end at {}".format(cod, scan))
        self.dom, self.cod, self.boxes = dom, cod, boxes

    @classmethod
    def id(cls, ob):
        return cls(ob, ob, [])

    def then(self, other):
        if not isinstance(other, Arrow):
            raise TypeError("expected an Arrow")
        if self.cod != other.dom:
            raise CompositionMismatch(
                "cannot compose: cod {} != dom {}".format(self.cod, other.dom))
        return Arrow(self.dom, other.cod, self.boxes + other.boxes)

    __rshift__ = then

    def __lshift__(self, other):
        return other.then(self)

    def __eq__(self, other):
        if not isinstance(other, Arrow):
            return False
        return (self.dom, self.cod, self.boxes) == (other.dom, other.cod, other.boxes)

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(self.boxes)))

    def __len__(self):
        return len(self.boxes)

    def __repr__(self):
        if not self.boxes:
            return "Arrow.id({!r})".format(self.dom)
        return "Arrow({!r}, {!r}, {!r})".format(self.dom, self.cod, self.boxes)

    def __str__(self):
        if not self.boxes:
            return "Id({})".format(self.dom)
        return " >> ".join(box.name for box in self.boxes)


class Box(Arrow):
    """A generator arrow (edge of the signature)."""

    def __init__(self, name, dom, cod):
        self.name = str(name)
        self.dom, self.cod = dom, cod
        super().__init__(dom, cod, [self])

    def __eq__(self, other):
        if isinstance(other, Box):
            return (self.name, self.dom, self.cod) \
                == (other.name, other.dom, other.cod)
        if isinstance(other, Arrow):
            return other.boxes == [self] and (self.dom, self.cod) == (other.dom, other.cod)
        return False

    def __hash__(self):
        return hash((type(self).__name__, self.name, self.dom, self.cod))

    def __repr__(self):
        return "Box({!r}, {!r}, {!r})".format(self.name, self.dom, self.cod)


class Functor:
    """A functor out of a free category, defined on generators.

    ``ob`` maps objects to objects, ``ar`` maps boxes to arrows (a box image
    is accepted as well, since boxes are arrows). Application folds over the
    box list, so composition and identities are preserved by construction.
    """

    def __init__(self, ob, ar):
        self.ob, self.ar = dict(ob), dict(ar)

    def __call__(self, other):
        if isinstance(other, Ob):
            try:
                return self.ob[other]
            except KeyError:
                raise MissingMapping("no image for object {}".format(other))
        if isinstance(other, Box):
            try:
                image = self.ar[other]
            except KeyError:
                raise MissingMapping("no image for box {}".format(other.name))
            if (image.dom, image.cod) != (self(other.dom), self(other.cod)):
                raise CompositionMismatch(
                    "image of {} has boundary {} -> {}, expected {} -> {}".format(
                        other.name, image.dom, image.cod,
                        self(other.dom), self(other.cod)))
            return image
        if isinstance(other, Arrow):
            result = Arrow.id(self(other.dom))
            for box in other.boxes:
                result = result >> self(box)
            return result
        raise TypeError("cannot apply functor to {!r}".format(other))


class RegularGrammar:
    """Edges with labels plus start/end vertices; words are edge-label paths."""

    def __init__(self, edges, start, end):
        self.edges = list(edges)
        self.start, self.end = start, end

    def vertices(self):
        seen = {self.start, self.end}
        for edge in self.edges:
            seen.add(edge.dom)
            seen.add(edge.cod)
        return seen


def parse_regular(grammar, word):
    """Greedy scan: take the first label-matching, composable edge each step.

    Returns the arrow start -> end spelling ``word``, or None. The scan is
    deterministic and does not backtrack, so on grammars where several edges
    share a label out of the same vertex it can miss parses that a full
    search would find.
    """
    arrow = Arrow.id(grammar.start)
    for token in word:
        for edge in grammar.edges:
            if edge.name == token and edge.dom == arrow.cod:
                arrow = arrow >> edge
                break
        else:
            return None
    if arrow.cod != grammar.end:
        return None
    return arrow


def is_grammatical(grammar, word):
    return parse_regular(grammar, word) is not None
