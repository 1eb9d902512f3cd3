"""Exception taxonomy shared by all modules.

Every error raised on bad user input derives from :class:`DiagrammarError`;
plain ``assert`` is reserved for internal invariants that indicate bugs.
"""


class DiagrammarError(Exception):
    """Base class for all library errors."""


class CompositionMismatch(DiagrammarError):
    """Codomain of the first arrow does not match domain of the second."""


class MissingMapping(DiagrammarError):
    """A functor was applied to an object or box it has no image for."""


class ArityMismatch(DiagrammarError):
    """Tree grafting received branches that do not match the node's signature."""


class NotCnf(DiagrammarError):
    """Grammar rule is neither binary over nonterminals nor a lexical leaf."""


class UnknownNode(DiagrammarError):
    """A tree-text name does not resolve to a node in the signature."""


class IllTyped(DiagrammarError):
    """A diagram scan failed: a box domain does not match the wires it sits on."""


class NegativeOffset(DiagrammarError):
    """A box offset is negative or exceeds the current layer width."""


class InterchangerError(DiagrammarError):
    """The two boxes share a wire, so they cannot be interchanged."""


class TooManyWires(DiagrammarError):
    """curry was asked for more wires than the diagram boundary provides."""


class BadRuleTypes(DiagrammarError):
    """Categorial rule constructor received types it is not defined for."""


class AdjointMismatch(DiagrammarError):
    """cups/caps require the second type to be the adjoint of the first."""


class InvalidRelation(DiagrammarError):
    """A dependency relation violates one of the well-formedness conditions."""


class RuleNotInGrammar(DiagrammarError):
    """A head's dependents do not instantiate any rule of the grammar."""


class TypeConflict(DiagrammarError):
    """Two ports wired to the same spider carry different types."""


class BadWireCount(DiagrammarError):
    """The wires list length does not match the number of ports."""


class BadPort(DiagrammarError):
    """A port index is out of range or not of the required kind."""


class ShapeMismatch(DiagrammarError):
    """A tensor's array shape does not match its declared dom/cod dims."""


class BackendUnsupported(DiagrammarError):
    """The requested semiring or evaluation backend does not exist."""


class NotClosed(DiagrammarError):
    """Tensor-network extraction requires unit (or unit-dimensional) boundaries."""


class BadOrder(DiagrammarError):
    """A contraction order is not a permutation of the network's vertices."""


class ArityError(DiagrammarError):
    """A function was applied to the wrong number of arguments."""


class NotClosedType(DiagrammarError):
    """Function uncurry requires a codomain that is an Over or Under type."""


class MalformedInput(DiagrammarError):
    """An input file fails to parse; carries the offending line and column."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            where = "line {}".format(line)
            if column is not None:
                where += ", column {}".format(column)
            message = "{}: {}".format(where, message)
        super().__init__(message)
        self.line, self.column = line, column
