"""String diagrams for formal grammars.

Grammars of several families (regular, context-free, categorial, pregroup,
dependency) parse sentences into arrows, trees and diagrams; functors send
those into semiring tensors or plain Python functions, so that parsing and
evaluation are the same operation read in two categories.

The layers build on each other: ``cat`` (free categories) and ``operad``
(trees) at the bottom, then ``monoidal`` diagrams, the ``biclosed`` and
``rigid`` refinements, ``hypergraph`` cospans, and the two evaluation
backends ``tensor``/``network`` and ``function``.
"""

from . import (biclosed, cat, cli, dot, function, hypergraph, monoidal,
               network, operad, readers, rigid, tensor)
from .cat import Arrow, Functor, Ob, RegularGrammar, is_grammatical, \
    parse_regular
from .errors import DiagrammarError
from .monoidal import Diagram
from .operad import Algebra, Cfg, Node, Tree, parse_cfg
from .rigid import DependencyGrammar, PregroupGrammar, parse_pregroup
from .tensor import Dim, Tensor

__version__ = "0.1.0"

__all__ = [
    "Algebra", "Arrow", "Cfg", "Diagram", "DiagrammarError",
    "DependencyGrammar", "Dim", "Functor", "Node", "Ob", "PregroupGrammar",
    "RegularGrammar", "Tensor", "Tree", "biclosed", "cat", "cli", "dot",
    "function", "hypergraph", "is_grammatical", "monoidal", "network",
    "operad", "parse_cfg", "parse_pregroup", "parse_regular", "readers",
    "rigid", "tensor",
]
