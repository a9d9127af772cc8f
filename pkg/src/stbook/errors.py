"""Exception hierarchy.

Three families map onto the CLI exit codes: :class:`InputError` (bad
graph, rotation or file contents, exit 3), :class:`CapabilityExceeded`
(width cap or oracle size guard, exit 2) and everything else, which is
either a violated precondition or an internal bug.
"""

from __future__ import annotations

__all__ = [
    "StBookError",
    "InputError",
    "CyclicGraph",
    "RotationMismatch",
    "NotPlanarEmbedding",
    "DuplicateEdge",
    "MultipleSources",
    "MultipleSinks",
    "FormatSyntaxError",
    "SemanticError",
    "ContainsEmbeddedN",
    "ContainsEmbeddedH",
    "NotHamiltonian",
    "CyclicCompletion",
    "InvalidInput",
    "InternalInvariantBroken",
    "NoHostFace",
    "CapabilityExceeded",
    "WidthCapExceeded",
    "TooLarge",
    "GenerationExhausted",
]


class StBookError(Exception):
    """Base class for every error raised by this package."""


class InputError(StBookError):
    pass


class CyclicGraph(InputError):
    pass


class RotationMismatch(InputError):
    pass


class NotPlanarEmbedding(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class MultipleSources(InputError):
    def __init__(self, vertices):
        super().__init__(f"more than one source: {list(vertices)}")
        self.vertices = list(vertices)


class MultipleSinks(InputError):
    def __init__(self, vertices):
        super().__init__(f"more than one sink: {list(vertices)}")
        self.vertices = list(vertices)


class FormatSyntaxError(InputError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SemanticError(InputError):
    pass


class ContainsEmbeddedN(StBookError):
    def __init__(self, occurrence):
        super().__init__(f"graph contains an embedded N: {occurrence}")
        self.occurrence = occurrence


class ContainsEmbeddedH(StBookError):
    def __init__(self, occurrence):
        super().__init__(f"graph contains an embedded H: {occurrence}")
        self.occurrence = occurrence


class NotHamiltonian(StBookError):
    pass


class CyclicCompletion(StBookError):
    pass


class InvalidInput(StBookError):
    pass


class InternalInvariantBroken(StBookError):
    pass


class NoHostFace(InternalInvariantBroken):
    pass


class CapabilityExceeded(StBookError):
    pass


class WidthCapExceeded(CapabilityExceeded):
    def __init__(self, width: int, cap: int):
        super().__init__(f"width {width} exceeds cap {cap}")
        self.width = width
        self.cap = cap


class TooLarge(CapabilityExceeded):
    pass


class GenerationExhausted(StBookError):
    pass
