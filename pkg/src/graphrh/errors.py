"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphRHError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "error"


# -- graph structure -------------------------------------------------------


class DanglingEndpoint(GraphRHError):
    code = "dangling_endpoint"

    def __init__(self, edge: str, vertex: str):
        super().__init__(f"edge {edge!r} references undeclared vertex {vertex!r}")
        self.edge = edge
        self.vertex = vertex


class Disconnected(GraphRHError):
    code = "disconnected"

    def __init__(self, component_count: int):
        super().__init__(f"graph is disconnected ({component_count} components)")
        self.component_count = component_count


class UnknownVertex(GraphRHError):
    code = "unknown_vertex"

    def __init__(self, vertex: str):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class UnknownEdge(GraphRHError):
    code = "unknown_edge"

    def __init__(self, edge: str):
        super().__init__(f"unknown edge {edge!r}")
        self.edge = edge


class IdCollision(GraphRHError):
    code = "id_collision"


class EmptyGraph(GraphRHError):
    code = "empty_graph"


class LoopNotAllowed(GraphRHError):
    code = "loop_not_allowed"


class InvalidWeight(GraphRHError):
    code = "invalid_weight"


# -- metric graphs ---------------------------------------------------------


class InvalidLength(GraphRHError):
    code = "invalid_length"


class OutOfRange(GraphRHError):
    code = "out_of_range"


class IsCircle(GraphRHError):
    code = "is_circle"


class ZeroLengthNonLoop(GraphRHError):
    code = "zero_length_non_loop"

    def __init__(self, edge: str):
        super().__init__(f"edge {edge!r} has zero length but is not a loop")
        self.edge = edge


# -- morphisms -------------------------------------------------------------


class InvalidMorphism(GraphRHError):
    code = "invalid_morphism"


class NonIntegralSlope(InvalidMorphism):
    code = "non_integral_slope"


class IndexVerticalMismatch(InvalidMorphism):
    code = "index_vertical_mismatch"

    def __init__(self, edge: str):
        super().__init__(f"index of edge {edge!r} is zero exactly when the edge is not vertical")
        self.edge = edge


class NotHarmonic(GraphRHError):
    code = "not_harmonic"

    def __init__(self, message: str, vertex: str | None = None):
        super().__init__(message)
        self.vertex = vertex


class InconsistentDegree(GraphRHError):
    code = "inconsistent_degree"


class NotACutVertex(GraphRHError):
    code = "not_a_cut_vertex"


class TargetTooSmall(GraphRHError):
    code = "target_too_small"


# -- metrized complexes ----------------------------------------------------


class InvalidComplex(GraphRHError):
    code = "invalid_complex"


class MissingCanonicalRep(GraphRHError):
    code = "missing_canonical_rep"


class UndeclaredFiber(GraphRHError):
    code = "undeclared_fiber"

    def __init__(self, point: str, vertex: str | None = None):
        where = f" over vertex {vertex!r}" if vertex is not None else ""
        super().__init__(f"fiber of curve point {point!r}{where} is not fully declared")
        self.point = point
        self.vertex = vertex


class UnsupportedPoint(GraphRHError):
    code = "unsupported_point"


# -- theorems / generators -------------------------------------------------


class UnknownTarget(GraphRHError):
    code = "unknown_target"


class UnknownCategory(GraphRHError):
    code = "unknown_category"


class BudgetExceeded(GraphRHError):
    code = "budget_exceeded"


# -- interchange format ----------------------------------------------------


class DocumentSyntaxError(GraphRHError):
    """Text is not well-formed; ``line`` and ``column`` are 1-based."""

    code = "syntax_error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SchemaError(GraphRHError):
    """Document shape is wrong at ``path`` (dotted keys from the root)."""

    code = "schema_error"

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class InvariantError(GraphRHError):
    """Document is well-shaped but describes an invalid object.

    ``cause_code`` is the code of the underlying domain error.
    """

    code = "invariant_error"

    def __init__(self, path: str, cause: GraphRHError):
        super().__init__(f"{path}: {cause}")
        self.path = path
        self.cause_code = cause.code
