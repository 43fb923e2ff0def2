"""Exception types shared across the package."""


class BischedError(Exception):
    """Base class for all errors raised by this library."""


class InvalidParams(BischedError):
    """A generator or operation was called with unusable parameters."""


class SelfLoop(BischedError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdge(BischedError):
    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"duplicate edge {self.edge}")


class NotBipartite(BischedError):
    """Raised with an odd cycle as witness."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"odd cycle of length {len(self.cycle)}: {self.cycle}")


class GraphSyntaxError(BischedError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ScheduleSyntaxError(BischedError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class NotIndependent(BischedError):
    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"set contains adjacent pair {self.edge}")


class NotMaximum(BischedError):
    """A matching or independent set is smaller than the optimum."""


class DegreeTooHigh(BischedError):
    def __init__(self, vertex: int, degree: int, limit: int):
        self.vertex = vertex
        self.degree = degree
        self.limit = limit
        super().__init__(f"vertex {vertex} has degree {degree} > {limit}")


class K33Component(BischedError):
    """A complete balanced bipartite component blocks the requested
    balanced coloring (side size == class count, odd)."""

    def __init__(self, vertices, side: int):
        self.vertices = tuple(sorted(vertices))
        self.side = side
        super().__init__(
            f"component {self.vertices} is K_{{{side},{side}}}, "
            f"not equitably {side}-colorable"
        )


class ClassCountMismatch(BischedError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} classes, got {got}")


class InternalExhaustion(BischedError):
    """The constructive coloring gave up and the component is too large
    for the exact fallback.  Indicates a defect on valid inputs."""


class PreconditionSpeed(BischedError):
    """The machine configuration violates the algorithm's speed regime."""


class EquitableInfeasible(BischedError):
    """An exceptional component could not be repaired by a swap."""


class BudgetExceeded(BischedError):
    """The exact solver hit its vertex or node budget.  A reported
    condition, never a wrong answer."""
