class InputError(ValueError):
    """Invalid graph, spec, edge or collection supplied by the caller."""


class Unsupported(InputError):
    """A closed-form predictor has no formula for the requested family."""


class NotReconstructible(RuntimeError):
    """The full da-edeck does not determine the graph."""


class Inconclusive(RuntimeError):
    """The wall-clock budget ran out before an exhaustive search finished."""
