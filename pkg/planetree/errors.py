# Copyright Cade Stocker 2026

"""
Exception hierarchy for planetree.

Library code raises these and never exits; the command line maps each class to its exit code:
    ParseError          -> 1  (an input file could not be read)
    PreconditionError   -> 2  (input read fine but an algorithm's requirement does not hold)
    CapExceededError    -> 3  (the brute-force oracle was asked for more points than its cap)
"""


class PlaneTreeError(Exception):
    """Base class for every error planetree raises on purpose."""
    exit_code = 1


class ParseError(PlaneTreeError):
    """Malformed point, tree, flat-set or caterpillar file."""
    exit_code = 1

    def __init__(self, message, path=None, line_no=None):
        self.path = path
        self.line_no = line_no
        where = ''
        if path is not None:
            where = f"{path}:{line_no}: " if line_no is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class PreconditionError(PlaneTreeError):
    exit_code = 2


class GeneralPositionError(PreconditionError):
    """Duplicate points or a collinear triple."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class NotConvexError(PreconditionError):
    pass


class InvalidTreeError(PreconditionError):
    pass


class NotPlaneError(PreconditionError):
    pass


class NotCaterpillarError(PreconditionError):
    pass


class HullRootError(PreconditionError):
    """A tristar root is not a vertex of the convex hull."""
    pass


class CapExceededError(PlaneTreeError):
    exit_code = 3

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"oracle cap exceeded: {n} points, cap is {cap} (raise it with --cap)")
