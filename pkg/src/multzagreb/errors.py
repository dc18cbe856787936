"""Exception hierarchy shared by every module in the package."""


class ZagrebError(Exception):
    """Base class for all errors raised by multzagreb."""


class InvalidEdge(ZagrebError, ValueError):
    pass


class InvalidVertex(ZagrebError, ValueError):
    pass


class Disconnected(ZagrebError, ValueError):
    pass


class TooSmall(ZagrebError, ValueError):
    pass


class TooLarge(ZagrebError, ValueError):
    pass


class Malformed(ZagrebError, ValueError):
    """A graph6 record could not be decoded."""


class InvalidClass(ZagrebError, ValueError):
    """An (n, k) pair outside 4 <= n and 1 <= k <= n - 3."""


class EmptyClass(ZagrebError, ValueError):
    pass


class PatternMismatch(ZagrebError, ValueError):
    """A transform was applied to a graph that does not fit its pattern."""
