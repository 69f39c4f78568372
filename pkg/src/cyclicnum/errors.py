"""Shared exception types."""


class CapacityError(Exception):
    """A configured size, order, or degree cap would be exceeded.

    Raised instead of attempting a computation that is out of the desk-scale
    range this library guarantees (group closure caps, witness degree caps,
    enumeration order caps).
    """
