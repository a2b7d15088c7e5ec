"""Exception types shared across the package.

Every exception message names the concrete condition that was violated so
that CLI error output is self-explanatory.
"""


class Rank3Error(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(Rank3Error):
    pass


class DegreeOutOfRange(Rank3Error):
    pass


class CapExceeded(Rank3Error):
    pass


class FieldMismatch(Rank3Error):
    pass


class LogOfZero(Rank3Error):
    pass


class EmptySet(Rank3Error):
    pass


class MalformedPartition(Rank3Error):
    pass


class OrderCondition(Rank3Error):
    """ord_ell(p) != ell - 1."""


class DegreeCondition(Rank3Error):
    """(ell - 1) does not divide r, or r has the wrong parity."""


class CharCondition(Rank3Error):
    """The characteristic p has the wrong residue mod 4."""


class NotSymmetric(Rank3Error):
    """Connection set is not closed under negation."""


class ContainsZero(Rank3Error):
    pass


class Directed(Rank3Error):
    pass


class TooLarge(Rank3Error):
    pass


class BadResidue(Rank3Error):
    pass


class QuarticUnavailable(Rank3Error):
    """q - 1 is not divisible by 4."""


class DegenerateModulus(Rank3Error):
    """q = 2 leaves nothing to act on: Z_1 has no two-orbit partitions."""
