"""Errors raised by the library. Every error derives from :class:`HochschildError`."""


class HochschildError(Exception):
    pass


class DivisionByZero(HochschildError, ZeroDivisionError):
    pass


class NoSuchRoot(HochschildError):
    pass


class ZeroElement(HochschildError, ValueError):
    pass


class BadParameter(HochschildError, ValueError):
    pass


class BadCharacteristic(BadParameter):
    pass


class DimensionMismatch(HochschildError, ValueError):
    pass


class NotAComplex(HochschildError):
    pass


class BudgetExceeded(HochschildError):

    def __init__(self, what: str, requested: int, limit: int):
        super().__init__("%s needs %d entries, limit is %d" % (what, requested, limit))
        self.what = what
        self.requested = requested
        self.limit = limit


class InvalidTable(HochschildError):
    pass


class NotAHomomorphism(HochschildError):
    pass


class CharacteristicDividesGroupOrder(HochschildError):
    pass


class AlgebraMismatch(HochschildError):
    pass


class NotACocycle(HochschildError):
    pass


class ActionNotChainMap(HochschildError):
    pass


class G1NotCentral(HochschildError):
    pass


class NotPrimitiveRoot(HochschildError):
    pass


class ChainMapCheckFailed(HochschildError):
    pass


class DegreeOutOfRange(HochschildError):
    pass


class PresentationMismatch(HochschildError):
    pass


class IsoCheckFailed(HochschildError):
    pass


class ParseError(HochschildError):
    pass


class ValidationError(HochschildError, ValueError):

    def __init__(self, field: str, message: str):
        super().__init__("%s: %s" % (field, message))
        self.field = field
        self.message = message


class OracleStopped(BudgetExceeded):
    """A budget-bound route that stopped before the wanted degree."""

    def __init__(self, what: str, computed: int, wanted: int):
        HochschildError.__init__(self, "%s stopped at degree %d of %d" % (what, computed, wanted))
        self.what = what
        self.requested = wanted
        self.limit = computed


class RouteMismatch(HochschildError):
    pass
