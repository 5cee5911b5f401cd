"""Exception types shared across the package."""


class SCConeError(Exception):
    """Base class for all package errors."""


class ParseError(SCConeError):
    def __init__(self, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column}: {reason}")


class RelatorNotReduced(SCConeError):
    pass


class RelatorNotCyclicallyReduced(RelatorNotReduced):
    pass


class UnusedGenerator(SCConeError):
    pass


class EmptyWord(SCConeError):
    pass


class InvalidSpec(SCConeError):
    pass


class UnknownFormat(SCConeError):
    pass


class DisconnectedGraph(SCConeError):
    pass


class ParameterTooSmall(SCConeError):
    pass


class NotEnoughWords(SCConeError):
    pass


class ResourceBudgetExceeded(SCConeError):
    pass


class BudgetExceeded(SCConeError):
    pass


class OutOfCertifiedRegion(SCConeError):
    pass


class SpecNotNested(SCConeError):
    pass


class OverlappingIndexSets(SCConeError):
    pass


class SmallCancellationRequired(SCConeError):
    pass


class EngineCapExceeded(SCConeError):
    pass
