"""Error hierarchy shared by every frobfix module.

Checks that *evaluate* a property never raise for a failing property; they
return findings instead. The errors below signal inputs a computation cannot
proceed with.
"""


class FrobfixError(ValueError):
    pass


class DimensionMismatch(FrobfixError):
    pass


class NoSolution(FrobfixError):
    pass


class InvalidAlgebra(FrobfixError):
    pass


class NotSemisimple(FrobfixError):
    pass


class NotFrobenius(FrobfixError):
    pass


class NotSplit(FrobfixError):
    pass


class DegenerateSample(FrobfixError):
    pass


class NotAGroup(FrobfixError):
    pass


class BlockCountMismatch(FrobfixError):
    pass


class SourceTargetMismatch(FrobfixError):
    pass


class InvalidContext(FrobfixError):
    pass


class MissingFrobeniusData(FrobfixError):
    pass


class PermMismatch(FrobfixError):
    pass


class ShapeMismatch(FrobfixError):
    pass


class SimpleCountMismatch(FrobfixError):
    pass


class SchemaError(FrobfixError):
    pass
