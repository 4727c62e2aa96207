"""Exception hierarchy shared by every layer of the package."""


class HorochowError(Exception):
    pass


# symfunc
class NotSymmetric(HorochowError):
    pass


class TooManyParts(HorochowError):
    pass


# schubert
class ContextMismatch(HorochowError):
    pass


class DegreeMismatch(HorochowError):
    pass


class Inhomogeneous(HorochowError):
    pass


# ringkit
class InhomogeneousRelation(HorochowError):
    pass


class HilbertMismatch(HorochowError):
    def __init__(self, degree, expected, found):
        super().__init__(
            f"Hilbert function mismatch in degree {degree}: expected {expected}, found {found}"
        )
        self.degree = degree
        self.expected = expected
        self.found = found


class DegreeOutOfRange(HorochowError):
    pass


class RingMismatch(HorochowError):
    pass


class NotABasis(HorochowError):
    pass


class DegeneratePairing(HorochowError):
    pass


class NoQuantumParameter(HorochowError):
    pass


# hasse
class MixedDegrees(HorochowError):
    pass


class Inconsistent(HorochowError):
    pass


class Underdetermined(HorochowError):
    def __init__(self, degree, msg=None):
        super().__init__(msg or f"Giambelli system underdetermined in degree {degree}")
        self.degree = degree


class UnknownSymbol(HorochowError):
    pass


# catalog
class PolySyntaxError(HorochowError):
    def __init__(self, msg, position):
        super().__init__(f"{msg} at offset {position}")
        self.position = position


class UnknownIdentifier(HorochowError):
    pass


class SchemaError(HorochowError):
    pass


class InvariantViolation(HorochowError):
    def __init__(self, invariant, msg=""):
        super().__init__(f"invariant '{invariant}' violated" + (f": {msg}" if msg else ""))
        self.invariant = invariant


class UnknownVariety(HorochowError):
    pass
