class OhlError(Exception):
    pass

class ParseError(OhlError, ValueError):
    pass

class UnknownStructure(OhlError, LookupError):
    pass

class DomainMismatch(OhlError, ValueError):
    pass

class DuplicateEntry(OhlError, ValueError):
    pass

class OutOfRange(OhlError, ValueError):
    pass

class ArityMismatch(OhlError, ValueError):
    pass

class DegreeMismatch(OhlError, ValueError):
    pass

class NotDegreeZero(OhlError, ValueError):
    pass

class BadArity(OhlError, ValueError):
    pass

class BadSector(OhlError, ValueError):
    pass

class NotBinary(DomainMismatch):
    pass

class InhomogeneousInput(OhlError, ValueError):
    pass

class NegativeGenerator(OhlError, ArithmeticError):
    def __init__(self, degree: int, value: int) -> None:
        super().__init__(f"generator count in degree {degree} would be {value}, the algebra cannot be free")
        self.degree = degree
        self.value = value
