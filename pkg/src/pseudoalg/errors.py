"""Exception hierarchy shared by every module of the package."""


class PseudoAlgError(Exception):
    """Base class; the CLI maps any subclass to a structured error message."""


class InputError(PseudoAlgError):
    """Malformed or inconsistent input data (CLI exit code 2)."""


class AntisymmetryViolation(InputError):
    def __init__(self, i, j, k):
        self.index = (i, j, k)
        super().__init__(f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")


class JacobiViolation(InputError):
    def __init__(self, i, j, l, k):
        self.index = (i, j, l, k)
        super().__init__(f"Jacobi identity fails for (i,j,l,k)=({i},{j},{l},{k})")


class DimensionMismatch(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class ArityMismatch(InputError):
    pass


class RankMismatch(InputError):
    pass


class ZeroElement(PseudoAlgError):
    pass


class DegreeOverflow(PseudoAlgError):
    """An intermediate result exceeded the configured degree guard."""


class StraighteningOverflow(PseudoAlgError):
    """The PBW rewriting loop exceeded its step budget (internal error)."""


class UnknownEntry(InputError):
    pass


class MissingParam(InputError):
    pass


class UnknownLabel(InputError):
    pass


class NotLinear(PseudoAlgError):
    pass


class EmptyBasisDomain(InputError):
    pass


class NotInvertible(InputError):
    pass


class NotPreLie(InputError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"left-symmetry of the associator fails at {triple}")
