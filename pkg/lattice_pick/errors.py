class LatticePickError(Exception):
    """Base class for every error raised by lattice_pick.

    `exit_code` is what the command line returns when the error escapes a command.
    """
    exit_code = 1


class InvalidInput(LatticePickError):
    exit_code = 1


class DomainDegenerate(LatticePickError):
    """The input is well formed but the requested construction does not apply to it."""
    exit_code = 2


class InternalInconsistency(LatticePickError):
    exit_code = 3


class ZeroVector(InvalidInput):
    pass


class InvalidNormal(InvalidInput):
    pass


class NotInPlane(InvalidInput):
    pass


class NotInLattice(InvalidInput):
    pass


class DegenerateSegment(InvalidInput):
    pass


class DegeneratePickValue(InvalidInput):
    pass


class InvalidR(InvalidInput):
    pass


class PolygonFileError(InvalidInput):
    pass


class ConfigError(InvalidInput):
    pass


class InvalidPolygon(InvalidInput):
    pass


class TooFewVertices(InvalidPolygon):
    pass


class NotCoplanar(InvalidPolygon):
    pass


class DegenerateArea(InvalidPolygon):
    pass


class SelfIntersecting(InvalidPolygon):
    pass


class NormalMismatch(InvalidPolygon):
    pass


class DuplicateVertex(InvalidPolygon):
    pass


class DegenerateBasis(DomainDegenerate):
    pass


class GenerationFailed(DomainDegenerate):
    pass


class ZeroConstant(UserWarning):
    """Emitted when the constant k is evaluated for a normal with a = 0 (k = 0)."""
