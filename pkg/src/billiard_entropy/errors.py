"""Exception types shared across the package."""


class BilliardError(Exception):
    """Base class for all package-specific errors."""


class DomainError(BilliardError, ValueError):
    """An argument violates a documented precondition."""


class TangentialCollision(BilliardError):
    """A ray met a boundary curve at an angle below the tangency tolerance."""


class CornerHit(BilliardError):
    """A collision landed within tolerance of an arc endpoint."""


class NoCollision(BilliardError):
    """A ray escaped the four tracked boundary arcs."""


class NoMarker(BilliardError):
    """The normal argument of an arc never reaches the requested angle."""


class BlockTooLong(BilliardError):
    """An orbit has more consecutive wall collisions than the alphabet allows."""


class UntrackedCollision(BilliardError):
    """An orbit collision lies outside the four tracked arcs."""


class TargetUnreachable(BilliardError):
    """A requested level difference exceeds the reach of the trajectory bundle."""


class BisectionStall(BilliardError):
    """A bracketing search shrank below tolerance without isolating its target."""


class NoConvergence(BilliardError):
    """An iterative solver hit its iteration cap without converging."""


class ShapeUnsupported(BilliardError):
    """A shape-specific refinement was requested for an unsupported shape."""
