"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments lie outside the region where the requested quantity exists."""


class PoleError(DomainError):
    """Argument sits on a pole (e.g. the gamma function at a non-positive integer)."""


class NonConvergenceError(ArithmeticError):
    """A series or quadrature exhausted its budget before meeting tolerance.

    Most routines report this through ``Estimate.converged`` instead of raising;
    :meth:`Estimate.require` turns the flag into this exception.
    """
