"""Exception types shared across the package.

The three intermediate bases map onto the CLI exit-code contract:
input problems exit 1, numerical failures exit 2, file or parse
problems exit 3.
"""


class GridHierError(Exception):
    """Base class for all package errors."""


class ParseError(GridHierError):
    """Scenario file is missing, unreadable, or malformed."""


class InputError(GridHierError):
    """Arguments or scenario contents violate a documented precondition."""


class NumericalError(GridHierError):
    """A numerical routine failed or a numeric check did not hold."""


class MissingSecondary(InputError):
    """Operation needs secondary-control parameters but the scenario has none."""


class Infeasible(InputError):
    """Dispatch demand lies outside [0, sum(capacity)]."""


class TooLarge(InputError):
    """Brute-force oracle asked for more agents than the grid search can enumerate."""


class InvalidCost(InputError):
    """Cost curvature a_n <= 0; the dispatch problem is no longer strictly convex."""


class InvalidRegulation(InputError):
    """Requested regulation level pi <= D would give non-negative droop gains."""


class ZeroDisturbance(InputError):
    """Supply-demand mismatch is zero, so sharing ratios are undefined."""


class DegenerateDamping(InputError):
    """D - sum(r) = 0; the primary-only equilibrium is undefined."""


class ParticipationNotNormalized(InputError):
    """Closed form requires participation factors summing to one."""


class SingularOperator(NumericalError):
    """1 + sum(nu) is numerically zero; no unique equilibrium exists."""


class EigenFailure(NumericalError):
    """Eigenvalue iteration did not converge."""


class Divergence(NumericalError):
    """State magnitude exceeded the divergence limit during integration."""


class SettleTimeout(NumericalError):
    """Equilibrium search did not reach the derivative tolerance in max_steps."""
