"""Exception types shared across the package."""


class ContractError(ValueError):
    """An argument violates an operation's stated precondition."""


class DimensionMismatchError(ContractError):
    """Vector or field dimensions do not conform to the space/grid."""


class CapabilityError(ContractError):
    """The space lacks a capability required by the operation."""


class OrderContinuityError(CapabilityError):
    """Lattice differentiation requested in a space whose norm is not
    order continuous (sup-norm spaces); this is exactly how the
    positive-part counterexample manifests at the API level."""


class GridError(ContractError):
    """Grid is too coarse or otherwise unusable for the requested stencil."""


class ConfigError(ValueError):
    """Suite configuration file is malformed."""
