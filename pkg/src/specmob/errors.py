"""Exception types shared across the package."""


class ScenarioError(Exception):
    """A scenario file or mapping is malformed or out of range.

    The message names the offending section/key so a config typo can be
    fixed without reading the loader source.
    """


class NonConvergenceError(Exception):
    """An iterative computation failed to reach its stopping rule."""


class UnsupportedDistributionError(Exception):
    """A service-time family other than the built-in one was requested."""
