"""Exception types shared across the library.

The CLI maps these onto exit codes: InputError -> 1, GuardExceeded -> 2,
VerificationFailure -> 3.
"""


class InputError(ValueError):
    """Malformed or inconsistent input: bad JSON, shape mismatch, bad partition."""


class GuardExceeded(RuntimeError):
    """A configurable size guard would be exceeded by this computation."""


class VerificationFailure(RuntimeError):
    """An exact identity that must hold failed to verify.

    Typical causes: a character partition that is not constant on block sums,
    or a MacWilliams transform producing a non-integer count.
    """
