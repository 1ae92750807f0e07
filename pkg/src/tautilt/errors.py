"""Exception types shared across the package."""


class TauTiltError(Exception):
    """Base class for all package errors."""


class NonAdmissibleRelation(TauTiltError, ValueError):
    pass


class PathExplosion(TauTiltError):
    pass


class InconsistentBound(UserWarning):
    """A relation involves a path at or above the nilpotency bound."""


class AlgebraMismatch(TauTiltError, ValueError):
    pass


class IdempotentSearchExhausted(TauTiltError):
    """No idempotent found although the endomorphism ring is not local."""


class NotRigid(TauTiltError):
    pass


class NotAlmostComplete(TauTiltError):
    pass


class ConeNotTwoTerm(TauTiltError):
    pass


class PoolExhausted(TauTiltError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class SwapCycle(TauTiltError):
    pass


class CapExceeded(TauTiltError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial
