"""Exception types shared across the package.

Each error carries a short machine-readable ``code`` used by the CLI to
select exit codes and by tests to match error categories.
"""


class MaxmodError(Exception):
    code = "Error"


class PolyParseError(MaxmodError):
    code = "ParseError"

    def __init__(self, token: str, position: int, reason: str = ""):
        self.token = token
        self.position = position
        msg = f"cannot parse coefficient {token!r} at position {position}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class ZeroPolynomialError(MaxmodError):
    code = "ZeroPolynomial"


class MonomialAllPlaneError(MaxmodError):
    """The maximum modulus set of c*z^n is the whole plane; nothing to do."""

    code = "MonomialAllPlane"


class NotCubicFamilyError(MaxmodError):
    code = "NotCubicFamily"


class TruncatedSeriesError(MaxmodError):
    """Operation needs a genuine polynomial, not a truncated series."""

    code = "TruncatedSeries"


class RefinementFailureError(MaxmodError):
    code = "RefinementFailure"

    def __init__(self, r: float, theta_seed: float):
        self.r = r
        self.theta_seed = theta_seed
        super().__init__(f"maximizer refinement failed at r={r!r}, seed theta={theta_seed!r}")


class CurveBirthDeathError(MaxmodError):
    code = "CurveBirthDeath"

    def __init__(self, kind: str, r: float, curve_id: int):
        self.kind = kind
        self.r = r
        self.curve_id = curve_id
        super().__init__(f"curve {curve_id} {kind} mid-schedule at r={r!r}")


class FloorViolationError(MaxmodError):
    code = "FloorViolation"

    def __init__(self, r_min: float, required: float):
        self.r_min = r_min
        self.required = required
        super().__init__(
            f"r_min={r_min!r} is below the numerical floor; "
            f"minimum admissible r_min is {required!r}"
        )
