"""
Bound Reports

Every checker evaluates both sides of one inequality on a concrete instance
and returns a BoundReport. Exact sides are int or Fraction; sides with
irrational exponents are floats and carry exact=False.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Union

logger = logging.getLogger(__name__)

Value = Union[int, Fraction, float]

# Relative guard band for float-valued right-hand sides
GUARD_BAND = 2.0 ** -30


class CounterexampleAlarm(RuntimeError):
    """Raised when a checked inequality fails; the theorems say this cannot happen."""
    pass


def to_json_value(x: Any) -> Any:
    """Exact numbers as decimal strings, floats as floats, containers recursively."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return x if math.isfinite(x) else str(x)
    if isinstance(x, dict):
        return {k: to_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json_value(v) for v in x]
    return x


@dataclass
class BoundReport:
    """Both sides of one inequality (or identity) on one instance."""
    label: str
    lhs: Value
    rhs: Value
    holds: bool
    slack: Value
    exact: bool = True
    relation: str = "<="
    details: Optional[Dict[str, Any]] = field(default=None)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "label": self.label,
            "lhs": to_json_value(self.lhs),
            "rhs": to_json_value(self.rhs),
            "holds": self.holds,
            "slack": to_json_value(self.slack),
        }
        if self.relation != "<=":
            result["relation"] = self.relation
        if not self.exact:
            result["exact"] = False
        if self.details:
            result["details"] = to_json_value(self.details)
        return result


def exact_report(label: str, lhs: Value, rhs: Value, details: Optional[Dict[str, Any]] = None) -> BoundReport:
    return BoundReport(label=label, lhs=lhs, rhs=rhs, holds=lhs <= rhs, slack=rhs - lhs, details=details)


def identity_report(label: str, lhs: Value, rhs: Value, details: Optional[Dict[str, Any]] = None) -> BoundReport:
    return BoundReport(
        label=label, lhs=lhs, rhs=rhs, holds=lhs == rhs, slack=rhs - lhs,
        relation="==", details=details,
    )


def exact_log(x: Value) -> float:
    """Natural log of a nonnegative int, Fraction or float without a float conversion of x."""
    if x == 0:
        return float("-inf")
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def float_report(
    label: str,
    lhs: Value,
    rhs: float,
    certified: Optional[bool] = None,
    details: Optional[Dict[str, Any]] = None,
    log_rhs: Optional[float] = None,
) -> BoundReport:
    """
    Report against a float right-hand side.

    Args:
        certified: Result of an exact comparison made by the caller, if one was
            possible. Used when lhs and rhs fall inside the guard band.
        log_rhs: log(rhs), used when a side lies outside float range

    When a side overflows float the slack is reported as log(rhs) - log(lhs).
    """
    details = dict(details or {})
    try:
        lhs_f = float(lhs)
    except OverflowError:
        lhs_f = float("inf")

    if not (math.isfinite(lhs_f) and math.isfinite(rhs)):
        if log_rhs is None:
            log_rhs = exact_log(rhs)
        log_slack = log_rhs - exact_log(lhs)
        details["out_of_float_range"] = True
        details["slack_scale"] = "log"
        if certified is not None:
            holds = certified
            details["certified_exact"] = True
        else:
            holds = log_slack >= -GUARD_BAND
        return BoundReport(
            label=label, lhs=lhs, rhs=rhs, holds=holds, slack=log_slack,
            exact=False, details=details,
        )

    near = abs(lhs_f - rhs) <= GUARD_BAND * max(abs(lhs_f), abs(rhs))
    if near and certified is not None:
        holds = certified
    else:
        holds = lhs_f <= rhs * (1 + GUARD_BAND)
    if near:
        details["within_guard_band"] = True
        if certified is not None:
            details["certified_exact"] = True
    return BoundReport(
        label=label, lhs=lhs, rhs=rhs, holds=holds, slack=rhs - lhs_f,
        exact=False, details=details or None,
    )


def weighted_log(terms) -> float:
    """log of prod base^weight over (base, weight) pairs; -inf if a base with positive weight is 0."""
    total = 0.0
    for base, weight in terms:
        if weight == 0:
            continue
        if base == 0:
            return float("-inf")
        total += float(weight) * math.log(base)
    return total


def from_log(value: float) -> float:
    if value == float("-inf"):
        return 0.0
    try:
        return math.exp(value)
    except OverflowError:
        return float("inf")


def alarm(report: BoundReport) -> BoundReport:
    """Log and raise when a report fails."""
    if not report.holds:
        logger.error(f"Inequality {report.label} violated: lhs={report.lhs} rhs={report.rhs}")
        raise CounterexampleAlarm(f"{report.label} violated: lhs={report.lhs} > rhs={report.rhs}")
    return report
