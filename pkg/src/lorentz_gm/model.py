"""Shared value types: finite complex sequences, piecewise-constant functions on (0, inf),
angular sectors, and (p, q) norm parameters.

Conventions used across the whole package:

* sequences are indexed 1..N with an implicit zero tail;
* every interval is left-open/right-closed, so a step function holds value v_j on
  (x_{j-1}, x_j] with x_0 = 0 and is zero on (x_M, inf);
* an infinite p or q is the float ``math.inf``, never a stand-in value.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

__all__ = [
    "ComplexSeq",
    "TwoSidedSeq",
    "StepFunction",
    "PowerHead",
    "HeadedStepFunction",
    "Sector",
    "PQ",
    "VerificationReport",
    "MissingHeadError",
    "NotGMError",
    "RepresentationError",
    "sector_contains",
    "sequence_to_step",
    "weight_pq",
    "load_sequence",
    "load_function",
    "dump_sequence",
    "dump_function",
    "write_reports_csv",
]


class MissingHeadError(ValueError):
    """A computation needs f > 0 near the origin but the function has no power head."""


class NotGMError(ValueError):
    """An operation requires a finite general-monotonicity constant and got infinity."""


class RepresentationError(ValueError):
    """The requested result is not representable in the closed function classes."""


def _check_finite_complex(z: complex, what: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{what} must be finite, got {z!r}")


@dataclass(frozen=True)
class ComplexSeq:
    """Finite-support complex sequence a_1..a_N; entries beyond N are zero.

    ``seq[n]`` is 1-based and returns 0j for any n > N, which lets callers write
    window sums without guarding the tail.
    """

    values: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        vals = tuple(complex(v) for v in self.values)
        for v in vals:
            _check_finite_complex(v, "sequence entry")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> complex:
        if n < 1:
            raise IndexError("sequence indices start at 1")
        if n > len(self.values):
            return 0j
        return self.values[n - 1]

    def moduli(self) -> tuple[float, ...]:
        return tuple(abs(v) for v in self.values)

    def scale(self, factor: complex) -> "ComplexSeq":
        return ComplexSeq(tuple(factor * v for v in self.values))


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant complex function: value v_j on (x_{j-1}, x_j], zero past x_M.

    The empty partition is the zero function.
    """

    breakpoints: tuple[float, ...] = ()
    values: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        bps = tuple(float(x) for x in self.breakpoints)
        vals = tuple(complex(v) for v in self.values)
        if len(bps) != len(vals):
            raise ValueError("breakpoints and values must have equal length")
        prev = 0.0
        for x in bps:
            if not math.isfinite(x) or x <= prev:
                raise ValueError("breakpoints must be finite, positive, strictly increasing")
            prev = x
        for v in vals:
            _check_finite_complex(v, "step value")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    def eval(self, x: float) -> complex:
        """f(x) under the left-open/right-closed convention; 0 beyond the support."""
        if x <= 0:
            raise ValueError("step functions live on (0, inf)")
        lo = 0.0
        for xj, vj in zip(self.breakpoints, self.values):
            if lo < x <= xj:
                return vj
            lo = xj
        return 0j

    def pieces(self) -> tuple[tuple[float, float, complex], ...]:
        """The partition as (lo, hi, value) triples, lo exclusive / hi inclusive."""
        out = []
        lo = 0.0
        for xj, vj in zip(self.breakpoints, self.values):
            out.append((lo, xj, vj))
            lo = xj
        return tuple(out)

    @property
    def support_end(self) -> float:
        return self.breakpoints[-1] if self.breakpoints else 0.0


@dataclass(frozen=True)
class PowerHead:
    """Power-law head c * x**gamma used on the first interval (0, x1]."""

    c: float
    gamma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError("head coefficient must be finite and > 0")
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise ValueError("head exponent must be finite and > 0")

    def eval(self, x: float) -> float:
        return self.c * x**self.gamma


@dataclass(frozen=True)
class HeadedStepFunction:
    """Step function optionally led by a power head on (0, x1].

    With a head present, ``values`` holds the step values on (x1, x2], ..,
    (x_{M-1}, x_M] only — one entry fewer than ``breakpoints``.  Without a head
    the layout is exactly that of :class:`StepFunction`.
    """

    breakpoints: tuple[float, ...] = ()
    values: tuple[complex, ...] = ()
    head: PowerHead | None = None

    def __post_init__(self) -> None:
        bps = tuple(float(x) for x in self.breakpoints)
        vals = tuple(complex(v) for v in self.values)
        prev = 0.0
        for x in bps:
            if not math.isfinite(x) or x <= prev:
                raise ValueError("breakpoints must be finite, positive, strictly increasing")
            prev = x
        for v in vals:
            _check_finite_complex(v, "step value")
        expected = len(bps) - 1 if self.head is not None else len(bps)
        if self.head is not None and not bps:
            raise ValueError("a head needs its right edge x1 among the breakpoints")
        if len(vals) != expected:
            raise ValueError(
                f"value count {len(vals)} does not match the partition (expected {expected})"
            )
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    def eval(self, x: float) -> complex:
        if x <= 0:
            raise ValueError("functions live on (0, inf)")
        if self.head is not None:
            if x <= self.breakpoints[0]:
                return complex(self.head.eval(x))
            lo = self.breakpoints[0]
            for xj, vj in zip(self.breakpoints[1:], self.values):
                if lo < x <= xj:
                    return vj
                lo = xj
            return 0j
        return StepFunction(self.breakpoints, self.values).eval(x)

    def step_pieces(self) -> tuple[tuple[float, float, complex], ...]:
        """The piecewise-constant part as (lo, hi, value) triples (head region excluded)."""
        out = []
        if self.head is not None:
            lo = self.breakpoints[0]
            for xj, vj in zip(self.breakpoints[1:], self.values):
                out.append((lo, xj, vj))
                lo = xj
        else:
            lo = 0.0
            for xj, vj in zip(self.breakpoints, self.values):
                out.append((lo, xj, vj))
                lo = xj
        return tuple(out)

    @property
    def support_end(self) -> float:
        return self.breakpoints[-1] if self.breakpoints else 0.0

    @classmethod
    def from_step(cls, f: StepFunction) -> "HeadedStepFunction":
        return cls(f.breakpoints, f.values, None)

    def plain(self) -> StepFunction:
        if self.head is not None:
            raise RepresentationError("function carries a power head")
        return StepFunction(self.breakpoints, self.values)


@dataclass(frozen=True)
class TwoSidedSeq:
    """Finite two-sided sequence c_{n_min}..c_{n_max}; zero outside the range."""

    values: tuple[complex, ...]
    n_min: int

    def __post_init__(self) -> None:
        vals = tuple(complex(v) for v in self.values)
        for v in vals:
            _check_finite_complex(v, "sequence entry")
        object.__setattr__(self, "values", vals)

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.values) - 1

    def __getitem__(self, n: int) -> complex:
        if self.n_min <= n <= self.n_max:
            return self.values[n - self.n_min]
        return 0j

    def indices(self) -> range:
        return range(self.n_min, self.n_max + 1)


@dataclass(frozen=True)
class Sector:
    """Closed angular sector of half-aperture phi around direction e^{i alpha}, plus 0.

    ``tol`` widens membership tests by a small angle so that sums of boundary
    values do not fall out of the cone through rounding.
    """

    alpha: float
    phi: float
    tol: float = 1e-12

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha < 2.0 * math.pi:
            raise ValueError("alpha must lie in [0, 2*pi)")
        if not 0.0 <= self.phi < math.pi / 2.0:
            raise ValueError("phi must lie in [0, pi/2)")
        if self.tol < 0.0:
            raise ValueError("tol must be nonnegative")


def sector_contains(z: complex, s: Sector) -> bool:
    """Membership in the sector: z = 0 or |arg(e^{-i alpha} z)| <= phi + tol."""
    if z == 0:
        return True
    return abs(cmath.phase(z * cmath.exp(-1j * s.alpha))) <= s.phi + s.tol


def sequence_to_step(a: ComplexSeq) -> StepFunction:
    """The unit-piece extension f(x) = a_ceil(x) on (0, N], zero beyond."""
    n = len(a)
    return StepFunction(tuple(float(k) for k in range(1, n + 1)), a.values)


@dataclass(frozen=True)
class PQ:
    """A (p, q) norm-parameter pair, p and q in (0, inf].

    The Lorentz-space definition restricts to 0 < p < inf with 0 < q <= inf, or
    p = q = inf; ``lorentz_admissible`` reports that.  Plain weighted norms are
    well defined for every pair, so construction does not enforce the restriction.
    """

    p: float
    q: float

    def __post_init__(self) -> None:
        for name, v in (("p", self.p), ("q", self.q)):
            if math.isnan(v) or v <= 0:
                raise ValueError(f"{name} must be positive (possibly inf)")

    @property
    def lorentz_admissible(self) -> bool:
        if math.isinf(self.p):
            return math.isinf(self.q)
        return True

    @property
    def exponent(self) -> float:
        """The weight exponent 1/p - 1/q, with 1/inf = 0."""
        inv_p = 0.0 if math.isinf(self.p) else 1.0 / self.p
        inv_q = 0.0 if math.isinf(self.q) else 1.0 / self.q
        return inv_p - inv_q

    def with_conjugate_p(self) -> "PQ":
        """(p', q) with 1/p + 1/p' = 1; requires 1 < p < inf."""
        if not 1.0 < self.p < math.inf:
            raise ValueError("conjugation needs 1 < p < inf")
        return PQ(self.p / (self.p - 1.0), self.q)


def weight_pq(pq: PQ, x: float) -> float:
    """w(p,q)(x) = x**(1/p - 1/q) for x > 0."""
    if x <= 0:
        raise ValueError("the weight is defined for x > 0")
    return x**pq.exponent


@dataclass(frozen=True)
class VerificationReport:
    """One verified inequality instance: lhs <= constant * rhs, ratio = lhs/rhs."""

    name: str
    lhs: float
    rhs: float
    constant: float
    ratio: float
    passed: bool

    CSV_HEADER = "name,lhs,rhs,constant,ratio,pass"

    def csv_row(self) -> str:
        return (
            f"{self.name},{self.lhs!r},{self.rhs!r},{self.constant!r},"
            f"{self.ratio!r},{str(self.passed).lower()}"
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "constant": self.constant,
            "ratio": self.ratio,
            "pass": self.passed,
        }


def make_report(name: str, lhs: float, rhs: float, constant: float, *, slack: float = 1e-9) -> VerificationReport:
    """Build a report for lhs <= constant*rhs, tolerating `slack` relative rounding."""
    bound = constant * rhs
    passed = lhs <= bound + slack * max(1.0, abs(bound))
    ratio = lhs / rhs if rhs > 0 else (0.0 if lhs == 0 else math.inf)
    return VerificationReport(name, lhs, rhs, constant, ratio, passed)


def write_reports_csv(reports, path) -> None:
    lines = [VerificationReport.CSV_HEADER]
    lines += [r.csv_row() for r in reports]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# JSON interchange.
#
# sequence        {"re": [...], "im": [...]}            (im optional)
# step function   {"breakpoints": [...], "re": [...], "im": [...]}
# headed function adds {"head": {"c": ..., "gamma": ...}}
# ---------------------------------------------------------------------------


def _combine(re_part, im_part) -> tuple[complex, ...]:
    if im_part is None:
        im_part = [0.0] * len(re_part)
    if len(re_part) != len(im_part):
        raise ValueError("re and im arrays differ in length")
    return tuple(complex(float(r), float(i)) for r, i in zip(re_part, im_part))


def _load_obj(source) -> dict:
    if isinstance(source, dict):
        return source
    with open(source, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    return obj


def load_sequence(source) -> ComplexSeq:
    obj = _load_obj(source)
    if "re" not in obj:
        raise ValueError('sequence JSON needs a "re" array')
    return ComplexSeq(_combine(obj["re"], obj.get("im")))


def load_function(source) -> HeadedStepFunction:
    obj = _load_obj(source)
    if "breakpoints" not in obj:
        raise ValueError('function JSON needs a "breakpoints" array')
    values = _combine(obj.get("re", []), obj.get("im"))
    head = None
    if obj.get("head") is not None:
        head = PowerHead(float(obj["head"]["c"]), float(obj["head"]["gamma"]))
    return HeadedStepFunction(tuple(float(x) for x in obj["breakpoints"]), values, head)


def dump_sequence(a: ComplexSeq) -> dict:
    return {"re": [v.real for v in a.values], "im": [v.imag for v in a.values]}


def dump_function(f: StepFunction | HeadedStepFunction) -> dict:
    obj = {
        "breakpoints": list(f.breakpoints),
        "re": [v.real for v in f.values],
        "im": [v.imag for v in f.values],
    }
    head = getattr(f, "head", None)
    if head is not None:
        obj["head"] = {"c": head.c, "gamma": head.gamma}
    return obj
