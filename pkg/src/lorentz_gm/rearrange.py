"""Distribution functions and decreasing rearrangements.

The rearrangement of a step function is computed exactly: pieces are sorted by
modulus and their lengths accumulated with ``math.fsum``, so the distribution
function of the result matches the input's bitwise (both are correctly-rounded
sums of the same multiset of piece lengths).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import ComplexSeq, HeadedStepFunction, StepFunction

__all__ = [
    "DecreasingStep",
    "distribution",
    "rearrange_step",
    "rearrange_seq",
    "left_limit",
]


@dataclass(frozen=True)
class DecreasingStep:
    """Nonnegative, non-increasing step function — the carrier for f*.

    Same interval convention as :class:`StepFunction`; evaluation at x returns
    the value on (x_{j-1}, x_j], which at a breakpoint is the LEFT limit of the
    right-continuous rearrangement.  The two agree off breakpoints, so norms and
    distribution functions are unaffected.
    """

    breakpoints: tuple[float, ...] = ()
    values: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        bps = tuple(float(x) for x in self.breakpoints)
        vals = tuple(float(v) for v in self.values)
        if len(bps) != len(vals):
            raise ValueError("breakpoints and values must have equal length")
        prev = 0.0
        for x in bps:
            if not math.isfinite(x) or x <= prev:
                raise ValueError("breakpoints must be finite, positive, strictly increasing")
            prev = x
        last = math.inf
        for v in vals:
            if not math.isfinite(v) or v < 0 or v > last:
                raise ValueError("values must be nonnegative and non-increasing")
            last = v
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    def eval(self, x: float) -> float:
        if x <= 0:
            raise ValueError("defined on (0, inf)")
        lo = 0.0
        for xj, vj in zip(self.breakpoints, self.values):
            if lo < x <= xj:
                return vj
            lo = xj
        return 0.0

    def pieces(self) -> tuple[tuple[float, float, float], ...]:
        out = []
        lo = 0.0
        for xj, vj in zip(self.breakpoints, self.values):
            out.append((lo, xj, vj))
            lo = xj
        return tuple(out)

    @property
    def support_end(self) -> float:
        return self.breakpoints[-1] if self.breakpoints else 0.0

    def value_at_index(self, k: int) -> float:
        """Convenience for sequence-shaped rearrangements: value on piece k (1-based)."""
        if k < 1:
            raise IndexError("piece indices start at 1")
        if k > len(self.values):
            return 0.0
        return self.values[k - 1]


def distribution(f, alpha: float) -> float:
    """Measure (or count) of the level set {|f| > alpha}, alpha >= 0.

    Step functions use Lebesgue measure on (0, inf); sequences use counting
    measure on {1, 2, ...}.  The inequality is strict, so alpha equal to a value
    excludes that piece.
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if isinstance(f, ComplexSeq):
        return float(sum(1 for v in f.values if abs(v) > alpha))
    if isinstance(f, DecreasingStep):
        # Non-increasing: the level set is a prefix (0, x_j]; return the stored
        # breakpoint so equimeasurability with the source function is exact.
        out = 0.0
        for xj, vj in zip(f.breakpoints, f.values):
            if vj > alpha:
                out = xj
            else:
                break
        return out
    if isinstance(f, StepFunction):
        lengths = []
        lo = 0.0
        for xj, vj in zip(f.breakpoints, f.values):
            if abs(vj) > alpha:
                lengths.append(xj - lo)
            lo = xj
        return math.fsum(lengths)
    raise TypeError(f"unsupported operand {type(f).__name__}")


def rearrange_step(f: StepFunction | HeadedStepFunction) -> DecreasingStep:
    """Decreasing rearrangement of a step function, with equal-modulus pieces merged.

    Power-headed inputs are rejected: their rearrangement is not a step
    function."""
    if isinstance(f, HeadedStepFunction):
        f = f.plain()
    ranked = []
    lo = 0.0
    for xj, vj in zip(f.breakpoints, f.values):
        m = abs(vj)
        if m > 0.0:
            ranked.append((m, xj - lo))
        lo = xj
    ranked.sort(key=lambda pair: -pair[0])

    lengths = [ell for _, ell in ranked]
    breakpoints: list[float] = []
    values: list[float] = []
    for j, (m, _) in enumerate(ranked):
        if values and values[-1] == m:
            breakpoints[-1] = math.fsum(lengths[: j + 1])
        else:
            breakpoints.append(math.fsum(lengths[: j + 1]))
            values.append(m)
    return DecreasingStep(tuple(breakpoints), tuple(values))


def rearrange_seq(a: ComplexSeq) -> ComplexSeq:
    """Moduli sorted in decreasing order (a*_1 >= a*_2 >= ... >= a*_N)."""
    return ComplexSeq(tuple(sorted(a.moduli(), reverse=True)))


def left_limit(fstar: DecreasingStep, x: float) -> float:
    """lim_{y -> x-} f*(y); equals the stored piece value under our convention."""
    if x <= 0:
        raise ValueError("x must be positive")
    return fstar.eval(x)
