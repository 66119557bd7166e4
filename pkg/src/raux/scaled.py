"""Complex values stored as (log-magnitude, phase).

The saddle prefactors behave like exp(pi*t/2) and the census box reaches
|R(s)| ~ exp(1570), far outside binary64 range.  Anything that can leave
the representable range is therefore carried as the pair

    log_mod = ln|w|          (-inf encodes an exact zero)
    phase   = arg w in (-pi, pi]

and products/quotients combine additively.  Addition factors out the
larger magnitude so only bounded ratios are ever exponentiated.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# exp() overflows binary64 just above this
_MAX_EXP = 709.0


def wrap_phase(x: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    r = math.remainder(x, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


@dataclass(frozen=True)
class ScaledComplex:
    log_mod: float
    phase: float

    # -- construction -------------------------------------------------

    @staticmethod
    def zero() -> "ScaledComplex":
        return ScaledComplex(float("-inf"), 0.0)

    @staticmethod
    def one() -> "ScaledComplex":
        return ScaledComplex(0.0, 0.0)

    @staticmethod
    def from_complex(w: complex) -> "ScaledComplex":
        w = complex(w)
        if w == 0:
            return ScaledComplex.zero()
        return ScaledComplex(math.log(abs(w)), cmath.phase(w))

    @staticmethod
    def from_log(w: complex) -> "ScaledComplex":
        """exp(w) as a scaled value; w may have huge real part."""
        w = complex(w)
        return ScaledComplex(w.real, wrap_phase(w.imag))

    @staticmethod
    def from_polar(log_mod: float, phase: float) -> "ScaledComplex":
        if math.isinf(log_mod) and log_mod < 0:
            return ScaledComplex.zero()
        return ScaledComplex(log_mod, wrap_phase(phase))

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return math.isinf(self.log_mod) and self.log_mod < 0

    def to_complex(self) -> complex:
        """Back to an ordinary complex; raises if the magnitude overflows."""
        if self.is_zero:
            return 0j
        if self.log_mod > _MAX_EXP:
            raise OverflowError(
                f"scaled value exp({self.log_mod:.6g}) exceeds binary64 range"
            )
        return cmath.rect(math.exp(self.log_mod), self.phase)

    def abs(self) -> float:
        if self.is_zero:
            return 0.0
        if self.log_mod > _MAX_EXP:
            return math.inf
        return math.exp(self.log_mod)

    # -- arithmetic ----------------------------------------------------

    def mul(self, other: "ScaledComplex") -> "ScaledComplex":
        if self.is_zero or other.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex(
            self.log_mod + other.log_mod, wrap_phase(self.phase + other.phase)
        )

    def div(self, other: "ScaledComplex") -> "ScaledComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by scaled zero")
        if self.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex(
            self.log_mod - other.log_mod, wrap_phase(self.phase - other.phase)
        )

    def mul_complex(self, w: complex) -> "ScaledComplex":
        return self.mul(ScaledComplex.from_complex(w))

    def neg(self) -> "ScaledComplex":
        if self.is_zero:
            return self
        return ScaledComplex(self.log_mod, wrap_phase(self.phase + math.pi))

    def conj(self) -> "ScaledComplex":
        if self.is_zero:
            return self
        return ScaledComplex(self.log_mod, wrap_phase(-self.phase))

    def add(self, other: "ScaledComplex") -> "ScaledComplex":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        big, small = (self, other) if self.log_mod >= other.log_mod else (other, self)
        # |ratio| <= 1 so this never overflows
        ratio = cmath.rect(math.exp(small.log_mod - big.log_mod), small.phase)
        w = cmath.rect(1.0, big.phase) + ratio
        if w == 0:
            return ScaledComplex.zero()
        return ScaledComplex(big.log_mod + math.log(abs(w)), cmath.phase(w))

    def sub(self, other: "ScaledComplex") -> "ScaledComplex":
        return self.add(other.neg())

    # -- comparisons against ordinary magnitudes ------------------------

    def ratio_to(self, other: "ScaledComplex") -> complex:
        """self/other as an ordinary complex (must be representable)."""
        return self.div(other).to_complex()

    def log_abs_ratio(self, other: "ScaledComplex") -> float:
        return self.log_mod - other.log_mod

    def rel_diff(self, other: "ScaledComplex") -> float:
        """|self - other| / max(|self|, |other|); 0 if both zero."""
        if self.is_zero and other.is_zero:
            return 0.0
        if self.is_zero or other.is_zero:
            return 1.0
        d = self.sub(other)
        if d.is_zero:
            return 0.0
        return math.exp(d.log_mod - max(self.log_mod, other.log_mod))
