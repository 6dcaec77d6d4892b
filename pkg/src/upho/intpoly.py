"""Exact integer polynomials and truncated integer power series.

Coefficients are plain Python ints (arbitrary precision), indexed by degree.
Polynomials strip trailing zero coefficients; a series of order N carries
exactly N+1 coefficients and arithmetic never silently truncates below the
requested order.  Truncation orders are always explicit arguments, never
ambient state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonUnitConstantTerm


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(int(c) for c in cs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def linear_product(roots) -> "IntPolynomial":
        """Product of (1 - a*x) over the given integer sequence."""
        p = IntPolynomial.one()
        for a in roots:
            p = p * IntPolynomial((1, -int(a)))
        return p

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.of(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def text(self) -> str:
        """Human-readable form, e.g. ``1 - 4*x + 6*x^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


@dataclass(frozen=True)
class IntPowerSeries:
    """Power series truncated at ``order``; always ``order + 1`` coefficients."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("series must carry exactly order+1 coefficients")

    @staticmethod
    def from_poly(p: IntPolynomial, order: int) -> "IntPowerSeries":
        return IntPowerSeries(tuple(p.coeff(k) for k in range(order + 1)), order)

    def coeff(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def mul_poly(self, p: IntPolynomial) -> "IntPowerSeries":
        out = [0] * (self.order + 1)
        for i, a in enumerate(p.coeffs):
            if a and i <= self.order:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * self.coeffs[j]
        return IntPowerSeries(tuple(out), self.order)

    def truncate(self, order: int) -> "IntPowerSeries":
        if order > self.order:
            raise IndexError("cannot extend a truncated series")
        return IntPowerSeries(self.coeffs[: order + 1], order)

    def text(self) -> str:
        return IntPolynomial(self.coeffs).text() + f" + O(x^{self.order + 1})"


def series_inverse(p: IntPolynomial, order: int) -> IntPowerSeries:
    """q with p*q = 1 (mod x^{order+1}); requires constant term 1 or -1."""
    c0 = p.coeff(0)
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not invertible over the integers")
    q = [0] * (order + 1)
    q[0] = c0
    deg = p.degree
    for n in range(1, order + 1):
        s = 0
        for k in range(1, min(n, deg) + 1):
            s += p.coeffs[k] * q[n - k]
        q[n] = -c0 * s
    return IntPowerSeries(tuple(q), order)


def series_div(num: IntPolynomial, den: IntPolynomial, order: int) -> IntPowerSeries:
    """num/den as a series to the given order; den needs unit constant term."""
    return series_inverse(den, order).mul_poly(num)


def substitute_power(p: IntPolynomial, m: int) -> IntPolynomial:
    """p(x^m) for m >= 1."""
    if m < 1:
        raise ValueError("exponent scale must be a positive integer")
    if p.is_zero():
        return p
    out = [0] * (m * p.degree + 1)
    for k, c in enumerate(p.coeffs):
        out[m * k] = c
    return IntPolynomial.of(out)


def first_negative_coefficient(s: IntPowerSeries) -> int | None:
    """Smallest index with a negative coefficient, or None if there is none."""
    for k, c in enumerate(s.coeffs):
        if c < 0:
            return k
    return None
