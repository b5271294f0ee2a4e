"""Exact arithmetic substrate: Gaussian rationals, Laurent polynomials,
symmetric rational forms, congruence reduction, and integer resultants.

Everything here is exact.  Rationals are `fractions.Fraction`, complex
values live in Q(i), and polynomial coefficients are Gaussian rationals.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class ZeroAtNegativeExponent(ZeroDivisionError):
    """Evaluation at 0 requested for a Laurent polynomial with negative powers."""


class ZeroPolynomial(ValueError):
    """Resultant of the zero polynomial is undefined."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i), with i^2 = -1."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re=0, im=0) -> "GaussianRational":
        return GaussianRational(_frac(re), _frac(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "GaussianRational":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return (GR_ONE / self) ** (-k)
        out, base = GR_ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*i)"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(_frac(x), Fraction(0))
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


GR_ZERO = GaussianRational(Fraction(0), Fraction(0))
GR_ONE = GaussianRational(Fraction(1), Fraction(0))
GR_I = GaussianRational(Fraction(0), Fraction(1))


def i_power(k: int) -> GaussianRational:
    """i**k for any integer k (negative allowed)."""
    return (GR_ONE, GR_I, -GR_ONE, -GR_I)[k % 4]


class LaurentPolynomial:
    """A one-variable Laurent polynomial with GaussianRational coefficients.

    Immutable by convention: the coefficient map is normalized (no zero
    coefficients) at construction and never mutated afterwards.  The
    variable name is documentation only and does not affect arithmetic.
    """

    __slots__ = ("coeffs", "variable")

    def __init__(self, coeffs: Mapping[int, GaussianRational] | None = None,
                 variable: str = "q"):
        clean: dict[int, GaussianRational] = {}
        if coeffs:
            for k, c in coeffs.items():
                c = _coerce(c)
                if not c.is_zero():
                    clean[int(k)] = c
        self.coeffs = clean
        self.variable = variable

    @staticmethod
    def constant(c, variable: str = "q") -> "LaurentPolynomial":
        return LaurentPolynomial({0: _coerce(c)}, variable)

    @staticmethod
    def monomial(k: int, c=1, variable: str = "q") -> "LaurentPolynomial":
        return LaurentPolynomial({k: _coerce(c)}, variable)

    @staticmethod
    def from_int_coeffs(coeffs: Mapping[int, int], variable: str = "q") -> "LaurentPolynomial":
        return LaurentPolynomial({k: GaussianRational.of(c) for k, c in coeffs.items()},
                                 variable)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, GR_ZERO) + c
        return LaurentPolynomial(out, self.variable)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({k: -c for k, c in self.coeffs.items()}, self.variable)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction, GaussianRational)):
            c0 = _coerce(other)
            return LaurentPolynomial({k: c * c0 for k, c in self.coeffs.items()},
                                     self.variable)
        out: dict[int, GaussianRational] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                prod = c1 * c2
                if k in out:
                    out[k] = out[k] + prod
                else:
                    out[k] = prod
        return LaurentPolynomial(out, self.variable)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by variable**k."""
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()}, self.variable)

    def substitute_inverse(self) -> "LaurentPolynomial":
        """P(x) -> P(1/x)."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()}, self.variable)

    def derivative(self) -> "LaurentPolynomial":
        """Formal derivative with respect to the variable."""
        return LaurentPolynomial({e - 1: c * e for e, c in self.coeffs.items() if e != 0},
                                 self.variable)

    def min_exponent(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exponent(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def coefficient(self, k: int) -> GaussianRational:
        return self.coeffs.get(k, GR_ZERO)

    def __call__(self, x0: GaussianRational) -> GaussianRational:
        return laurent_eval(self, x0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                parts.append(f"{c!r}")
            elif k == 1:
                parts.append(f"{c!r}*{self.variable}")
            else:
                parts.append(f"{c!r}*{self.variable}^{k}")
        return " + ".join(parts)


def laurent_eval(p: LaurentPolynomial, x0) -> GaussianRational:
    """Exact evaluation of p at x0 in Q(i).

    Raises ZeroAtNegativeExponent if x0 = 0 while p has negative powers.
    """
    x0 = _coerce(x0)
    if x0.is_zero() and p.min_exponent() < 0:
        raise ZeroAtNegativeExponent("evaluation at 0 with negative exponents present")
    total = GR_ZERO
    for k, c in p.coeffs.items():
        total = total + c * x0 ** k
    return total


def t_derivative_at_minus1(p: LaurentPolynomial) -> GaussianRational:
    """d/dt of p at t = -1, for p written in q with t = q**2.

    By the chain rule d/dt = (d/dq) / (2q); the value is taken at q = i,
    the chosen square root of -1.
    """
    dp = p.derivative()
    q0 = GR_I
    return laurent_eval(dp, q0) / (GaussianRational.of(2) * q0)


# ---------------------------------------------------------------------------
# Integer polynomials: resultants.


def _strip_int_poly(p: Sequence[int]) -> list[int]:
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def resultant(p: Sequence[int], q: Sequence[int]) -> int:
    """Resultant of two integer polynomials given by coefficient lists.

    Coefficient lists are ascending: p[k] is the coefficient of t**k.
    Computed exactly as the determinant of the Sylvester matrix by
    fraction-free (Bareiss) elimination.
    """
    p = _strip_int_poly(p)
    q = _strip_int_poly(q)
    if not p or not q:
        raise ZeroPolynomial("resultant requires nonzero polynomials")
    m, n = len(p) - 1, len(q) - 1
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows: list[list[int]] = []
    pr = list(reversed(p))
    qr = list(reversed(q))
    for i in range(n):
        rows.append([0] * i + pr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qr + [0] * (size - n - 1 - i))
    return bareiss_determinant_int(rows)


def bareiss_determinant_int(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss algorithm)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Symmetric rational forms and congruence reduction.


class SymmetricForm:
    """A symmetric matrix over Q, stored as a tuple of tuples of Fractions."""

    __slots__ = ("entries", "dimension")

    def __init__(self, entries: Iterable[Iterable] ):
        rows = [tuple(_frac(x) for x in row) for row in entries]
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")
        self.entries = tuple(rows)
        self.dimension = n

    @staticmethod
    def zero(n: int) -> "SymmetricForm":
        return SymmetricForm([[0] * n for _ in range(n)])

    @staticmethod
    def diagonal(values: Sequence) -> "SymmetricForm":
        n = len(values)
        return SymmetricForm([[values[i] if i == j else 0 for j in range(n)]
                              for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def determinant(self) -> Fraction:
        """Exact determinant; the 0x0 determinant is 1."""
        return fraction_determinant([list(r) for r in self.entries])

    def congruent_by(self, p: Sequence[Sequence]) -> "SymmetricForm":
        """Return P S P^T for a square matrix P (rows of ints/Fractions)."""
        n = self.dimension
        p = [[_frac(x) for x in row] for row in p]
        ps = [[sum((p[i][k] * self.entries[k][j] for k in range(n)), Fraction(0))
               for j in range(n)] for i in range(n)]
        out = [[sum((ps[i][k] * p[j][k] for k in range(n)), Fraction(0))
                for j in range(n)] for i in range(n)]
        return SymmetricForm(out)

    def __repr__(self) -> str:
        return "SymmetricForm(%s)" % [ [str(x) for x in row] for row in self.entries ]


def fraction_determinant(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant over Q by fraction Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in rows]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                factor = a[i][k] * inv
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return det


def congruence_diagonalize(s: SymmetricForm, order: str = "first"):
    """Diagonalize a symmetric form by a rational congruence.

    Returns (pivots, transform) with transform * S * transform^T equal to
    the diagonal matrix of pivots (zeros included).  When every remaining
    diagonal entry vanishes but some off-diagonal entry (i, j) does not,
    row j is first added to row i (and symmetrically for columns), which
    produces the nonzero diagonal entry 2*S[i][j].

    order selects the pivot strategy: "first" takes the first usable row,
    "max" the remaining diagonal entry of largest absolute value.  The
    pivot signs (and hence signature, nullity, and sign) are independent
    of the strategy.
    """
    if order not in ("first", "max"):
        raise ValueError("order must be 'first' or 'max'")
    n = s.dimension
    a = [list(row) for row in s.entries]
    # transform accumulates the row operations applied to S.
    t = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots: list[Fraction] = []
    pivot_rows: list[int] = []
    active = list(range(n))

    def add_row(dst: int, src: int, factor: Fraction) -> None:
        for j in range(n):
            a[dst][j] += factor * a[src][j]
        for j in range(n):
            a[j][dst] += factor * a[j][src]
        for j in range(n):
            t[dst][j] += factor * t[src][j]

    while active:
        candidates = [r for r in active if a[r][r] != 0]
        if candidates:
            if order == "first":
                pivot = candidates[0]
            else:
                pivot = max(candidates, key=lambda r: abs(a[r][r]))
        else:
            pair = next(((i, j) for i in active for j in active
                         if i != j and a[i][j] != 0), None)
            if pair is None:
                for r in active:
                    pivots.append(Fraction(0))
                    pivot_rows.append(r)
                break
            add_row(pair[0], pair[1], Fraction(1))
            pivot = pair[0]
        d = a[pivot][pivot]
        for r in active:
            if r != pivot and a[r][pivot] != 0:
                add_row(r, pivot, -a[r][pivot] / d)
        pivots.append(d)
        pivot_rows.append(pivot)
        active.remove(pivot)

    # Order the transform rows to match the pivot list.
    return pivots, [t[r] for r in pivot_rows]
