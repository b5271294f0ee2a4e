"""Seifert matrices of braid closures and the Alexander-Conway polynomial.

The Seifert surface used is always the Bennequin surface of the closure:
one disc per strand and one twisted band per letter.  The homology basis
has one loop for each pair of consecutive occurrences of a generator
index, running through the two bands and the disc segments between them.

Linking rules for basis loops (E[a][b] = lk(x_a, x_b+), with x+ the
push-off in the positive surface normal):

* a loop through bands of signs e1, e2 has self-linking -(e1+e2)/2;
* consecutive loops on the same index sharing a band of sign e get
  (E[a][b], E[b][a]) = ((e+1)/2, (e-1)/2) with a the earlier loop;
* loops on adjacent indices interact only when their letter-position
  spans interleave; the loop on the smaller index gets the entry,
  -1 when it starts first and +1 otherwise;
* all other pairs are unlinked.

The sign conventions here are tied to the crossing conventions in
`links` and are pinned by the cross-checks in the test suite (the
determinant and signature of every corpus link, and the |J(-1)| match).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    GaussianRational,
    LaurentPolynomial,
    SymmetricForm,
    bareiss_determinant_int,
    fraction_determinant,
)
from .links import BraidWord


class DisconnectedSurface(ValueError):
    """Some generator index is absent, so the Bennequin surface splits."""


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix over the Bennequin homology basis."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def transpose(self) -> "SeifertMatrix":
        n = self.size
        return SeifertMatrix(tuple(tuple(self.rows[j][i] for j in range(n))
                                   for i in range(n)))

    def symmetrized(self) -> SymmetricForm:
        n = self.size
        return SymmetricForm([[self.rows[i][j] + self.rows[j][i]
                               for j in range(n)] for i in range(n)])


def seifert_matrix(b: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the closure of `b` over the Bennequin basis.

    Requires every generator index 1..n-1 to occur in the word so that
    the surface is connected; stabilize the braid first otherwise.
    """
    n = b.strands
    present = {abs(g) for g in b.word}
    missing = set(range(1, n)) - present
    if missing:
        raise DisconnectedSurface(
            f"generator indices {sorted(missing)} absent; surface disconnected")

    # Loops: (column, start position, end position, sign1, sign2),
    # ordered by column then start.
    loops: list[tuple[int, int, int, int, int]] = []
    for col in sorted(present):
        positions = [i for i, g in enumerate(b.word) if abs(g) == col]
        for p1, p2 in zip(positions, positions[1:]):
            s1 = 1 if b.word[p1] > 0 else -1
            s2 = 1 if b.word[p2] > 0 else -1
            loops.append((col, p1, p2, s1, s2))

    size = len(loops)
    e = [[0] * size for _ in range(size)]
    for a, (col_a, p1, p2, s1, s2) in enumerate(loops):
        if (s1 + s2) % 2 != 0:
            raise AssertionError("letter signs must be +-1")
        e[a][a] = -(s1 + s2) // 2
        for bidx in range(a + 1, size):
            col_b, q1, q2, t1, t2 = loops[bidx]
            if col_b == col_a and q1 == p2:
                # Shared band of sign t1 (= the letter at position p2).
                e[a][bidx] = (t1 + 1) // 2
                e[bidx][a] = (t1 - 1) // 2
            elif col_b == col_a + 1:
                if p1 < q1 < p2 < q2:
                    e[a][bidx] = -1
                elif q1 < p1 < q2 < p2:
                    e[a][bidx] = 1
    return SeifertMatrix(tuple(tuple(row) for row in e))


def _interpolate_integer_polynomial(values: list[tuple[int, int]]) -> list[Fraction]:
    """Lagrange interpolation through (x, y) integer points; ascending coeffs."""
    coeffs = [Fraction(0)] * len(values)
    for i, (xi, yi) in enumerate(values):
        # Basis polynomial prod_{j!=i} (x - xj)/(xi - xj).
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(values):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k + 1] += c
                new[k] += -xj * c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


def alexander_conway(e: SeifertMatrix) -> tuple[LaurentPolynomial, bool]:
    """The Alexander-Conway polynomial det(q E - q^-1 E^T) in q (t = q^2).

    Returns (delta, normalized).  For knots the determinant of E - E^T
    is 1 and delta(1) = 1 holds; we still flip the global sign if a
    basis choice produced delta(1) = -1.  When delta(1) = 0 (links with
    positive nullity) no normalization is possible and the raw
    polynomial is returned with normalized=False.
    """
    size = e.size
    if size == 0:
        return LaurentPolynomial.constant(1), True
    # det(qE - q^-1 E^T) = q^-size * det(t E - E^T) with t = q^2.
    # D(t) = det(tE - E^T) is an integer polynomial of degree <= size;
    # recover it exactly by interpolation at integer points.
    et = e.transpose()
    samples = []
    for x in range(size + 1):
        rows = [[x * e.rows[i][j] - et.rows[i][j] for j in range(size)]
                for i in range(size)]
        samples.append((x, bareiss_determinant_int(rows)))
    coeffs = _interpolate_integer_polynomial(samples)
    q_coeffs: dict[int, GaussianRational] = {}
    for k, c in enumerate(coeffs):
        if c != 0:
            if c.denominator != 1:
                raise AssertionError("Alexander coefficients must be integers")
            q_coeffs[2 * k - size] = GaussianRational.of(c)
    delta = LaurentPolynomial(q_coeffs)
    at_one = sum(coeffs)
    if at_one == 0:
        return delta, False
    if at_one == -1:
        return -delta, True
    if at_one == 1:
        return delta, True
    raise AssertionError(f"delta(1) = {at_one}, expected 0 or +-1")


def delta_second_at_1(delta: LaurentPolynomial) -> Fraction:
    """Exact second derivative with respect to t at t = 1.

    `delta` is in q with t = q^2, so only even exponents may appear.
    """
    total = Fraction(0)
    for qexp, c in delta.coeffs.items():
        if qexp % 2 != 0:
            raise ValueError("polynomial has odd q-exponents; not a function of t")
        if not c.is_real():
            raise ValueError("polynomial has non-real coefficients")
        k = qexp // 2
        total += c.re * k * (k - 1)
    return total


def delta_t_integer_coeffs(delta: LaurentPolynomial) -> tuple[list[int], int]:
    """Rewrite delta(q) as an integer polynomial in t cleared of negatives.

    Returns (coeffs ascending in t, shift) where delta(t) = t^-shift *
    sum coeffs[k] t^k.
    """
    t_coeffs: dict[int, int] = {}
    for qexp, c in delta.coeffs.items():
        if qexp % 2 != 0:
            raise ValueError("polynomial has odd q-exponents; not a function of t")
        if not (c.is_real() and c.re.denominator == 1):
            raise ValueError("expected integer coefficients")
        t_coeffs[qexp // 2] = int(c.re)
    if not t_coeffs:
        return [0], 0
    lo, hi = min(t_coeffs), max(t_coeffs)
    shift = -lo if lo < 0 else 0
    coeffs = [t_coeffs.get(k - shift, 0) for k in range(hi + shift + 1)]
    return coeffs, shift
