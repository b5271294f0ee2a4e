"""Signature, nullity, and sign of symmetric forms; bordered triples.

The sign of a symmetric matrix is the sign of the determinant of its
nonsingular part after congruence reduction, with the empty product
equal to +1.  Signature, nullity and sign are congruence invariants,
and for bordered triples (A+, A-, A0) they satisfy rigid relations that
`verify_bordered_lemma` checks exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    GaussianRational,
    SymmetricForm,
    congruence_diagonalize,
    i_power,
)


@dataclass(frozen=True)
class Inertia:
    signature: int
    nullity: int
    sign: int  # sgn' in {+1, -1}

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")


def inertia(s: SymmetricForm, order: str = "first") -> Inertia:
    """Signature, nullity and sign from one congruence reduction."""
    pivots, _ = congruence_diagonalize(s, order=order)
    pos = sum(1 for p in pivots if p > 0)
    neg = sum(1 for p in pivots if p < 0)
    zero = sum(1 for p in pivots if p == 0)
    sign = -1 if neg % 2 else 1
    assert abs(pos - neg) + zero <= s.dimension
    return Inertia(signature=pos - neg, nullity=zero, sign=sign)


@dataclass(frozen=True)
class EpsilonUnit:
    """A fourth root of unity sgn'(A) * i^(sigma(A) + nu(A))."""

    value: GaussianRational

    def __post_init__(self):
        if self.value not in (i_power(0), i_power(1), i_power(2), i_power(3)):
            raise ValueError("epsilon must be a fourth root of unity")


def epsilon(s: SymmetricForm) -> EpsilonUnit:
    inr = inertia(s)
    return EpsilonUnit(inr.sign * i_power(inr.signature + inr.nullity))


def epsilon_of_inertia(inr: Inertia) -> GaussianRational:
    return (inr.sign * i_power(inr.signature + inr.nullity))


@dataclass(frozen=True)
class BorderedTriple:
    """Data (a, rho, A0) defining A+ = [[a, rho], [rho^T, A0]] and A-
    with corner entry a + 2."""

    a: Fraction
    rho: tuple[Fraction, ...]
    a0: SymmetricForm

    def __post_init__(self):
        if len(self.rho) != self.a0.dimension:
            raise ValueError("rho length must match A0 dimension")

    @staticmethod
    def of(a, rho: Sequence, a0: SymmetricForm) -> "BorderedTriple":
        return BorderedTriple(Fraction(a), tuple(Fraction(r) for r in rho), a0)

    def plus(self) -> SymmetricForm:
        return self._bordered(self.a)

    def minus(self) -> SymmetricForm:
        return self._bordered(self.a + 2)

    def _bordered(self, corner: Fraction) -> SymmetricForm:
        d = self.a0.dimension
        rows = [[corner] + list(self.rho)]
        for i in range(d):
            rows.append([self.rho[i]] + list(self.a0.entries[i]))
        return SymmetricForm(rows)


@dataclass
class RelationReport:
    """Outcome of exact relation checks, with witnesses on failure."""

    passed: bool
    failures: list[str]

    def __bool__(self):
        return self.passed


def verify_bordered_lemma(t: BorderedTriple) -> RelationReport:
    """Check the signature/nullity/sign relations of a bordered triple.

    For each of A+ and A-, exactly verified against A0:
      * |nu - nu0| + |sigma - sigma0| = 1;
      * sigma - sigma0 = 0 when |nu - nu0| = 1, else sgn'*sgn'0;
      * nu - nu0 = 0 when |sigma - sigma0| = 1, else sgn'*sgn'0;
      * eps(A+) = eps(A-) = i * eps(A0).
    """
    failures: list[str] = []
    i0 = inertia(t.a0)
    eps0 = epsilon_of_inertia(i0)
    eps_sides = []
    for name, side in (("A+", t.plus()), ("A-", t.minus())):
        ix = inertia(side)
        dn = ix.nullity - i0.nullity
        ds = ix.signature - i0.signature
        if abs(dn) + abs(ds) != 1:
            failures.append(
                f"{name}: |dnu| + |dsigma| = {abs(dn) + abs(ds)} != 1 "
                f"(triple {t})")
        expected_ds = 0 if abs(dn) == 1 else ix.sign * i0.sign
        if ds != expected_ds:
            failures.append(f"{name}: sigma diff {ds} != {expected_ds} (triple {t})")
        expected_dn = 0 if abs(ds) == 1 else ix.sign * i0.sign
        if dn != expected_dn:
            failures.append(f"{name}: nu diff {dn} != {expected_dn} (triple {t})")
        eps_sides.append(epsilon_of_inertia(ix))
    i_eps0 = i_power(1) * eps0
    if not (eps_sides[0] == eps_sides[1] == i_eps0):
        failures.append(
            f"epsilon relation failed: {eps_sides[0]!r}, {eps_sides[1]!r} "
            f"vs i*eps0 = {i_eps0!r} (triple {t})")
    return RelationReport(passed=not failures, failures=failures)


def det_relation(t: BorderedTriple) -> RelationReport:
    """Check det(A+) - det(A-) + 2 det(A0) = 0 exactly."""
    lhs = t.plus().determinant() - t.minus().determinant() \
        + 2 * t.a0.determinant()
    if lhs != 0:
        return RelationReport(False, [f"det relation residue {lhs} (triple {t})"])
    return RelationReport(True, [])
