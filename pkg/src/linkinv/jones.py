"""Kauffman bracket and the Jones polynomial in the J normalization.

Conventions, all pinned by the test suite:

* Bracket variable A, <unknot> = 1, loop factor delta = -A^2 - A^(-2).
  A positive braid letter resolves as A * (identity smoothing)
  + A^(-1) * (cup-cap smoothing); negative letters swap A and A^(-1).
* V is the writhe-normalized bracket, V(unknot) = 1, written in
  q = t^(1/2): a normalized bracket monomial A^a contributes at q^(-a/2).
* J(t) = (-1)^(|L| - 1) V(t^(-1)), so J(1) = 2^(|L| - 1); J lives in q
  with t = q^2 and is evaluated at t = -1 through q = i.

Two evaluators are provided: a state-sum over all smoothings of a
diagram (exponential, capped at 18 crossings) and the planar-matching
sweep along a braid word, which carries a vector indexed by crossingless
matchings of the closure's boundary points and handles the doubled
braids downstream code produces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    GR_I,
    GaussianRational,
    LaurentPolynomial,
    laurent_eval,
    t_derivative_at_minus1,
)
from .links import BraidWord, Crossing, LinkDiagram, SkeinTriple, braid_closure

NAIVE_LIMIT = 18


class TooLarge(ValueError):
    """Diagram too big for the exponential state-sum evaluator."""


# Bracket polynomials are kept as {exponent: int} dicts internally.


def _poly_mul_delta(p: dict[int, int], power: int) -> dict[int, int]:
    """Multiply an integer A-polynomial by delta^power, delta = -A^2 - A^-2."""
    for _ in range(power):
        out: dict[int, int] = {}
        for k, c in p.items():
            out[k + 2] = out.get(k + 2, 0) - c
            out[k - 2] = out.get(k - 2, 0) - c
        p = out
    return p


def _poly_add_into(dst: dict[int, int], src: dict[int, int], shift: int = 0,
                   scale: int = 1) -> None:
    for k, c in src.items():
        kk = k + shift
        dst[kk] = dst.get(kk, 0) + scale * c
        if dst[kk] == 0:
            del dst[kk]


def kauffman_bracket(d: LinkDiagram) -> LaurentPolynomial:
    """Bracket polynomial of a diagram by the full smoothing state sum.

    Exponential in the crossing number; raises TooLarge above 18.
    """
    n = d.crossing_count
    if n > NAIVE_LIMIT:
        raise TooLarge(f"{n} crossings exceeds the {NAIVE_LIMIT}-crossing state sum")
    arcs = d.arcs
    index = {a: i for i, a in enumerate(arcs)}
    total: dict[int, int] = {}
    for state in range(1 << n):
        parent = list(range(len(arcs)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        exponent = 0
        for i, c in enumerate(d.crossings):
            a_smoothing = (state >> i) & 1 == 0
            if a_smoothing:
                exponent += c.sign
                # Parallel smoothing: each in-slot continues down its side.
                union(index[c.over_in], index[c.under_out])
                union(index[c.under_in], index[c.over_out])
            else:
                exponent -= c.sign
                # Cup-cap: the two in-slots join, the two out-slots join.
                union(index[c.over_in], index[c.under_in])
                union(index[c.over_out], index[c.under_out])
        loops = len({find(i) for i in range(len(arcs))}) + d.free_loops
        _poly_add_into(total, _poly_mul_delta({exponent: 1}, loops - 1))
    return LaurentPolynomial.from_int_coeffs(total, variable="A")


# ---------------------------------------------------------------------------
# Planar-matching sweep.


def _initial_matching(strands: int) -> tuple[int, ...]:
    """Nested matching pairing point k with 2s-1-k (closure bend)."""
    size = 2 * strands
    partner = [0] * size
    for k in range(strands):
        partner[k] = size - 1 - k
        partner[size - 1 - k] = k
    return tuple(partner)


def _apply_cupcap(matching: tuple[int, ...], i: int) -> tuple[tuple[int, ...], bool]:
    """Apply the cup-cap generator at points (i, i+1).

    Returns the new matching and whether a closed loop split off.
    """
    a, b = i, i + 1
    pa, pb = matching[a], matching[b]
    m = list(matching)
    if pa == b:
        # a and b were partners: a loop closes, matching unchanged.
        return matching, True
    m[a], m[b] = b, a
    m[pa], m[pb] = pb, pa
    return tuple(m), False


def bracket_sweep(b: BraidWord) -> LaurentPolynomial:
    """Bracket of the braid closure by the planar-matching transfer sweep.

    The closure is bent open: 2n boundary points start in the nested
    matching, braid letters act on points 0..n-1, and the final state is
    capped with the same nested pairing.  States are sparse; coefficients
    are integer A-polynomials.
    """
    s = b.strands
    states: dict[tuple[int, ...], dict[int, int]] = {_initial_matching(s): {0: 1}}
    for g in b.word:
        i = abs(g) - 1
        sign = 1 if g > 0 else -1
        new_states: dict[tuple[int, ...], dict[int, int]] = {}
        for matching, coeff in states.items():
            # Identity smoothing: multiply by A^sign.
            dst = new_states.setdefault(matching, {})
            _poly_add_into(dst, coeff, shift=sign)
            # Cup-cap smoothing: multiply by A^-sign, possibly by delta.
            moved, loop = _apply_cupcap(matching, i)
            piece = dict(coeff)
            if loop:
                piece = _poly_mul_delta(piece, 1)
            dst = new_states.setdefault(moved, {})
            _poly_add_into(dst, piece, shift=-sign)
        states = {m: c for m, c in new_states.items() if c}

    caps = _initial_matching(s)
    total: dict[int, int] = {}
    for matching, coeff in states.items():
        loops = _count_loops(matching, caps)
        _poly_add_into(total, _poly_mul_delta(dict(coeff), loops - 1))
    return LaurentPolynomial.from_int_coeffs(total, variable="A")


def _count_loops(matching: tuple[int, ...], caps: tuple[int, ...]) -> int:
    size = len(matching)
    seen = [False] * size
    loops = 0
    for start in range(size):
        if seen[start]:
            continue
        loops += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = matching[x]
            seen[y] = True
            x = caps[y]
    return loops


# ---------------------------------------------------------------------------
# V and J.


@dataclass(frozen=True)
class JonesJ:
    """The Jones polynomial J in q = t^(1/2) plus the component count."""

    polynomial: LaurentPolynomial
    components: int


def _v_from_bracket(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """Writhe-normalize the bracket and substitute A = q^(-1/2)."""
    sign = -1 if writhe % 2 else 1
    coeffs: dict[int, GaussianRational] = {}
    for a_exp, c in bracket.coeffs.items():
        shifted = a_exp - 3 * writhe
        if shifted % 2 != 0:
            raise AssertionError("normalized bracket must have even exponents")
        coeffs[-shifted // 2] = c * sign
    return LaurentPolynomial(coeffs)


def jones_v(b: BraidWord, evaluator: str = "sweep") -> LaurentPolynomial:
    """The V normalization of the Jones polynomial, V(unknot) = 1, in q."""
    if evaluator == "sweep":
        bracket = bracket_sweep(b)
    elif evaluator == "naive":
        bracket = kauffman_bracket(braid_closure(b))
    else:
        raise ValueError("evaluator must be 'sweep' or 'naive'")
    return _v_from_bracket(bracket, b.writhe)


def jones(b: BraidWord, evaluator: str = "sweep") -> JonesJ:
    """The Jones polynomial J(t) = (-1)^(|L|-1) V(t^(-1)), in q = t^(1/2)."""
    v = jones_v(b, evaluator=evaluator)
    c = b.component_count()
    j = v.substitute_inverse()
    if (c - 1) % 2:
        j = -j
    value_at_1 = laurent_eval(j, GaussianRational.of(1))
    if value_at_1 != GaussianRational.of(2 ** (c - 1)):
        raise AssertionError(
            f"J(1) = {value_at_1!r} differs from 2^(components-1) = {2 ** (c - 1)}")
    return JonesJ(polynomial=j, components=c)


def jones_at_minus1(j: JonesJ) -> tuple[GaussianRational, GaussianRational]:
    """(J(-1), dJ/dt at t = -1), both exact, evaluated through q = i."""
    return laurent_eval(j.polynomial, GR_I), t_derivative_at_minus1(j.polynomial)


@dataclass
class SkeinReport:
    passed: bool
    failures: list[str]

    def __bool__(self):
        return self.passed


def verify_skein(t: SkeinTriple) -> SkeinReport:
    """Check the J skein relation and its t = -1 derivative consequence.

    Exactly, as Laurent polynomials in q:
        t J+(t) - t^(-1) J-(t) = (t^(1/2) - t^(-1/2)) J0(t)
    and at t = -1, with alpha = J'(-1)/6:
        alpha(+) - alpha(-) = -2i alpha(0) + J+(-1)/6 + J-(-1)/6.
    """
    failures = []
    jp = jones(t.plus).polynomial
    jm = jones(t.minus).polynomial
    jz = jones(t.zero).polynomial
    lhs = jp.shift(2) - jm.shift(-2)
    rhs = (LaurentPolynomial.monomial(1) - LaurentPolynomial.monomial(-1)) * jz
    if lhs != rhs:
        failures.append(
            f"skein relation failed for triple {t.plus} / {t.minus} / {t.zero}")
    six = GaussianRational.of(6)
    alpha_p = t_derivative_at_minus1(jp) / six
    alpha_m = t_derivative_at_minus1(jm) / six
    alpha_z = t_derivative_at_minus1(jz) / six
    jp1 = laurent_eval(jp, GR_I)
    jm1 = laurent_eval(jm, GR_I)
    lhs_a = alpha_p - alpha_m
    rhs_a = GaussianRational.of(-2) * GR_I * alpha_z + jp1 / six + jm1 / six
    if lhs_a != rhs_a:
        failures.append(
            f"derivative relation at t=-1 failed for triple "
            f"{t.plus} / {t.minus} / {t.zero}")
    return SkeinReport(passed=not failures, failures=failures)
