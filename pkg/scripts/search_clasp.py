"""Scratch search for the clasp block of the twisted-double construction.

A candidate clasp block Omega is a word suffix appended to the 2-cable
of a writhe-normalized companion word (cable shifted up by `offset`
spare strands).  A correct block must:

  * close the cable (+ spares) into a single component for every base;
  * give the same V polynomial for different words of the same companion
    knot with the same writhe (Markov robustness);
  * on unknot companions of writhe m, produce the twist-knot ladder:
    m = 0 -> unknot, |m| = 1 -> {3_1, 4_1} consistently with mirrors,
    |m| = 2 -> {5_2, 6_1};
  * have twist-form Alexander polynomial: c*t - (2c +- 1) + c*t^(-1).
"""

import itertools
import sys

sys.path.insert(0, "src")

from linkinv.links import BraidWord, parse_braid, cable_double, writhe_normalized
from linkinv.jones import jones_v
from linkinv.seifert import seifert_matrix, alexander_conway

TABLE = {
    "unknot": parse_braid("2; 1"),
    "3_1": parse_braid("2; 1 1 1"),
    "3_1m": parse_braid("2; -1 -1 -1"),
    "4_1": parse_braid("3; 1 -2 1 -2"),
    "5_2": parse_braid("3; 1 1 1 2 -1 2"),
    "5_2m": parse_braid("3; -1 -1 -1 -2 1 -2"),
    "6_1": parse_braid("4; 1 1 2 -1 -3 2 -3"),
    "6_1m": parse_braid("4; -1 -1 -2 1 3 -2 3"),
}
TABLE_V = {name: jones_v(b) for name, b in TABLE.items()}


def build(base: BraidWord, m: int, omega: tuple[int, ...], offset: int) -> BraidWord:
    targ = writhe_normalized(base, m)
    cab = cable_double(targ, offset=offset)
    need = max((abs(g) + 1 for g in omega), default=2)
    strands = max(cab.strands, need)
    return BraidWord(strands, cab.word + omega)


# Companion words: (name, word, knot, writhe).
UNKNOT_WORDS = {
    0: [parse_braid("1;"), parse_braid("3; 1 -2"), parse_braid("2; 1 -1")],
    1: [parse_braid("2; 1"), parse_braid("3; 1 2 -1")],
    -1: [parse_braid("2; -1")],
    2: [parse_braid("3; 1 2")],
    -2: [parse_braid("3; -1 -2")],
}
TREFOIL_WORDS = [parse_braid("2; 1 1 1"), parse_braid("3; 1 1 1 -2"),
                 parse_braid("3; 2 1 1 1 -2 2")]  # all writhe-normalized below


def twist_form(delta):
    """Check delta = c*t - (2c-1) + c*t^(-1) shape (t=q^2); return c or None."""
    coeffs = dict(delta.coeffs)
    exps = set(coeffs)
    if exps == {0}:
        one = coeffs[0]
        return 0 if one.re == 1 and one.im == 0 else None
    if exps != {2, 0, -2}:
        return None
    c_hi, c_mid, c_lo = coeffs[2], coeffs[0], coeffs[-2]
    if not (c_hi.is_real() and c_mid.is_real() and c_lo.is_real()):
        return None
    if c_hi != c_lo:
        return None
    c = c_hi.re
    if c_mid.re != 1 - 2 * c:
        return None
    return c


def check(omega, offset, verbose=False):
    # Stage 1: single component on the fast bases.
    for m, words in UNKNOT_WORDS.items():
        for w in words:
            d = build(w, m, omega, offset)
            if d.component_count() != 1:
                return None
    report = {}
    # Stage 2: m = 0 unknot companions must give the unknot.
    vs = []
    for w in UNKNOT_WORDS[0]:
        v = jones_v(build(w, 0, omega, offset))
        vs.append(v)
    if not all(v == vs[0] for v in vs):
        return None
    if vs[0] != TABLE_V["unknot"]:
        return None
    report[0] = "unknot"
    # Stage 3: |m| in {1, 2}: hit the twist-knot ladder.
    for m, names in ((1, ("3_1", "4_1", "3_1m")), (-1, ("3_1m", "4_1", "3_1")),
                     (2, ("5_2", "6_1", "5_2m")), (-2, ("5_2m", "6_1m", "6_1", "5_2"))):
        got = [jones_v(build(w, m, omega, offset)) for w in UNKNOT_WORDS[m]]
        if not all(v == got[0] for v in got):
            return None
        match = next((n for n in names if TABLE_V[n] == got[0]), None)
        if match is None:
            return None
        report[m] = match
    # Ladder consistency: mirrors must pair up.
    mirror_pairs = {("3_1", "3_1m"), ("3_1m", "3_1"), ("4_1", "4_1"),
                    ("5_2", "5_2m"), ("5_2m", "5_2"), ("6_1", "6_1m"), ("6_1m", "6_1")}
    if (report[1], report[-1]) not in mirror_pairs:
        return None
    if (report[2], report[-2]) not in mirror_pairs:
        return None
    # Stage 4: Markov robustness on the trefoil companion, and
    # twist-form Alexander polynomials across companions.
    tre = [jones_v(build(w, 3, omega, offset)) for w in TREFOIL_WORDS]
    if not all(v == tre[0] for v in tre):
        return None
    for base, m in ((TABLE["3_1"], 1), (TABLE["3_1"], 0), (TABLE["4_1"], -1),
                    (TABLE["4_1"], 2)):
        d = build(base, m, omega, offset)
        delta, _ = alexander_conway(seifert_matrix(d))
        c = twist_form(delta)
        if c is None:
            return None
        report[f"delta[{m}]"] = c
    return report


def fast_component_prune(omega, offset, cables):
    """Cheap first gate: one component on every precomputed cable."""
    need = max((abs(g) + 1 for g in omega), default=2)
    for strands, word in cables:
        s = max(strands, need)
        pos = list(range(s))
        for g in word + omega:
            a = abs(g) - 1
            pos[a], pos[a + 1] = pos[a + 1], pos[a]
        perm = [0] * s
        for p, st in enumerate(pos):
            perm[st] = p
        seen = [False] * s
        count = 0
        for start in range(s):
            if not seen[start]:
                count += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        if count != 1:
            return False
    return True


def main():
    cables_by_offset = {}
    for offset in (1, 0):
        cables = []
        for m, words in UNKNOT_WORDS.items():
            for w in words:
                cab = cable_double(writhe_normalized(w, m), offset=offset)
                cables.append((cab.strands, cab.word))
        cables_by_offset[offset] = cables

    for offset in (1, 0):
        letters = [1, -1, 2, -2, 3, -3]
        cables = cables_by_offset[offset]
        for length in range(1, 8):
            print(f"offset={offset} length={length}", flush=True)
            found_any = False
            for omega in itertools.product(letters, repeat=length):
                if not fast_component_prune(omega, offset, cables):
                    continue
                rep = check(omega, offset)
                if rep is not None:
                    print("FOUND", offset, omega, rep, flush=True)
                    found_any = True
            if found_any:
                return


if __name__ == "__main__":
    main()
