"""Acceptance criteria, one test each, with exact checks and runtime limits.

A pass/fail line per criterion is printed in the terminal summary.
"""

import json
import random
import time
from fractions import Fraction

import sympy as sp

from ncapoly import io
from ncapoly.coefficients import T
from ncapoly.pipeline import (
    L as LS,
    M as MS,
    KnotData,
    a_polynomial,
    b_polynomial,
    character_cover_check,
    peripheral_to_abasis,
    specialize_and_swap,
    unknot,
    verify_orthogonality,
)
from ncapoly.quantum_plane import PlanePoly, buchberger, mono_left_mul, plane_mul, s_polynomial
from ncapoly.quantum_torus import Shift, clear_to_plane
from ncapoly.skein_torus import SkeinElement, bp_relators, parse_skein, phat_curve
from ncapoly.solid_torus import annihilator_search, z_unknot

P = PlanePoly
TT = T**2 + T**-2
BASIS = (
    P({(0, 2): 1, (0, 1): TT, (0, 0): 1}),
    P({(2, 1): 1, (2, 0): T**-2, (0, 1): -1, (0, 0): -T**2}),
)
CONTRACTED = (
    P({(0, 2): 1, (0, 1): TT, (0, 0): 1}),
    P({(2, 2): T**-3, (2, 1): T**-5, (0, 1): T**-1, (0, 0): T}),
)
TRANSLATED = (
    phat_curve((1, 0)) + SkeinElement.scalar(TT),
    phat_curve((1, 1)) + phat_curve((0, 1)) * T**-3,
)


def timed(fn):
    start = time.perf_counter()
    ok = fn()
    return ok, time.perf_counter() - start


def check(record, number, title, limit, fn):
    ok, secs = timed(fn)
    passed = bool(ok) and secs < limit
    record(number, title, passed, secs)
    assert ok, f"criterion {number} failed"
    assert secs < limit, f"criterion {number} took {secs:.2f} s (limit {limit} s)"


def test_criterion_1_unknot_abasis(record_criterion):
    def run():
        res = peripheral_to_abasis(unknot())
        return res.basis.polys == BASIS and all(f.lc == 1 for f in res.basis) \
            and [f.lpp for f in res.basis] == sorted(f.lpp for f in res.basis)

    check(record_criterion, 1, "unknot A-basis", 1.0, run)


def test_criterion_2_contracted_generators(record_criterion):
    def run():
        gens = [parse_skein(s) for s in unknot().peripheral_gens]
        out = [clear_to_plane(g.value) for g in gens]
        return tuple(g for g, _ in out) == CONTRACTED and [s for _, s in out] == [Shift(0, 1), Shift(1, 1)]

    check(record_criterion, 2, "contracted generators", 1.0, run)


def test_criterion_3_relators(record_criterion):
    def run():
        flipped = bp_relators(flipped=True)
        return all(not r for r in bp_relators()) and bool(flipped[1]) \
            and flipped[1] == (phat_curve((1, -1)) - phat_curve((1, 1))) * (T**2 - T**-2)

    check(record_criterion, 3, "Bullock-Przytycki relators", 1.0, run)


def test_criterion_4_orthogonality(record_criterion):
    def run():
        rep = verify_orthogonality(unknot(), 200)
        return rep.passed and len(rep.checks) == 2 \
            and tuple(c.translated for c in rep.checks) == TRANSLATED \
            and all(len(c.residual) == 201 and not any(c.residual) for c in rep.checks)

    check(record_criterion, 4, "orthogonality through c = 200", 30.0, run)


def test_criterion_5_formal_ideal(record_criterion):
    def run():
        res = annihilator_search(z_unknot(24), 1, 1, 20)
        return all(res.contains(s) for s in TRANSLATED)

    check(record_criterion, 5, "annihilator search recovers the generators", 60.0, run)


def test_criterion_6_classical_bridge(record_criterion):
    def run():
        ps = specialize_and_swap(peripheral_to_abasis(unknot()))
        B = b_polynomial(ps)
        A = a_polynomial(B)
        return B == sp.Poly(LS - 1, LS, MS, domain=sp.QQ) \
            and A == sp.Poly(1, LS, MS, domain=sp.QQ) and character_cover_check()

    check(record_criterion, 6, "B = l - 1, A = 1, character cover", 1.0, run)


# -- criterion 7 ------------------------------------------------------------------------------

def _random_ideal(rng):
    gens = []
    for _ in range(rng.randint(2, 3)):
        keys = {(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(rng.randint(1, 3))}
        gens.append(P({k: T ** rng.randint(-2, 2) * rng.choice([1, -1, 2]) for k in keys}))
    return gens


def _scramble(gens, rng):
    gens = list(gens)
    for _ in range(3):
        i = rng.randrange(len(gens))
        op = rng.randrange(3)
        if op == 0:
            gens[i] = gens[i].scale(T ** rng.randint(-3, 3) * Fraction(rng.choice([1, -1, 3]), rng.choice([1, 2])))
        elif op == 1:
            gens.append(mono_left_mul(rng.randint(0, 2), rng.randint(0, 2), gens[i]))
        else:
            j = rng.randrange(len(gens))
            if j != i:
                h = P({(rng.randint(0, 1), rng.randint(0, 1)): T ** rng.randint(-2, 2)})
                gens[i] = gens[i] + plane_mul(h, gens[j])
    rng.shuffle(gens)
    return gens


def _commutative(f):
    return sum(sp.Rational(c.specialize(-1)) * LS**p * MS**q for (p, q), c in f.terms.items())


def _engine_properties():
    rng = random.Random(2024)
    ideals = [list(CONTRACTED)] + [_random_ideal(rng) for _ in range(8)]
    for gens in ideals:
        G = buchberger(gens)
        if any(G.reduce(g) for g in gens):
            return False
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                if G.reduce(s_polynomial(G[i], G[j])):
                    return False
        if buchberger(G.polys) != G:
            return False
        if any(buchberger(_scramble(gens, rng)) != G for _ in range(20)):
            return False
        live = [g for g in gens if _commutative(g) != 0]
        if live:
            ours = [sp.expand(_commutative(f)) for f in buchberger(live, t0=-1)]
            ref = sp.groebner([_commutative(g) for g in live], LS, MS, order="lex", domain=sp.QQ)
            theirs = sorted((p.monic() for p in ref.polys), key=lambda p: p.monoms()[0])
            if ours != [p.as_expr() for p in theirs]:
                return False
    return True


def test_criterion_7_groebner_engine(record_criterion):
    check(record_criterion, 7, "Groebner engine property suite", 60.0, _engine_properties)


# -- criterion 8 ------------------------------------------------------------------------------

def test_criterion_8_external_inputs(record_criterion, tmp_path):
    """External knot and kappa files are accepted and processed; no claims are
    made about their results, since nothing here certifies them."""

    def run():
        kappa = io.kappa_to_json(z_unknot(30))
        kappa["knot"] = "external"
        (tmp_path / "ext.kappa").write_text(json.dumps(kappa))
        knot = {"name": "external", "bounding_curve": [1, 0], "kappa": "ext.kappa",
                "generators": ["L(1,0) + t^2 + t^-2", "L(2,1) - t*L(0,1)"]}
        (tmp_path / "ext.knot").write_text(json.dumps(knot))
        k = io.read_knot(tmp_path / "ext.knot")
        res = peripheral_to_abasis(k)
        rep = verify_orthogonality(k, 20)
        return isinstance(k, KnotData) and len(res.basis) >= 1 and len(rep.checks) == 2

    check(record_criterion, 8, "external knot data accepted, no claims made", 60.0, run)
