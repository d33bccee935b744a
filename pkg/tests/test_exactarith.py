"""Polynomial, rational-function and quotient-ring kernel tests."""

import math
import random
from fractions import Fraction

import pytest

from k3lab.exactarith import (
    INF,
    MPoly,
    QQ,
    FracField,
    QuotElem,
    RatFunc,
    UPoly,
    mpoly_gcd,
    mpoly_sqrt,
    parse_expr,
    poly_gcd,
    quot_mul,
    ratfunc_sqrt,
    squarefree_decomposition,
    substitute,
    valuation_at,
)
from k3lab.exactarith.parser import ExprError, format_ratfunc


def up(text: str, var: str = "t") -> UPoly:
    f = parse_expr(text, {var})
    p = f.as_mpoly()
    cs = {e[0] if p.vars else 0: c for e, c in p.with_vars((var,)).terms.items()}
    return UPoly(var, [cs.get(i, Fraction(0)) for i in range(max(cs, default=-1) + 1)])


def rf(text: str, vars) -> RatFunc:
    return parse_expr(text, set(vars))


# -- gcd ---------------------------------------------------------------


def test_gcd_common_linear_factor():
    assert poly_gcd(up("t^2 - 4"), up("t - 2")) == up("t - 2")


def test_gcd_with_zero_is_monic_identity():
    z = UPoly.zero("t")
    p = up("3*t^2 - 3")
    assert poly_gcd(p, z) == up("t^2 - 1")
    assert poly_gcd(z, z).is_zero()


def test_gcd_discriminant_against_c4_is_one():
    # multiplicative places force coprimality of these two
    delta_part = up("t^8") * up("t^4 - 4") ** 2
    c4_part = up("t^8 - 4*t^4 + 16")
    assert poly_gcd(delta_part, c4_part) == up("1")


def brute_force_common_divisors(p: UPoly, q: UPoly, max_deg: int = 4):
    """All monic divisors of degree <= max_deg dividing both, by trial division."""
    found = []
    rng = random.Random(11)
    for _ in range(4000):
        deg = rng.randint(0, max_deg)
        cand = UPoly("t", [Fraction(rng.randint(-3, 3)) for _ in range(deg)] + [Fraction(1)])
        if (p % cand).is_zero() and (q % cand).is_zero():
            found.append(cand)
    return found


def test_gcd_degree_maximal_among_random_common_divisors():
    rng = random.Random(5)

    def rand_poly(deg):
        return UPoly("t", [Fraction(rng.randint(-4, 4)) for _ in range(deg)] + [Fraction(1)])

    for _ in range(25):
        base = rand_poly(rng.randint(0, 3))
        p = base * rand_poly(rng.randint(0, 3))
        q = base * rand_poly(rng.randint(0, 3))
        g = poly_gcd(p, q)
        assert (p % g).is_zero() and (q % g).is_zero()
        for cand in brute_force_common_divisors(p, q):
            assert cand.degree <= g.degree


# -- squarefree decomposition ------------------------------------------------


def test_squarefree_known_shape():
    p = up("t^8") * up("t^4 - 4") ** 2
    unit, parts = squarefree_decomposition(p)
    assert unit == 1
    assert parts == [(up("t^4 - 4"), 2), (up("t"), 8)]


def test_squarefree_trivial_cases():
    assert squarefree_decomposition(up("t - 5"))[1] == [(up("t - 5"), 1)]
    assert squarefree_decomposition(up("t^2 + 1") ** 3)[1] == [(up("t^2 + 1"), 3)]


def test_squarefree_reassembles_random_products():
    rng = random.Random(0xC0FFEE)
    for _ in range(200):
        p = UPoly.const("t", Fraction(rng.choice([1, 2, -3, 5])))
        total = 0
        while total < rng.randint(1, 12):
            f = UPoly("t", [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))] + [Fraction(1)])
            m = rng.randint(1, 3)
            p = p * f**m
            total += f.degree * m
        unit, parts = squarefree_decomposition(p)
        redone = UPoly.const("t", unit)
        mults = [m for _, m in parts]
        assert mults == sorted(mults) and len(set(mults)) == len(mults)
        for f, m in parts:
            redone = redone * f**m
            assert poly_gcd(f, f.derivative()).degree == 0
        assert redone == p


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_decomposition(UPoly.zero("t"))


# -- valuations ----------------------------------------------------------


def test_valuations():
    p = up("t^8") * up("t^4 - 4") ** 2
    assert valuation_at(p, up("t^4 - 4")) == 2
    assert valuation_at(up("t^3"), up("t")) == 3
    assert valuation_at(up("t^2 + 1"), up("t - 1")) == 0
    assert valuation_at(UPoly.zero("t"), up("t")) == INF
    with pytest.raises(ValueError):
        valuation_at(up("t"), up("2"))


# -- substitution -------------------------------------------------------------


def test_substitute_specializes_family_parameter():
    a = rf("(2*t/(2*t^2 - 1))^2", {"t"})
    val = substitute(a, {"t": RatFunc.const(1)})
    assert val == RatFunc.const(4)


def test_substitute_identity():
    p = rf("(t^3 + 2)/(t - 5)", {"t"})
    assert substitute(p, {"t": RatFunc.var("t")}) == p


def test_substitute_chain_matches_composed():
    f = rf("(t^2 + 1)/t", {"t"})
    g = rf("t + 3", {"t"})
    once = substitute(f, {"t": g})
    assert substitute(once, {"t": RatFunc.var("t")}) == once


def test_substitute_square_root_parametrization():
    # q = 3/sqrt(2a+1) rationalized by a = (2t/(2t^2-1))^2
    a = rf("(2*t/(2*t^2 - 1))^2", {"t"})
    q = rf("3*(2*t^2 - 1)/(1 + 2*t^2)", {"t"})
    lhs = substitute(rf("9/(2*a + 1)", {"a"}), {"a": a})
    assert lhs == q * q


def test_substitute_denominator_vanishes():
    f = rf("1/(t^2 - 4)", {"t"})
    with pytest.raises(ZeroDivisionError):
        substitute(f, {"t": RatFunc.const(2)})


# -- square roots ------------------------------------------------------------


def test_ratfunc_sqrt_basic():
    f = rf("(t^2 - 4)^2/(t + 1)^2", {"t"})
    r = ratfunc_sqrt(f)
    assert r == rf("(t^2 - 4)/(t + 1)", {"t"})
    assert ratfunc_sqrt(rf("t", {"t"})) is None


def test_ratfunc_sqrt_sign_convention_and_random_roundtrip():
    rng = random.Random(77)
    for _ in range(100):
        num = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 7))]
        den = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 4))]
        g = RatFunc(
            MPoly.from_coeffs_in("t", {i: MPoly.const(c, ("t",)) for i, c in enumerate(num)}),
            MPoly.from_coeffs_in("t", {i: MPoly.const(c, ("t",)) for i, c in enumerate(den)}) + MPoly.var("t") ** 5,
        )
        if g.is_zero():
            continue
        r = ratfunc_sqrt(g * g)
        assert r is not None and (r == g or r == -g)
        assert r.num.leading_coefficient() > 0


def test_sqrt_parity_cross_check_univariate():
    # direct extraction agrees with the even-multiplicity criterion over Q
    rng = random.Random(3)
    for _ in range(60):
        p = UPoly.const("t", Fraction(1))
        for _ in range(rng.randint(1, 3)):
            f = UPoly("t", [Fraction(rng.randint(-3, 3)), Fraction(1)])
            p = p * f ** rng.randint(1, 4)
        scale = Fraction(rng.choice([1, 4, 9, 2, 3]))
        p = p * scale
        _, parts = squarefree_decomposition(p)
        unit = p.leading_coefficient()
        for f, m in parts:
            unit *= f.leading_coefficient() ** m  # monic parts, no-op guard
        parity_square = all(m % 2 == 0 for _, m in parts) and QQ.sqrt(p.leading_coefficient()) is not None
        mp = MPoly.from_coeffs_in("t", {i: MPoly.const(c, ("t",)) for i, c in enumerate(p.coeffs)})
        assert (mpoly_sqrt(mp) is not None) == parity_square


def test_multivariate_sqrt():
    x = MPoly.var("x", ("x", "y"))
    y = MPoly.var("y", ("x", "y"))
    p = (x**2 + 3 * y - 1) ** 2 * MPoly.const(Fraction(9, 4), ("x", "y"))
    r = mpoly_sqrt(p)
    assert r is not None and r * r == p
    assert mpoly_sqrt(p * x) is None


# -- parser --------------------------------------------------------------


def test_parse_simple_polynomial():
    assert parse_expr("t^4 - 4", {"t"}) == rf("t^4 - 4", {"t"})


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ExprError):
        parse_expr("x*(x^2", {"x"})  # unbalanced
    with pytest.raises(ExprError):
        parse_expr("x(x^2 + 1)", {"x"})


def test_parse_unknown_variable_offset():
    with pytest.raises(ExprError) as err:
        parse_expr("t + zz", {"t"})
    assert err.value.offset == 4


def test_parse_three_variable_product():
    p = parse_expr("t^3*(t - a)*(t - b)", {"t", "a", "b"})
    t, a, b = (RatFunc.var(v) for v in "tab")
    assert p == t**3 * (t - a) * (t - b)


def test_print_parse_roundtrip_random():
    rng = random.Random(123)
    vars = ("a", "t")
    for _ in range(120):
        num = MPoly.zero(vars)
        for _ in range(rng.randint(1, 5)):
            num = num + MPoly.const(Fraction(rng.randint(-6, 6), rng.randint(1, 3)), vars) * MPoly.var("a", vars) ** rng.randint(0, 3) * MPoly.var("t", vars) ** rng.randint(0, 3)
        den = MPoly.one(vars) + MPoly.var("t", vars) ** rng.randint(1, 3)
        f = RatFunc(num, den)
        assert parse_expr(format_ratfunc(f), set(vars)) == f


def test_parse_rational_literal():
    assert parse_expr("3/4", set()) == RatFunc.const(Fraction(3, 4))
    assert parse_expr("3/4*t", {"t"}) == RatFunc.const(Fraction(3, 4)) * RatFunc.var("t")


# -- quotient ring -------------------------------------------------------------


def make_conjugate_ring():
    field = FracField({"a", "b"})
    s = field.coerce(parse_expr("a + b", {"a", "b"}))
    p = field.coerce(parse_expr("a*b", {"a", "b"}))
    mod = UPoly("j", [p, -s, field.one()], field)  # j^2 - s j + p
    return field, s, p, mod


def test_quot_reduction_rule():
    field, s, p, mod = make_conjugate_ring()
    j = QuotElem(UPoly("j", [field.zero(), field.one()], field), mod)
    jj = quot_mul(j, j)
    # j^2 reduces to s*j - p
    assert jj.rep == UPoly("j", [-p, s], field)
    one = QuotElem(UPoly.const("j", 1, field), mod)
    assert quot_mul(one, j) == j


def test_quot_modulus_mismatch():
    field, s, p, mod = make_conjugate_ring()
    other_mod = UPoly("j", [field.one(), field.zero(), field.one()], field)
    x = QuotElem(UPoly.const("j", 1, field), mod)
    y = QuotElem(UPoly.const("j", 1, field), other_mod)
    with pytest.raises(ValueError):
        quot_mul(x, y)


def test_quot_conjugate_product_is_norm():
    field, s, p, mod = make_conjugate_ring()
    j = QuotElem(UPoly("j", [field.zero(), field.one()], field), mod)
    conj = QuotElem(UPoly("j", [s, -field.one()], field), mod)  # s - j
    prod = quot_mul(j, conj)
    assert prod.is_scalar() and prod.scalar_value() == p


# -- misc invariants --------------------------------------------------------


def test_mpoly_gcd_divides_inputs():
    rng = random.Random(9)
    vars = ("a", "t")
    for _ in range(30):
        def rnd():
            p = MPoly.zero(vars)
            for _ in range(rng.randint(1, 4)):
                p = p + MPoly.const(rng.randint(-3, 3), vars) * MPoly.var("a", vars) ** rng.randint(0, 2) * MPoly.var("t", vars) ** rng.randint(0, 2)
            return p

        base = rnd()
        p, q = base * rnd(), base * rnd()
        if p.is_zero() or q.is_zero():
            continue
        g = mpoly_gcd(p, q)
        from k3lab.exactarith.mpoly import _divides

        assert _divides(g, p) and _divides(g, q)
        if not base.is_zero():
            assert g.total_degree() >= 0


def test_upoly_over_function_field():
    field = FracField({"r"})
    r = field.coerce(parse_expr("r", {"r"}))
    p = UPoly("t", [r, field.one()], field) * UPoly("t", [-r, field.one()], field)
    assert p == UPoly("t", [-r * r, field.zero(), field.one()], field)
    g = poly_gcd(p, UPoly("t", [r, field.one()], field))
    assert g == UPoly("t", [r, field.one()], field)
