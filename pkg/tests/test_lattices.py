"""Lattice algebra tests: signatures, SNF, discriminant forms, complements,
overlattices, short vectors, mod-4 representation."""

import random
from fractions import Fraction

import pytest

from k3lab.lattices import (
    GramLattice,
    Sublat,
    direct_sum,
    disc_form,
    disc_forms_isomorphic,
    enhance,
    lattice_from_json,
    named,
    nikulin_embeds,
    nikulin_unique,
    orth_complement,
    overlattice_from_glue,
    represents_two_mod_four,
    rescale,
    signature,
    short_vectors,
    smith_normal_form,
)
from k3lab.lattices.construct import glue_candidates
from k3lab.lattices.gram import signature_by_charpoly
from k3lab.lattices.intmat import matmul, bareiss_det
from k3lab.lattices.shortvec import (
    represents_two_mod_four_brute,
    short_vectors_brute,
)

U = named("U")
U2 = named("U", 2)
U4 = named("U", 4)
E8m = named("E", 8, -1)


def span(m: int) -> GramLattice:
    return named("span", m)


# -- constructors -----------------------------------------------------------


def test_named_determinants():
    assert named("A", 2, -1).det() == 3
    assert named("A", 5, -1).det() == -6
    assert named("D", 4, -1).det() == 4
    assert named("D", 8, -1).det() == 4
    assert named("E", 6, -1).det() == 3
    assert named("E", 7, -1).det() == -2
    assert E8m.det() == 1
    assert named("A", 2, -1).gram == ((-2, 1), (1, -2))


def test_rescale_and_sum():
    assert rescale(U, 2).gram == ((0, 2), (2, 0))
    ns = direct_sum(U2, E8m, E8m)
    assert ns.det() == -4
    tx = direct_sum(U, U2)
    assert tx.det() == 4


def test_k3_lattice():
    k3 = named("K3")
    assert k3.rank == 22 and k3.det() == -1 and k3.is_even()
    assert signature(k3) == (3, 19, 0)


# -- signature ----------------------------------------------------------------


def test_signature_hyperbolic_and_k3_blocks():
    assert signature(U) == (1, 1, 0)
    assert signature(direct_sum(E8m, E8m, U, U, U)) == (3, 19, 0)
    big = direct_sum(U2, E8m, E8m, span(-6))
    assert signature(big) == (1, 18, 0)


def test_signature_matches_charpoly_oracle_random():
    rng = random.Random(41)
    for _ in range(100):
        n = rng.randint(1, 6)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-4, 4)
        L = GramLattice(tuple(tuple(r) for r in m))
        assert signature(L) == signature_by_charpoly(L)


def test_signature_stable_under_unimodular_congruence():
    rng = random.Random(4242)
    base = direct_sum(U, span(-4), span(6))
    sig = signature(base)
    n = base.rank
    for _ in range(20):
        t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                k = rng.randint(-2, 2)
                for c in range(n):
                    t[i][c] += k * t[j][c]
        g = matmul(matmul(t, [list(r) for r in base.gram]), [list(c) for c in zip(*t)])
        assert signature(GramLattice(tuple(tuple(r) for r in g))) == sig


# -- Smith normal form ------------------------------------------------------------


def test_snf_known_cases():
    for L, expected in [
        (U2, [2, 2]),
        (span(-6), [6]),
        (E8m, [1] * 8),
    ]:
        u, s, v = smith_normal_form([list(r) for r in L.gram])
        diag = [abs(s[i][i]) for i in range(L.rank)]
        assert diag == expected


def test_snf_reconstruction_random():
    rng = random.Random(99)
    for _ in range(120):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        u, s, v = smith_normal_form(m)
        assert matmul(matmul(u, m), v) == s
        assert abs(bareiss_det(u)) == 1
        assert abs(bareiss_det(v)) == 1
        diag = [s[i][i] for i in range(min(rows, cols))]
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert s[i][j] == 0


# -- discriminant forms ----------------------------------------------------------


def test_disc_form_u2():
    df = disc_form(U2)
    assert df.factors == (2, 2)
    assert set(df.q) == {Fraction(0)}
    assert df.b[0][1] == Fraction(1, 2)


def test_disc_form_rank_one():
    for n in (1, 2, 3, 5):
        df = disc_form(span(-2 * n))
        assert df.factors == (2 * n,)
        # generator e/2n has q = -1/(2n) mod 2
        assert df.q[0] == Fraction(-1, 2 * n) % 2


def test_disc_form_e8_twice():
    df = disc_form(rescale(E8m, 2))
    assert df.factors == (2,) * 8


def test_det_equals_group_order_random():
    rng = random.Random(7)
    count = 0
    while count < 100:
        n = rng.randint(1, 6)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-3, 3)
        L = GramLattice(tuple(tuple(r) for r in m))
        if L.is_degenerate():
            continue
        count += 1
        assert disc_form(L).order == abs(L.det())


def test_disc_forms_isomorphic_chain():
    a = direct_sum(U2, E8m, E8m, span(-6))
    b = direct_sum(U, named("D", 8, -1), E8m, span(-6))
    c = direct_sum(U, named("D", 8, -1), named("E", 7, -1), named("A", 2, -1))
    da, db, dc = disc_form(a), disc_form(b), disc_form(c)
    assert disc_forms_isomorphic(da, db)
    assert disc_forms_isomorphic(db, dc)
    assert disc_forms_isomorphic(da, dc)
    assert not disc_forms_isomorphic(disc_form(span(-2)), disc_form(span(-6)))


def test_disc_forms_isomorphism_is_equivalence_on_pool():
    pool = [
        span(-2), span(-4), span(-6), span(-8), U2, rescale(U, 4),
        named("A", 2, -1), named("A", 3, -1), named("D", 4, -1),
        named("D", 8, -1), named("E", 6, -1), named("E", 7, -1),
        direct_sum(span(-2), span(-2)), direct_sum(span(-2), span(-4)),
        direct_sum(U2, span(-6)), direct_sum(U, span(-6)),
        rescale(named("A", 2, -1), 2), direct_sum(span(-4), span(-4)),
        rescale(E8m, 2), direct_sum(span(2), span(-6)),
    ]
    forms = [disc_form(L) for L in pool]
    rel = [[disc_forms_isomorphic(a, b) for b in forms] for a in forms]
    for i in range(len(pool)):
        assert rel[i][i]
        for j in range(len(pool)):
            assert rel[i][j] == rel[j][i]
            for k in range(len(pool)):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]


def test_nikulin_predicates():
    c = direct_sum(U, named("D", 8, -1), named("E", 7, -1), named("A", 2, -1))
    assert nikulin_unique(c)
    m = direct_sum(U2, rescale(E8m, 2))
    assert disc_form(m).min_generators == 10
    assert nikulin_embeds(m, (3, 19), 22)
    hi = direct_sum(U, E8m, E8m, span(-2), span(-4), span(2))  # rank 21-ish check below
    assert hi.rank == 21
    assert not nikulin_embeds(hi, (3, 19), 22)


# -- complements, overlattices, enhancement -------------------------------------


def test_orth_complement_examples():
    tx = direct_sum(U, U2)
    for n in (1, 3):
        comp, basis = orth_complement(Sublat(tx, ((1, -n, 0, 0),)))
        assert abs(comp.det()) == 8 * n
        target = direct_sum(span(2 * n), U2)
        assert signature(comp) == signature(target)
        assert disc_forms_isomorphic(disc_form(comp), disc_form(target))


def test_orth_complement_isotropic():
    comp, basis = orth_complement(Sublat(U, ((1, 0),)))
    assert comp.gram == ((0,),)
    assert basis == [[1, 0]]


def test_orth_complement_primitive():
    from k3lab.lattices.intmat import smith_normal_form as snf

    tx = direct_sum(U, U2)
    _, basis = orth_complement(Sublat(tx, ((2, -6, 0, 2),)))
    _, s, _ = snf([list(r) for r in basis])
    diag = [s[i][i] for i in range(len(basis))]
    assert all(abs(d) == 1 for d in diag)


def test_overlattice_glue_to_a2():
    base = direct_sum(span(-2), span(-6))
    over, basis = overlattice_from_glue(base, [[Fraction(1, 2), Fraction(1, 2)]])
    assert over.det() == 3
    assert disc_forms_isomorphic(disc_form(over), disc_form(named("A", 2, -1)))
    same, _ = overlattice_from_glue(base, [])
    assert same.gram == base.gram


def test_overlattice_determinant_index_law():
    rng = random.Random(13)
    runs = 0
    while runs < 40:
        n = rng.randint(2, 4)
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2 * rng.choice([-3, -2, -1, 1, 2, 3])
        L = GramLattice(tuple(tuple(r) for r in g))
        df = disc_form(L)
        found = None
        for el in df.elements():
            if not any(el):
                continue
            vec = [Fraction(0)] * n
            for c, gen in zip(el, df.gens):
                vec = [x + c * y for x, y in zip(vec, gen)]
            s = L.norm(vec)
            pair_ok = all(
                Fraction(L.pair(vec, [1 if i == j else 0 for j in range(n)])).denominator == 1
                for i in range(n)
            )
            if pair_ok and Fraction(s).denominator == 1 and int(s) % 2 == 0:
                found = (el, vec)
                break
        if not found:
            runs += 1
            continue
        el, vec = found
        order = df.element_order(el)
        over, _ = overlattice_from_glue(L, [vec])
        assert abs(over.det()) * order * order == abs(L.det())
        runs += 1


def test_enhance_examples():
    tx = direct_sum(U, U2)
    t_new, recipe = enhance(tx, (1, -3, 0, 0))
    assert disc_forms_isomorphic(disc_form(t_new), disc_form(direct_sum(span(6), U2)))
    assert recipe.v_square == -6 and recipe.d1 == 1

    ty = direct_sum(U2, U4)
    t_new2, recipe2 = enhance(ty, (1, -2, 0, 0))
    assert disc_forms_isomorphic(disc_form(t_new2), disc_form(direct_sum(span(8), U4)))
    assert recipe2.d1 == 2

    ty1 = direct_sum(span(4), U4)
    t_new3, _ = enhance(ty1, (1, 1, -1))
    assert abs(t_new3.det()) == 16
    target = GramLattice(((4, 0), (0, 4)))
    assert signature(t_new3) == signature(target)
    assert disc_forms_isomorphic(disc_form(t_new3), disc_form(target))


def test_enhance_rejects_bad_vectors():
    tx = direct_sum(U, U2)
    with pytest.raises(ValueError):
        enhance(tx, (2, -6, 0, 0))
    with pytest.raises(ValueError):
        enhance(tx, (1, 1, 0, 0))


def test_glue_candidates_match_recipe():
    ty = direct_sum(U2, U4)
    _, recipe = enhance(ty, (1, -2, 0, 0))
    ns = direct_sum(U2, rescale(E8m, 1))  # placeholder ns side with (Z/2)^2 part
    cands = glue_candidates(direct_sum(U2, E8m), recipe)
    for glue in cands:
        assert glue[-1] == Fraction(1, recipe.d1)


# -- short vectors and mod 4 -----------------------------------------------------


def test_short_vectors_examples():
    no_roots = direct_sum(rescale(E8m, 2), span(-6))
    assert short_vectors(no_roots, 2) == []
    with_root = direct_sum(rescale(E8m, 2), span(-2))
    vecs = short_vectors(with_root, 2)
    assert (0,) * 8 + (1,) in vecs
    assert short_vectors(span(-2), 2) == [(1,)]
    with pytest.raises(ValueError):
        short_vectors(U, 2)


def test_short_vectors_brute_agreement():
    rng = random.Random(21)
    runs = 0
    while runs < 50:
        n = rng.randint(1, 4)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-2, 2)
        for i in range(n):
            m[i][i] = 2 * rng.randint(1, 3) + 2 * n  # diagonally dominant: definite
        L = GramLattice(tuple(tuple(r) for r in m))
        sp, sm, s0 = signature(L)
        if s0 or (sp and sm):
            continue
        bound = rng.randint(2, 12)
        assert short_vectors(L, bound) == short_vectors_brute(L, bound, box=6)
        runs += 1


def test_mod_four_examples():
    assert represents_two_mod_four(direct_sum(rescale(E8m, 2), span(-6)))
    assert not represents_two_mod_four(direct_sum(rescale(E8m, 2), span(-8)))
    assert represents_two_mod_four(span(-6))
    with pytest.raises(ValueError):
        represents_two_mod_four(span(-3))


def test_mod_four_brute_agreement():
    rng = random.Random(31)
    runs = 0
    while runs < 50:
        n = rng.randint(1, 5)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-3, 3)
            m[i][i] = 2 * rng.randint(-4, 4)
        L = GramLattice(tuple(tuple(r) for r in m))
        assert represents_two_mod_four(L) == represents_two_mod_four_brute(L)
        runs += 1


def test_parity_sweep_rank_one_summand():
    for n in range(2, 12):
        L = direct_sum(rescale(E8m, 2), span(-2 * n))
        assert represents_two_mod_four(L) == (n % 2 == 1)


# -- file format --------------------------------------------------------------


def test_lattice_literals():
    assert lattice_from_json({"name": "U(2)"}).gram == U2.gram
    assert lattice_from_json("<-6>").gram == ((-6,),)
    assert lattice_from_json({"sum": ["U", "U(2)"]}).gram == direct_sum(U, U2).gram
    assert lattice_from_json({"gram": [[0, 3], [3, 0]]}).gram == ((0, 3), (3, 0))
    assert lattice_from_json("K3").rank == 22
    assert lattice_from_json("E8(-1)").det() == 1
    with pytest.raises(ValueError):
        lattice_from_json("Q17")
