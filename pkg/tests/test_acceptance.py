"""Acceptance suite: one test per criterion, printing one PASS line each.

Everything here is exact arithmetic, so every comparison is equality; there
are no tolerances anywhere.
"""

import itertools
import random
from fractions import Fraction as F

import pytest

from conftest import rand_algebra, rand_skew_tensor, rand_sym_tensor, rand_vector
from homcheck import (
    HomAlgebra,
    Matrix,
    basis_vector,
    beta_from_automorphism,
    check_admissible_jmp,
    check_condition_rl,
    check_flexible_characterization,
    check_hlts_axioms,
    check_hljp,
    check_hom_flexible,
    check_hom_malcev,
    check_map_properties,
    check_multilinear,
    check_power_hom_associative,
    check_pseudo_euclidean_homjmp,
    hljp_from_homjmp,
    hom_associator,
    hom_jacobiator,
    cyclic_associator,
    minus_algebra,
    plus_algebra,
    pseudo_euclidean_jmp_suite,
    rank,
    t_star_extension,
    triple_from_malcev,
    twisted_pseudo_euclidean,
    yau_twist,
)
from homcheck.algebra import jmp_pair
from homcheck.examples import ex3, ex3_flat_jmp, ex5, theta_involution
from homcheck.identities import (
    FOURTH_POWER,
    JORDAN_IDENTITY,
    MALCEV_IDENTITY,
    RL_CONDITION,
    THIRD_POWER,
    sampled_verdict,
)
from homcheck.io import LoadedAlgebra, build_report
from homcheck.linalg import is_zero, mat_apply, vscale

EX3_PARAMS = [F(2), F(3), F(5, 7), F(-4)]
EX5_PARAMS = [(F(2), F(3)), (F(1), F(1)), (F(-1), F(1, 2))]


def all_fixtures():
    return [("ex3", lam, ex3(lam)) for lam in EX3_PARAMS] + [
        ("ex5", (nu, lam), ex5(nu, lam)) for nu, lam in EX5_PARAMS]


def test_criterion_1_three_dim_example():
    e = [basis_vector(3, i) for i in range(3)]
    for lam in EX3_PARAMS:
        alg = ex3(lam)
        doc = build_report(LoadedAlgebra(kind="algebra", algebra=alg, name="ex3"))
        assert doc["classification"]["admissible-hom-jmp"] == "pass"
        assert doc["classification"]["hom-alternative"] == "fail"
        expected = vscale(-1 / lam ** 2, e[2])
        assert hom_associator(alg, e[1], e[2], e[2]) == expected
    print("\nACCEPTANCE 1: PASS - EX3 admissible, not alternative, "
          "associator -1/lambda^2 e3 for all four parameter values")


def test_criterion_2_five_dim_example():
    for nu, lam in EX5_PARAMS:
        alg = ex5(nu, lam)
        assert check_hom_flexible(alg).passed
        assert check_hom_malcev(minus_algebra(alg)).passed
        assert check_condition_rl(alg).passed
        assert check_admissible_jmp(alg).passed
    print("\nACCEPTANCE 2: PASS - EX5 flexible, minus-Malcev, R/L condition, "
          "admissible for all three parameter pairs")


def test_criterion_3_twist_closure():
    combos = 0
    for _, _, alg in all_fixtures():
        assert check_admissible_jmp(alg).passed
        for beta in (Matrix.identity(alg.dim), alg.twist, alg.twist.power(2)):
            twisted = yau_twist(alg, beta)
            assert check_admissible_jmp(twisted).passed
            combos += 1
    print(f"\nACCEPTANCE 3: PASS - twist closure over {combos} "
          "(fixture, beta) combinations, zero failures")


def test_criterion_4_power_hom_associativity():
    for _, _, alg in all_fixtures():
        assert check_power_hom_associative(alg, strict_34=True).passed
        sampled = check_power_hom_associative(alg, strict_34=False, max_power=6,
                                              samples=100, seed=2024)
        assert sampled.passed
        assert sampled.checked == 100 * sum(n - 1 for n in range(2, 7))
    print("\nACCEPTANCE 4: PASS - polarized third/fourth power identities and "
          "sampled n-th power identity (N=6, 100 vectors) on every fixture")


def test_criterion_5_t_star_extension():
    base = ex3_flat_jmp()
    ext = t_star_extension(base)
    assert ext.result.dim == 6
    form = ext.form
    assert form.matrix == form.matrix.transpose()
    assert rank(form.matrix) == 6
    rep = check_pseudo_euclidean_homjmp(ext.result, form)
    assert rep.passed
    assert pseudo_euclidean_jmp_suite(ext.result, form).passed
    th = theta_involution()
    flags = check_map_properties(base, th)
    assert flags.automorphism and (th @ th) == Matrix.identity(3)
    bmap = beta_from_automorphism(ext, th)
    assert bmap.automorphism_of_extension
    twisted, twisted_form = twisted_pseudo_euclidean(ext.result, form, bmap.matrix)
    assert pseudo_euclidean_jmp_suite(twisted, twisted_form).passed
    print("\nACCEPTANCE 5: PASS - T*-extension form symmetric/nondegenerate/"
          "invariant, full suite passes, theta-twisted structure passes")


def test_criterion_6_automorphism_criterion():
    ext = t_star_extension(ex3_flat_jmp())
    th = theta_involution()
    diag = lambda a, b, c: Matrix.diagonal([a, b, c])
    automorphisms = [
        Matrix.identity(3),
        th,
        diag(1, 2, F(1, 2)),
        diag(1, 3, F(1, 3)),
        diag(1, -4, F(-1, 4)),
        th @ diag(1, 2, F(1, 2)),
    ]
    outcomes = []
    for a in automorphisms:
        assert check_map_properties(ext.base, a).automorphism
        rep = beta_from_automorphism(ext, a)
        assert rep.automorphism_of_extension == rep.image_in_centers
        outcomes.append(rep.automorphism_of_extension)
    assert len(automorphisms) >= 5
    assert True in outcomes and False in outcomes
    print(f"\nACCEPTANCE 6: PASS - automorphism criterion verdicts agree on "
          f"{len(automorphisms)} maps (both outcomes exercised)")


def test_criterion_7_triple_systems(p6_fixture):
    for alg in (ex3(2), ex5(2, 3)):
        system = triple_from_malcev(minus_algebra(alg))
        rep = check_hlts_axioms(system)
        assert rep.passed
        fundamental = rep.subreports[-1]
        assert fundamental.name == "fundamental-identity"
        assert fundamental.checked == alg.dim ** 6
        assert check_hljp(hljp_from_homjmp(jmp_pair(alg))).passed
    twisted, form = p6_fixture.twisted, p6_fixture.twisted_form
    system = hljp_from_homjmp(twisted)
    n, t4, alpha = 6, system.triple, twisted.twist
    e = [basis_vector(n, i) for i in range(n)]
    alpha_e = [mat_apply(alpha, v) for v in e]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        lhs = form.value(t4.row(i, j, k), alpha_e[l])
        rhs = -form.value(alpha_e[k], t4.row(i, j, l))
        assert lhs == rhs
    print("\nACCEPTANCE 7: PASS - triple systems pass all axioms including the "
          "n^6 fundamental identity; P6 invariance holds on all basis 4-tuples")


def test_criterion_8_lemma_suite():
    rng = random.Random(88)
    for _, _, alg in all_fixtures():
        assert check_hom_flexible(alg).passed
        n = alg.dim
        e = [basis_vector(n, i) for i in range(n)]
        minus = minus_algebra(alg)
        plus = plus_algebra(alg)
        for i, j, k in itertools.product(range(n), repeat=3):
            assert vscale(F(2), cyclic_associator(alg, e[i], e[j], e[k])) == \
                hom_jacobiator(minus, e[i], e[j], e[k])
        for _ in range(100):
            x, y = rand_vector(rng, n), rand_vector(rng, n)
            xsq = alg.product(x, x)
            ay, ax = alg.twisted(y), alg.twisted(x)
            assert is_zero(hom_jacobiator(minus, xsq, ay, ax))
            assert hom_associator(alg, xsq, ay, ax) == hom_associator(plus, xsq, ay, ax)
        rep = check_flexible_characterization(alg)
        assert rep.passed and rep.details["matches_flexible"]
    for _ in range(50):
        alg = rand_algebra(rng, 3)
        rep = check_flexible_characterization(alg)
        assert rep.details["matches_flexible"]
    print("\nACCEPTANCE 8: PASS - 2S = J_minus on all basis triples, square "
          "identities on 100 random pairs per fixture, characterization matches "
          "flexibility on fixtures and 50 fuzzed tensors")


def test_criterion_9_polarization_soundness():
    rng = random.Random(404)
    ident3 = Matrix.identity(3)
    cases = [
        (JORDAN_IDENTITY, plus_algebra(ex3(2)), True),
        (JORDAN_IDENTITY, plus_algebra(ex5(2, 3)), True),
        (JORDAN_IDENTITY, HomAlgebra(rand_sym_tensor(rng, 3), ident3), False),
        (MALCEV_IDENTITY, minus_algebra(ex3(2)), True),
        (MALCEV_IDENTITY, minus_algebra(ex5(2, 3)), True),
        (MALCEV_IDENTITY, HomAlgebra(rand_skew_tensor(rng, 3), ident3), False),
        (RL_CONDITION, ex3(2), True),
        (RL_CONDITION, ex5(2, 3), True),
        (RL_CONDITION, rand_algebra(rng, 3), False),
        (THIRD_POWER, ex3(2), True),
        (THIRD_POWER, rand_algebra(rng, 3), False),
        (FOURTH_POWER, ex3(2), True),
        (FOURTH_POWER, rand_algebra(rng, 3), False),
    ]
    for identity, alg, expected in cases:
        exact = check_multilinear(identity, alg).passed
        assert exact is expected, f"{identity.name}: exact verdict surprise"
        assert sampled_verdict(identity, alg, samples=500, seed=909) is exact, \
            f"{identity.name}: sampling disagrees with the exact verdict"
    print(f"\nACCEPTANCE 9: PASS - polarized basis verdicts agree with direct "
          f"evaluation on 500 random inputs for {len(cases)} identity/algebra pairs")
