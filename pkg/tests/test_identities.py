import random
from fractions import Fraction as F

import pytest

from conftest import (
    rand_algebra,
    rand_jmp,
    rand_matrix,
    rand_skew_tensor,
    rand_sym_tensor,
    rand_tensor,
    rand_vector,
)
from homcheck import (
    HomAlgebra,
    HomJMPAlgebra,
    HomogeneityError,
    Matrix,
    Tensor3,
    basis_vector,
    check_admissible_jmp,
    check_condition_rl,
    check_flexible_characterization,
    check_hom_alternative,
    check_hom_flexible,
    check_hom_jmp,
    check_hom_jordan,
    check_hom_leibniz,
    check_hom_malcev,
    check_map_properties,
    check_multilinear,
    check_power_hom_associative,
    evaluate,
    hom_associator,
    minus_algebra,
    plus_algebra,
    polarize,
)
from homcheck.algebra import jmp_pair
from homcheck.examples import (
    ex3,
    ex3_flat,
    ex5,
    theta_involution,
    zero_algebra,
    zero_jmp,
)
from homcheck.forms import BilinearForm
from homcheck.identities import (
    JORDAN_IDENTITY,
    LEFT_ALTERNATIVE,
    MALCEV_IDENTITY,
    RL_CONDITION,
    EvalContext,
    Prod,
    Var,
    sampled_verdict,
)
from homcheck.linalg import is_zero, vscale

E3 = [basis_vector(3, i) for i in range(3)]


# ---------------------------------------------------------------------------
# polarization

def test_polarize_square_on_zero_algebra():
    square = polarize(Prod("main", Var(0), Var(0)), var=0, degree=2, name="square")
    ctx = EvalContext(zero_algebra(3))
    for i in range(3):
        for j in range(3):
            assert is_zero(square.evaluate(ctx, (E3[i], E3[j])))


def test_polarize_square_one_dim_idempotent():
    square = polarize(Prod("main", Var(0), Var(0)), var=0, degree=2, name="square")
    alg = HomAlgebra(Tensor3.from_sparse(1, [(0, 0, 0, 1)]), Matrix.identity(1))
    e = basis_vector(1, 0)
    # L(e, e) = I(2e) - 2 I(e) = 4e - 2e = 2e, matching I(e) = e != 0
    assert square.evaluate(EvalContext(alg), (e, e)) == (F(2),)


def test_polarized_jordan_identity_zero_on_zero_product():
    ctx = EvalContext(plus_algebra(ex3(2)))  # the plus algebra has zero product
    for combo in [(0, 0, 0, 0), (0, 1, 2, 1), (2, 2, 1, 0)]:
        vecs = tuple(E3[i] for i in combo)
        assert is_zero(JORDAN_IDENTITY.evaluate(ctx, vecs))


def test_polarize_rejects_wrong_degree():
    with pytest.raises(HomogeneityError):
        polarize(Prod("main", Var(0), Var(0)), var=0, degree=3)
    with pytest.raises(HomogeneityError):
        polarize(Prod("main", Var(0), Var(1)), var=0, degree=2)


def test_polarized_slot_layout():
    assert MALCEV_IDENTITY.arity == 4
    assert MALCEV_IDENTITY.slot_vars == (0, 0, 1, 2)
    assert JORDAN_IDENTITY.arity == 4
    assert JORDAN_IDENTITY.slot_vars == (0, 0, 0, 1)


# ---------------------------------------------------------------------------
# basic checkers on the fixtures

def test_check_multilinear_on_zero_algebras():
    for n in (0, 1, 3):
        rep = check_multilinear(LEFT_ALTERNATIVE, zero_algebra(n))
        assert rep.passed and rep.checked == n ** 3


def test_check_hom_flexible():
    assert check_hom_flexible(zero_algebra(3)).passed
    assert check_hom_flexible(ex5(2, 3)).passed
    assert check_hom_flexible(ex3(2)).passed


def test_check_hom_alternative_fails_on_ex3():
    assert check_hom_alternative(zero_algebra(3)).passed
    rep = check_hom_alternative(ex3(2))
    assert not rep.passed
    # lexicographically first failing tuple of the left-alternative form
    assert rep.witness == (E3[0], E3[0], E3[1])
    assert rep.residual == (F(0), F(-8), F(0))
    rep = check_hom_alternative(ex3(F(5, 7)))
    assert not rep.passed
    assert rep.residual == (F(0), F(-50, 49), F(0))
    # the paper's non-alternativity certificate at (e2, e3, e3)
    lam = F(5, 7)
    assert hom_associator(ex3(lam), E3[1], E3[2], E3[2]) == (
        F(0), F(0), -1 / lam ** 2)


def test_fail_witness_reevaluates_exactly():
    rep = check_hom_alternative(ex3(2))
    sub = rep.subreports[0]
    assert sub.name == "left-alternative"
    ctx = EvalContext(ex3(2))
    assert LEFT_ALTERNATIVE.evaluate(ctx, sub.witness) == sub.residual


def test_check_hom_jordan():
    assert check_hom_jordan(zero_algebra(3)).passed
    assert check_hom_jordan(plus_algebra(ex3(2))).passed
    assert check_hom_jordan(plus_algebra(ex5(2, 3))).passed
    rep = check_hom_jordan(ex3(2))  # not commutative
    assert not rep.passed
    assert rep.subreports[0].name == "commutativity"


def test_check_hom_malcev():
    assert check_hom_malcev(zero_algebra(3)).passed
    assert check_hom_malcev(minus_algebra(ex5(2, 3))).passed
    assert check_hom_malcev(minus_algebra(ex3(2))).passed
    rep = check_hom_malcev(ex5(2, 3))  # not skewsymmetric
    assert not rep.passed and rep.subreports[0].name == "skewsymmetry"


def test_check_hom_leibniz():
    assert check_hom_leibniz(zero_jmp(3)).passed
    for alg in (ex3(2), ex5(2, 3)):
        rep = check_hom_leibniz(jmp_pair(alg))
        assert rep.passed
        assert rep.details["skew_form_matches"]


def test_leibniz_skew_equivalence_on_random_pairs():
    rng = random.Random(31)
    for _ in range(15):
        j = rand_jmp(rng, 3)
        rep = check_hom_leibniz(j)
        assert rep.details["skew_form_matches"]


def test_check_hom_jmp():
    assert check_hom_jmp(zero_jmp(4)).passed
    assert check_hom_jmp(jmp_pair(ex3(3))).passed


def test_check_hom_jmp_fails_on_random_bracket():
    rng = random.Random(6)
    jordan = Tensor3.zero(3)
    for _ in range(20):
        bracket = rand_skew_tensor(rng, 3)
        j = HomJMPAlgebra(bracket, jordan, Matrix.identity(3))
        rep = check_hom_jmp(j)
        if not rep.passed:
            malcev = rep.subreports[0]
            assert malcev.name == "bracket-hom-malcev"
            assert not malcev.passed
            assert malcev.witness is not None
            return
    pytest.fail("no random bracket failed the Malcev check")


def test_check_admissible_jmp():
    assert check_admissible_jmp(zero_algebra(3)).passed
    assert check_admissible_jmp(ex3(2)).passed
    assert check_admissible_jmp(ex5(2, 3)).passed


def test_admissible_implies_flexible():
    for alg in (ex3(2), ex3(3), ex5(2, 3), ex5(1, 1)):
        if check_admissible_jmp(alg).passed:
            assert check_hom_flexible(alg).passed


def test_flexible_iff_leibniz_for_pair():
    fixtures = [zero_algebra(3), ex3(2), ex5(2, 3)]
    rng = random.Random(13)
    fixtures += [rand_algebra(rng, 3) for _ in range(10)]
    for alg in fixtures:
        assert check_hom_flexible(alg).passed == check_hom_leibniz(jmp_pair(alg)).passed


def test_check_flexible_characterization():
    rep = check_flexible_characterization(zero_algebra(3))
    assert rep.passed and rep.details["matches_flexible"]
    rep = check_flexible_characterization(ex5(2, 3))
    assert rep.passed and rep.details["matches_flexible"]
    rng = random.Random(8)
    seen_failure = False
    for _ in range(10):
        alg = rand_algebra(rng, 3)
        rep = check_flexible_characterization(alg)
        assert rep.details["matches_flexible"]
        seen_failure = seen_failure or not rep.passed
    assert seen_failure


def test_check_condition_rl():
    assert check_condition_rl(zero_algebra(3)).passed
    rep = check_condition_rl(ex5(2, 3))
    assert rep.passed and rep.details["matches_admissible"]
    rep = check_condition_rl(ex3(2))
    assert rep.passed and rep.details["matches_admissible"]


def test_condition_rl_equivalence_on_fuzzed_instances():
    rng = random.Random(77)
    compared = 0
    for _ in range(15):
        alg = rand_algebra(rng, 2)
        rep = check_condition_rl(alg)
        if rep.details["matches_admissible"] is not None:
            assert rep.details["matches_admissible"]
            compared += 1
    # fixtures always qualify; fuzzed ones only when flexible + minus-Malcev
    for alg in (ex3(2), ex5(1, 1)):
        assert check_condition_rl(alg).details["matches_admissible"]


def test_check_power_hom_associative():
    assert check_power_hom_associative(zero_algebra(3)).passed
    assert check_power_hom_associative(ex3(2)).passed
    rep = check_power_hom_associative(ex5(2, 3), strict_34=False, max_power=6, samples=25)
    assert rep.passed
    with pytest.raises(ValueError):
        check_power_hom_associative(ex3(2), strict_34=False)
    with pytest.raises(ValueError):
        check_power_hom_associative(ex3(2), strict_34=False, max_power=1)


def test_check_map_properties():
    flat = ex3_flat()
    ident = Matrix.identity(3)
    flags = check_map_properties(flat, ident, form=BilinearForm(Matrix.identity(3)))
    assert flags.weak_morphism and flags.morphism and flags.automorphism
    assert flags.symmetric_wrt_form
    alpha = ex3(2).twist
    flags = check_map_properties(flat, alpha)
    assert flags.weak_morphism and flags.morphism and flags.automorphism
    th = theta_involution()
    flags = check_map_properties(flat, th)
    assert flags.automorphism
    assert (th @ th) == Matrix.identity(3)
    with pytest.raises(ValueError):
        check_map_properties(flat, Matrix.identity(4))


def test_map_properties_weak_vs_full():
    # a weak morphism of the twisted structure that does not commute with alpha
    rng = random.Random(99)
    a = ex3(2)
    flags = check_map_properties(a, a.twist)
    assert flags.morphism  # diagonal twists commute
    sigma = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    flags = check_map_properties(zero_algebra(3), sigma)
    assert flags.weak_morphism and flags.morphism  # zero products, identity twist
    flags = check_map_properties(ex3(2), rand_matrix(rng, 3))
    assert not flags.weak_morphism


# ---------------------------------------------------------------------------
# polarization soundness (sampled cross-check; the full sweep is in acceptance)

def test_polarized_verdict_matches_sampling_spot():
    rng = random.Random(41)
    non_jordan = HomAlgebra(rand_sym_tensor(rng, 3), Matrix.identity(3))
    cases = [
        (JORDAN_IDENTITY, plus_algebra(ex3(2)), True),
        (JORDAN_IDENTITY, non_jordan, False),
        (MALCEV_IDENTITY, minus_algebra(ex3(2)), True),
        (RL_CONDITION, ex3(2), True),
    ]
    for identity, alg, expected in cases:
        exact = check_multilinear(identity, alg).passed
        assert exact is expected
        assert sampled_verdict(identity, alg, samples=60, seed=5) is exact
