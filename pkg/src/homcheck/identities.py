"""Identity engine: expression trees, exact polarization, basis-tuple checks.

Multilinear identities are decided by evaluating them on all basis tuples
(multilinearity makes that sufficient). Identities that are non-linear in one
variable are first polarized: in characteristic 0 the inclusion-exclusion sum

    L(x_1,..,x_d; rest) = sum over nonempty S of {1..d} of
                          (-1)^(d-|S|) I(sum_{i in S} x_i; rest)

is multilinear and vanishes identically iff I does (L(x,..,x) = d! I(x)).
Every verdict is exact; sampling never decides a check, it only cross-checks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .algebra import (
    HomAlgebra,
    HomJMPAlgebra,
    jmp_pair,
    jmp_to_admissible,
    minus_algebra,
    plus_algebra,
    power_table,
)
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Tensor3,
    Vector,
    apply_product,
    basis_vector,
    is_zero,
    mat_apply,
    rank,
    vadd,
    vscale,
    vsub,
    zero_vector,
)

AnyAlgebra = Union[HomAlgebra, HomJMPAlgebra]

_PROBE_SEED = 0x5EED


# ---------------------------------------------------------------------------
# expression trees

@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Prod:
    which: str  # "main" | "bracket" | "jordan"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Twist:
    power: int
    child: "Expr"


@dataclass(frozen=True)
class Sum:
    children: tuple["Expr", ...]
    coeffs: tuple[Fraction, ...]


Expr = Union[Var, Prod, Twist, Sum]


def lincomb(*terms: tuple[object, Expr]) -> Sum:
    coeffs = tuple(Fraction(c) for c, _ in terms)
    children = tuple(e for _, e in terms)
    return Sum(children, coeffs)


def expr_arity(expr: Expr) -> int:
    if isinstance(expr, Var):
        return expr.index + 1
    if isinstance(expr, Prod):
        return max(expr_arity(expr.left), expr_arity(expr.right))
    if isinstance(expr, Twist):
        return expr_arity(expr.child)
    return max(expr_arity(c) for c in expr.children)


class EvalContext:
    """Evaluation backend for identity trees over a concrete algebra.

    A single-product algebra serves "bracket"/"jordan" as its commutator and
    anticommutator; a JMP algebra serves "main" as the induced admissible
    product x.y = 1/2 {x,y} + x o y.
    """

    __slots__ = ("dim", "twist", "_tensors")

    def __init__(self, algebra: AnyAlgebra):
        self.dim = algebra.dim
        self.twist = algebra.twist
        if isinstance(algebra, HomJMPAlgebra):
            self._tensors = {"bracket": algebra.bracket, "jordan": algebra.jordan,
                             "main": None, "_alg": algebra}
        else:
            self._tensors = {"main": algebra.mul, "bracket": None, "jordan": None,
                             "_alg": algebra}

    def tensor(self, which: str) -> Tensor3:
        t = self._tensors.get(which)
        if t is None:
            alg = self._tensors["_alg"]
            if which == "main":
                t = jmp_to_admissible(alg).mul
            elif which == "bracket":
                t = minus_algebra(alg).mul
            elif which == "jordan":
                t = plus_algebra(alg).mul
            else:
                raise KeyError(f"unknown product {which!r}")
            self._tensors[which] = t
        return t

    def twist_power(self, k: int) -> Matrix:
        return self.twist.power(k)


class _RandomContext:
    """Dense random tensors standing in for any algebra; used by the probes."""

    def __init__(self, dim: int, rng: random.Random):
        def rtensor():
            return Tensor3([[[Fraction(rng.randint(-3, 3)) for _ in range(dim)]
                             for _ in range(dim)] for _ in range(dim)])

        self.dim = dim
        self._tensors = {"main": rtensor(), "bracket": rtensor(), "jordan": rtensor()}
        self.twist = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(dim)]
                             for _ in range(dim)])

    def tensor(self, which: str) -> Tensor3:
        return self._tensors[which]

    def twist_power(self, k: int) -> Matrix:
        return self.twist.power(k)


def evaluate(expr: Expr, ctx, args: Sequence[Vector], _memo=None) -> Vector:
    """Evaluate an identity tree with args[i] substituted for variable i."""
    if _memo is None:
        _memo = {}
    key = id(expr)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if isinstance(expr, Var):
        val = args[expr.index]
    elif isinstance(expr, Prod):
        val = apply_product(ctx.tensor(expr.which),
                            evaluate(expr.left, ctx, args, _memo),
                            evaluate(expr.right, ctx, args, _memo))
    elif isinstance(expr, Twist):
        val = mat_apply(ctx.twist_power(expr.power), evaluate(expr.child, ctx, args, _memo))
    else:
        val = zero_vector(ctx.dim)
        for coeff, child in zip(expr.coeffs, expr.children):
            if coeff:
                val = vadd(val, vscale(coeff, evaluate(child, ctx, args, _memo)))
    _memo[key] = val
    return val


# ---------------------------------------------------------------------------
# polarization

class HomogeneityError(ValueError):
    """The expression is not homogeneous of the stated degree in the variable."""


class MultilinearIdentity:
    """A multilinear form obtained by polarizing one variable of an identity.

    Slot layout: the polarized variable is replaced in place by `degree` fresh
    slots, the remaining variables keep their relative order. Evaluation is
    linear in every slot (verified by a random probe at construction).
    """

    __slots__ = ("name", "source", "var", "degree", "nvars", "arity", "slot_vars",
                 "_subsets")

    def __init__(self, source: Expr, var: int, degree: int, name: str = "identity"):
        self.name = name
        self.source = source
        self.var = var
        self.degree = degree
        self.nvars = expr_arity(source)
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable {var} out of range for arity {self.nvars}")
        if degree < 1:
            raise ValueError("polarization degree must be >= 1")
        self.arity = self.nvars - 1 + degree
        # slot i of the multilinear form came from this original variable
        self.slot_vars = tuple(
            var if var <= s < var + degree else (s if s < var else s - degree + 1)
            for s in range(self.arity))
        sign_of = lambda size: ONE if (degree - size) % 2 == 0 else -ONE
        self._subsets = tuple(
            (tuple(i for i in range(degree) if mask >> i & 1),
             sign_of(bin(mask).count("1")))
            for mask in range(1, 1 << degree))
        self._verify_probes()

    def evaluate(self, ctx, vectors: Sequence[Vector]) -> Vector:
        polarized = vectors[self.var:self.var + self.degree]
        rest = list(vectors[:self.var]) + list(vectors[self.var + self.degree:])
        args = rest[:self.var] + [None] + rest[self.var:]
        acc = zero_vector(ctx.dim)
        for subset, sign in self._subsets:
            xsum = polarized[subset[0]]
            for i in subset[1:]:
                xsum = vadd(xsum, polarized[i])
            args[self.var] = xsum
            val = evaluate(self.source, ctx, args)
            acc = vadd(acc, val if sign == ONE else vscale(sign, val))
        return acc

    def _verify_probes(self) -> None:
        rng = random.Random(_PROBE_SEED)
        for dim in (2, 3):
            ctx = _RandomContext(dim, rng)
            rvec = lambda: tuple(Fraction(rng.randint(-4, 4)) for _ in range(dim))
            base = [rvec() for _ in range(self.nvars)]
            ref = evaluate(self.source, ctx, base)
            for t in (2, 3):
                scaled = list(base)
                scaled[self.var] = vscale(Fraction(t), base[self.var])
                got = evaluate(self.source, ctx, scaled)
                if got != vscale(Fraction(t) ** self.degree, ref):
                    raise HomogeneityError(
                        f"{self.name}: not homogeneous of stated degree "
                        f"{self.degree} in variable {self.var}")
            # linearity probe on every slot of the polarized form
            slots = [rvec() for _ in range(self.arity)]
            for s in range(self.arity):
                u, w = rvec(), rvec()
                a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
                combined = list(slots)
                combined[s] = vadd(vscale(a, u), vscale(b, w))
                left = self.evaluate(ctx, combined)
                with_u, with_w = list(slots), list(slots)
                with_u[s], with_w[s] = u, w
                right = vadd(vscale(a, self.evaluate(ctx, with_u)),
                             vscale(b, self.evaluate(ctx, with_w)))
                if left != right:
                    raise HomogeneityError(
                        f"{self.name}: polarized form is not linear in slot {s}")


def polarize(source: Expr, var: int, degree: int, name: str = "identity") -> MultilinearIdentity:
    """Polarize `source` in variable `var`, homogeneous of the given degree."""
    return MultilinearIdentity(source, var, degree, name)


# ---------------------------------------------------------------------------
# reports

@dataclass
class CheckReport:
    """Outcome of one identity check: verdict, first witness, tuples checked."""

    name: str
    passed: bool
    checked: int
    witness: tuple[Vector, ...] | None = None
    residual: Vector | None = None
    subreports: tuple["CheckReport", ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_doc(self) -> dict:
        doc: dict = {"identity": self.name, "verdict": self.verdict, "checked": self.checked}
        if self.witness is not None:
            doc["witness"] = [[str(c) for c in v] for v in self.witness]
            doc["residual"] = [str(c) for c in self.residual]
        if self.subreports:
            doc["subchecks"] = [s.to_doc() for s in self.subreports]
        if self.details:
            doc["details"] = {k: v for k, v in sorted(self.details.items())}
        return doc


def check_multilinear(identity: MultilinearIdentity, algebra: AnyAlgebra,
                      name: str | None = None) -> CheckReport:
    """Evaluate a multilinear identity on every basis tuple of the algebra.

    The first failing tuple in lexicographic enumeration order becomes the
    witness; enumeration stops there.
    """
    ctx = EvalContext(algebra)
    return _check_on_basis(identity, ctx, name or identity.name)


def _check_on_basis(identity: MultilinearIdentity, ctx, name: str) -> CheckReport:
    n = ctx.dim
    basis = [basis_vector(n, i) for i in range(n)]
    checked = 0
    for combo in itertools.product(basis, repeat=identity.arity):
        checked += 1
        residual = identity.evaluate(ctx, combo)
        if not is_zero(residual):
            return CheckReport(name=name, passed=False, checked=checked,
                               witness=tuple(combo), residual=residual)
    return CheckReport(name=name, passed=True, checked=checked)


def _conjunction(name: str, parts: Sequence[CheckReport], **details) -> CheckReport:
    failed = next((p for p in parts if not p.passed), None)
    return CheckReport(
        name=name,
        passed=failed is None,
        checked=sum(p.checked for p in parts),
        witness=None if failed is None else failed.witness,
        residual=None if failed is None else failed.residual,
        subreports=tuple(parts),
        details=dict(details),
    )


# ---------------------------------------------------------------------------
# identity trees used by the checkers

def _associator(which: str, x: Expr, y: Expr, z: Expr) -> Expr:
    return lincomb(
        (1, Prod(which, Prod(which, x, y), Twist(1, z))),
        (-1, Prod(which, Twist(1, x), Prod(which, y, z))))


def _jacobiator(which: str, x: Expr, y: Expr, z: Expr) -> Expr:
    return lincomb(
        (1, Prod(which, Prod(which, x, y), Twist(1, z))),
        (1, Prod(which, Prod(which, y, z), Twist(1, x))),
        (1, Prod(which, Prod(which, z, x), Twist(1, y))))


_X, _Y, _Z = Var(0), Var(1), Var(2)

COMMUTATIVITY = polarize(
    lincomb((1, Prod("main", _X, _Y)), (-1, Prod("main", _Y, _X))),
    var=0, degree=1, name="commutativity")

SKEWSYMMETRY = polarize(
    lincomb((1, Prod("main", _X, _Y)), (1, Prod("main", _Y, _X))),
    var=0, degree=1, name="skewsymmetry")

FLEXIBLE = polarize(
    lincomb((1, _associator("main", _X, _Y, _Z)), (1, _associator("main", _Z, _Y, _X))),
    var=0, degree=1, name="hom-flexible")

LEFT_ALTERNATIVE = polarize(
    lincomb((1, _associator("main", _X, _Y, _Z)), (1, _associator("main", _Y, _X, _Z))),
    var=0, degree=1, name="left-alternative")

RIGHT_ALTERNATIVE = polarize(
    lincomb((1, _associator("main", _X, _Y, _Z)), (1, _associator("main", _X, _Z, _Y))),
    var=0, degree=1, name="right-alternative")

# as(x^2, a(y), a(x)) = 0, cubic in x
_JORDAN_CORE = _associator("main", Prod("main", _X, _X), Twist(1, _Y), Twist(1, _X))
JORDAN_IDENTITY = polarize(_JORDAN_CORE, var=0, degree=3, name="hom-jordan-identity")

# J(a(x), a(y), [x,z]) - [J(x,y,z), a^2(x)] = 0, quadratic in x
_MALCEV_CORE = lincomb(
    (1, _jacobiator("main", Twist(1, _X), Twist(1, _Y), Prod("main", _X, _Z))),
    (-1, Prod("main", _jacobiator("main", _X, _Y, _Z), Twist(2, _X))))
MALCEV_IDENTITY = polarize(_MALCEV_CORE, var=0, degree=2, name="hom-malcev-identity")

# {a(x), y o z} = {x,y} o a(z) + a(y) o {x,z}
LEIBNIZ = polarize(
    lincomb(
        (1, Prod("bracket", Twist(1, _X), Prod("jordan", _Y, _Z))),
        (-1, Prod("jordan", Prod("bracket", _X, _Y), Twist(1, _Z))),
        (-1, Prod("jordan", Twist(1, _Y), Prod("bracket", _X, _Z)))),
    var=0, degree=1, name="hom-leibniz")

# skew-equivalent form: {x o y, a(z)} = {x,z} o a(y) + a(x) o {y,z}
LEIBNIZ_SKEW = polarize(
    lincomb(
        (1, Prod("bracket", Prod("jordan", _X, _Y), Twist(1, _Z))),
        (-1, Prod("jordan", Prod("bracket", _X, _Z), Twist(1, _Y))),
        (-1, Prod("jordan", Twist(1, _X), Prod("bracket", _Y, _Z)))),
    var=0, degree=1, name="hom-leibniz-skew")

# as(x,y,z) = 1/4 J_minus(x,y,z) + 1/4 [a(y),[z,x]] + as_plus(x,y,z)
FLEXIBLE_CHARACTERIZATION = polarize(
    lincomb(
        (1, _associator("main", _X, _Y, _Z)),
        (Fraction(-1, 4), _jacobiator("bracket", _X, _Y, _Z)),
        (Fraction(-1, 4), Prod("bracket", Twist(1, _Y), Prod("bracket", _Z, _X))),
        (-1, _associator("jordan", _X, _Y, _Z))),
    var=0, degree=1, name="flexible-characterization")

# (x^2 . a(y)) . a^2(x) = a(x^2) . (a(y) . a(x)), cubic in x
_XSQ = Prod("main", _X, _X)
RL_CONDITION = polarize(
    lincomb(
        (1, Prod("main", Prod("main", _XSQ, Twist(1, _Y)), Twist(2, _X))),
        (-1, Prod("main", Twist(1, _XSQ), Prod("main", Twist(1, _Y), Twist(1, _X))))),
    var=0, degree=3, name="rl-condition")

HOM_ASSOCIATIVITY = polarize(
    lincomb((1, Prod("main", Prod("main", _X, _Y), Twist(1, _Z))),
            (-1, Prod("main", Twist(1, _X), Prod("main", _Y, _Z)))),
    var=0, degree=1, name="hom-associativity")

# x^2 . a(x) = a(x) . x^2, cubic
THIRD_POWER = polarize(
    lincomb(
        (1, Prod("main", _XSQ, Twist(1, _X))),
        (-1, Prod("main", Twist(1, _X), _XSQ))),
    var=0, degree=3, name="third-power")

# (x^2 . a(x)) . a^2(x) = a(x^2) . a(x^2), quartic
_AX2 = Twist(1, _XSQ)
FOURTH_POWER = polarize(
    lincomb(
        (1, Prod("main", Prod("main", _XSQ, Twist(1, _X)), Twist(2, _X))),
        (-1, Prod("main", _AX2, _AX2))),
    var=0, degree=4, name="fourth-power")


# ---------------------------------------------------------------------------
# checkers

def check_hom_flexible(a: HomAlgebra) -> CheckReport:
    """as(x,y,z) + as(z,y,x) = 0 on all basis triples."""
    return check_multilinear(FLEXIBLE, a)


def check_hom_alternative(a: HomAlgebra) -> CheckReport:
    """Both linearized alternativity forms on all basis triples."""
    parts = [check_multilinear(LEFT_ALTERNATIVE, a),
             check_multilinear(RIGHT_ALTERNATIVE, a)]
    return _conjunction("hom-alternative", parts)


def check_hom_jordan(a: HomAlgebra) -> CheckReport:
    """Commutativity, then the polarized Hom-Jordan identity on all basis tuples."""
    comm = check_multilinear(COMMUTATIVITY, a)
    if not comm.passed:
        return _conjunction("hom-jordan", [comm])
    core = check_multilinear(JORDAN_IDENTITY, a)
    return _conjunction("hom-jordan", [comm, core])


def check_hom_malcev(a: HomAlgebra) -> CheckReport:
    """Skewsymmetry, then the polarized Hom-Malcev identity on all basis tuples."""
    skew = check_multilinear(SKEWSYMMETRY, a)
    if not skew.passed:
        return _conjunction("hom-malcev", [skew])
    core = check_multilinear(MALCEV_IDENTITY, a)
    return _conjunction("hom-malcev", [skew, core])


def check_hom_leibniz(j: HomJMPAlgebra) -> CheckReport:
    """Hom-Leibniz identity; also cross-checks its skew-equivalent form."""
    main = check_multilinear(LEIBNIZ, j)
    skew = check_multilinear(LEIBNIZ_SKEW, j)
    return CheckReport(
        name="hom-leibniz", passed=main.passed, checked=main.checked + skew.checked,
        witness=main.witness, residual=main.residual, subreports=(main, skew),
        details={"skew_form_verdict": skew.verdict,
                 "skew_form_matches": main.passed == skew.passed})


def check_hom_jmp(j: HomJMPAlgebra) -> CheckReport:
    """Hom-Malcev bracket + Hom-Jordan product + Hom-Leibniz compatibility."""
    malcev = check_hom_malcev(HomAlgebra(j.bracket, j.twist))
    malcev.name = "bracket-hom-malcev"
    jordan = check_hom_jordan(HomAlgebra(j.jordan, j.twist))
    jordan.name = "jordan-hom-jordan"
    leibniz = check_hom_leibniz(j)
    return _conjunction("hom-jmp", [malcev, jordan, leibniz])


def check_admissible_jmp(a: HomAlgebra) -> CheckReport:
    """The (commutator, anticommutator) pair forms a Hom-JMP algebra."""
    report = check_hom_jmp(jmp_pair(a))
    report.name = "admissible-hom-jmp"
    return report


def check_flexible_characterization(a: HomAlgebra) -> CheckReport:
    """Four-term flexibility characterization; must agree with check_hom_flexible."""
    report = check_multilinear(FLEXIBLE_CHARACTERIZATION, a)
    flexible = check_hom_flexible(a)
    report.details["flexible_verdict"] = flexible.verdict
    report.details["matches_flexible"] = report.passed == flexible.passed
    return report


def check_condition_rl(a: HomAlgebra) -> CheckReport:
    """Polarized R/L multiplication-operator condition on all basis tuples.

    For algebras that are Hom-flexible with Hom-Malcev commutator, the verdict
    must coincide with check_admissible_jmp; the cross-check is recorded in the
    report details.
    """
    report = check_multilinear(RL_CONDITION, a)
    flexible = check_hom_flexible(a)
    malcev_minus = check_hom_malcev(minus_algebra(a))
    report.details["flexible_verdict"] = flexible.verdict
    report.details["minus_malcev_verdict"] = malcev_minus.verdict
    if flexible.passed and malcev_minus.passed:
        admissible = check_admissible_jmp(a)
        report.details["admissible_verdict"] = admissible.verdict
        report.details["matches_admissible"] = report.passed == admissible.passed
    else:
        report.details["matches_admissible"] = None
    return report


def check_power_hom_associative(a: HomAlgebra, strict_34: bool = True,
                                max_power: int | None = None,
                                samples: int = 100, seed: int = 0) -> CheckReport:
    """Power Hom-associativity.

    Strict mode polarizes the third/fourth-power identities and decides them on
    all basis tuples. Sampled mode verifies the n-th power identity
    x^n = a^(n-i-1)(x^i) . a^(i-1)(x^(n-i)) for all n <= max_power on seeded
    random rational vectors (a diagnostic, not a decision procedure).
    """
    if strict_34:
        parts = [check_multilinear(THIRD_POWER, a), check_multilinear(FOURTH_POWER, a)]
        return _conjunction("power-hom-associative-34", parts)
    if max_power is None or max_power < 2:
        raise ValueError("sampled power check needs max_power >= 2")
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        x = random_vector(rng, a.dim)
        table = power_table(a, x, max_power).entries
        for n in range(2, max_power + 1):
            for i in range(1, n):
                checked += 1
                lhs = table[n - 1]
                rhs = a.product(a.twisted(table[i - 1], n - i - 1),
                                a.twisted(table[n - i - 1], i - 1))
                diff = vsub(lhs, rhs)
                if not is_zero(diff):
                    return CheckReport(
                        name="power-hom-associative-sampled", passed=False,
                        checked=checked, witness=(x,), residual=diff,
                        details={"n": n, "i": i, "max_power": max_power, "seed": seed})
    return CheckReport(name="power-hom-associative-sampled", passed=True, checked=checked,
                       details={"max_power": max_power, "samples": samples, "seed": seed})


@dataclass(frozen=True)
class MapFlags:
    """Structure-preservation flags of a linear map against an algebra."""

    weak_morphism: bool
    morphism: bool
    automorphism: bool
    symmetric_wrt_form: bool | None = None

    def to_doc(self) -> dict:
        doc = {"weak_morphism": self.weak_morphism, "morphism": self.morphism,
               "automorphism": self.automorphism}
        if self.symmetric_wrt_form is not None:
            doc["symmetric_wrt_form"] = self.symmetric_wrt_form
        return doc


def check_map_properties(algebra: AnyAlgebra, m: Matrix, form=None) -> MapFlags:
    """Weak morphism / morphism / automorphism flags, plus symmetry w.r.t. a form."""
    n = algebra.dim
    if m.rows != m.cols or m.rows != n:
        raise ValueError(f"map must be {n}x{n}, got {m.rows}x{m.cols}")
    if isinstance(algebra, HomJMPAlgebra):
        tensors = {"bracket": algebra.bracket, "jordan": algebra.jordan}
    else:
        tensors = {"mul": algebra.mul}
    cols = [m.column(j) for j in range(n)]
    weak = all(
        mat_apply(m, t.row(i, j)) == apply_product(t, cols[i], cols[j])
        for t in tensors.values() for i in range(n) for j in range(n))
    morphism = weak and (m @ algebra.twist) == (algebra.twist @ m)
    automorphism = morphism and rank(m) == n
    symmetric = None
    if form is not None:
        fm = getattr(form, "matrix", form)
        symmetric = (m.transpose() @ fm) == (fm @ m)
    return MapFlags(weak_morphism=weak, morphism=morphism, automorphism=automorphism,
                    symmetric_wrt_form=symmetric)


# ---------------------------------------------------------------------------
# random sampling helpers (diagnostics and probes; never decide a verdict)

def random_vector(rng: random.Random, n: int, span: int = 5) -> Vector:
    return tuple(Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(n))


def sampled_verdict(identity: MultilinearIdentity, algebra: AnyAlgebra,
                    samples: int, seed: int) -> bool:
    """Evaluate the unpolarized source identity on random inputs.

    True iff the residual vanished on every sample; used to cross-check the
    exact basis-tuple verdict of the polarized form.
    """
    ctx = EvalContext(algebra)
    rng = random.Random(seed)
    for _ in range(samples):
        args = [random_vector(rng, ctx.dim) for _ in range(identity.nvars)]
        if not is_zero(evaluate(identity.source, ctx, args)):
            return False
    return True
