"""Hom-Lie triple systems and their Jordan-compatible extensions."""

from __future__ import annotations

import itertools

from .algebra import HomAlgebra, HomJMPAlgebra
from .identities import (
    HOM_ASSOCIATIVITY,
    CheckReport,
    _conjunction,
    check_hom_jordan,
    check_hom_jmp,
    check_hom_malcev,
    check_multilinear,
)
from .linalg import (
    DimensionMismatch,
    Matrix,
    Tensor3,
    Tensor4,
    Vector,
    apply_product,
    apply_triple,
    basis_vector,
    is_zero,
    mat_apply,
    vadd,
    vscale,
    vsub,
)


class HomTripleSystem:
    """Ternary bracket with one twisting map (the multiplicative case).

    Only systems whose two twisting maps coincide are supported; passing a
    distinct second map is rejected with a clear error.
    """

    __slots__ = ("dim", "triple", "twist")

    def __init__(self, triple: Tensor4, twist: Matrix, twist2: Matrix | None = None):
        if twist2 is not None and twist2 != twist:
            raise ValueError(
                "triple systems with two distinct twisting maps are not supported; "
                "only the multiplicative case alpha1 = alpha2 is implemented")
        if twist.rows != twist.cols or twist.rows != triple.dim:
            raise DimensionMismatch("twist shape does not match the triple tensor")
        self.dim = triple.dim
        self.triple = triple
        self.twist = twist

    def bracket3(self, u: Vector, v: Vector, w: Vector) -> Vector:
        return apply_triple(self.triple, u, v, w)

    def twisted(self, v: Vector, k: int = 1) -> Vector:
        return mat_apply(self.twist.power(k), v)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomTripleSystem)
                and self.triple == other.triple and self.twist == other.twist)


class HLJPSystem:
    """Hom-Lie triple system together with a compatible symmetric product."""

    __slots__ = ("dim", "triple_system", "jordan", "twist")

    def __init__(self, triple_system: HomTripleSystem, jordan: Tensor3):
        if jordan.dim != triple_system.dim:
            raise DimensionMismatch("jordan tensor dimension does not match the system")
        if not jordan.is_symmetric():
            raise ValueError("jordan tensor must be symmetric")
        self.dim = triple_system.dim
        self.triple_system = triple_system
        self.jordan = jordan
        self.twist = triple_system.twist

    @property
    def triple(self) -> Tensor4:
        return self.triple_system.triple

    def __eq__(self, other) -> bool:
        return (isinstance(other, HLJPSystem)
                and self.triple_system == other.triple_system
                and self.jordan == other.jordan)


# ---------------------------------------------------------------------------
# constructions

def triple_bracket_formula(m: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """{x,y,z} = 2{{x,y},a(z)} - {{y,z},a(x)} - {{z,x},a(y)} for a bracket algebra."""
    t1 = m.product(m.product(x, y), m.twisted(z))
    t2 = m.product(m.product(y, z), m.twisted(x))
    t3 = m.product(m.product(z, x), m.twisted(y))
    return vsub(vsub(vscale(2, t1), t2), t3)


def triple_from_malcev(m: HomAlgebra) -> HomTripleSystem:
    """Ternary bracket of a Hom-Malcev algebra, with twist alpha^2."""
    verdict = check_hom_malcev(m)
    if not verdict.passed:
        raise ValueError("input does not pass the Hom-Malcev check")
    n = m.dim
    basis = [basis_vector(n, i) for i in range(n)]
    box = [[[triple_bracket_formula(m, basis[i], basis[j], basis[k])
             for k in range(n)] for j in range(n)] for i in range(n)]
    return HomTripleSystem(Tensor4(box), m.twist.power(2))


def hljp_from_homjmp(j: HomJMPAlgebra) -> HLJPSystem:
    """Derived system of a Hom-JMP algebra: ternary bracket + conjugated jordan product."""
    verdict = check_hom_jmp(j)
    if not verdict.passed:
        raise ValueError("input does not pass the Hom-JMP suite")
    system = triple_from_malcev(HomAlgebra(j.bracket, j.twist))
    n = j.dim
    cols = [j.twist.column(i) for i in range(n)]
    jordan = Tensor3([[apply_product(j.jordan, cols[i], cols[k]) for k in range(n)]
                      for i in range(n)])
    return HLJPSystem(system, jordan)


# ---------------------------------------------------------------------------
# axiom checks

def check_hlts_axioms(t: HomTripleSystem) -> CheckReport:
    """Left skewsymmetry, ternary Jacobi, multiplicativity, fundamental identity."""
    n = t.dim
    basis = [basis_vector(n, i) for i in range(n)]
    parts = [
        _ternary_scan(t, basis, "left-skewsymmetry",
                      lambda tt, i, j, k: vadd(tt.row(i, j, k), tt.row(j, i, k))),
        _ternary_scan(t, basis, "ternary-jacobi",
                      lambda tt, i, j, k: vadd(vadd(tt.row(i, j, k), tt.row(j, k, i)),
                                               tt.row(k, i, j))),
        _multiplicativity_scan(t, basis),
        _fundamental_scan(t, basis),
    ]
    return _conjunction("hom-lie-triple-system", parts)


def _ternary_scan(t: HomTripleSystem, basis, name, residual_of) -> CheckReport:
    n = t.dim
    checked = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                checked += 1
                res = residual_of(t.triple, i, j, k)
                if not is_zero(res):
                    return CheckReport(name=name, passed=False, checked=checked,
                                       witness=(basis[i], basis[j], basis[k]), residual=res)
    return CheckReport(name=name, passed=True, checked=checked)


def _multiplicativity_scan(t: HomTripleSystem, basis) -> CheckReport:
    n = t.dim
    cols = [t.twist.column(i) for i in range(n)]
    checked = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                checked += 1
                lhs = mat_apply(t.twist, t.triple.row(i, j, k))
                rhs = apply_triple(t.triple, cols[i], cols[j], cols[k])
                diff = vsub(lhs, rhs)
                if not is_zero(diff):
                    return CheckReport(name="multiplicativity", passed=False, checked=checked,
                                       witness=(basis[i], basis[j], basis[k]), residual=diff)
    return CheckReport(name="multiplicativity", passed=True, checked=checked)


def _fundamental_scan(t: HomTripleSystem, basis) -> CheckReport:
    """[a(x),a(y),[u,v,w]] = [[x,y,u],a(v),a(w)] + [a(u),[x,y,v],a(w)] + [a(u),a(v),[x,y,w]]."""
    n = t.dim
    t4 = t.triple
    cols = [t.twist.column(i) for i in range(n)]
    checked = 0
    for x, y, u, v, w in itertools.product(range(n), repeat=5):
        inner_xyu = t4.row(x, y, u)
        inner_xyv = t4.row(x, y, v)
        for wdx in range(n):
            checked += 1
            lhs = apply_triple(t4, cols[x], cols[y], t4.row(u, v, wdx))
            rhs = apply_triple(t4, inner_xyu, cols[v], cols[wdx])
            rhs = vadd(rhs, apply_triple(t4, cols[u], inner_xyv, cols[wdx]))
            rhs = vadd(rhs, apply_triple(t4, cols[u], cols[v], t4.row(x, y, wdx)))
            diff = vsub(lhs, rhs)
            if not is_zero(diff):
                return CheckReport(
                    name="fundamental-identity", passed=False, checked=checked,
                    witness=(basis[x], basis[y], basis[u], basis[v], basis[wdx]),
                    residual=diff)
    return CheckReport(name="fundamental-identity", passed=True, checked=checked)


def check_hljp(s: HLJPSystem) -> CheckReport:
    """Jordan axiom + triple-system axioms + the ternary Leibniz compatibility.

    When the jordan product is additionally Hom-associative (so the system is
    of Poisson type), the classification is recorded in the report details.
    """
    jordan_alg = HomAlgebra(s.jordan, s.twist)
    jordan = check_hom_jordan(jordan_alg)
    jordan.name = "jordan-hom-jordan"
    hlts = check_hlts_axioms(s.triple_system)
    compat = _ternary_leibniz_scan(s)
    report = _conjunction("hom-lie-jordan-poisson", [jordan, hlts, compat])
    if report.passed:
        # commutative + Hom-associative jordan part means Poisson type
        report.details["hom_lie_poisson"] = check_multilinear(
            HOM_ASSOCIATIVITY, jordan_alg).passed
    return report


def _ternary_leibniz_scan(s: HLJPSystem) -> CheckReport:
    """{a(x),a(y),z o t} = {x,y,z} o a(t) + a(z) o {x,y,t} on all basis 4-tuples."""
    n = s.dim
    t4 = s.triple
    basis = [basis_vector(n, i) for i in range(n)]
    cols = [s.twist.column(i) for i in range(n)]
    checked = 0
    for x in range(n):
        for y in range(n):
            rows_xy = t4.entries[x][y]
            for z in range(n):
                for t in range(n):
                    checked += 1
                    lhs = apply_triple(t4, cols[x], cols[y], s.jordan.row(z, t))
                    rhs = apply_product(s.jordan, rows_xy[z], cols[t])
                    rhs = vadd(rhs, apply_product(s.jordan, cols[z], rows_xy[t]))
                    diff = vsub(lhs, rhs)
                    if not is_zero(diff):
                        return CheckReport(
                            name="ternary-leibniz", passed=False, checked=checked,
                            witness=(basis[x], basis[y], basis[z], basis[t]), residual=diff)
    return CheckReport(name="ternary-leibniz", passed=True, checked=checked)
