"""Bilinear-form checks: symmetry, non-degeneracy, invariance, twist compatibility."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import HomAlgebra, HomJMPAlgebra
from .identities import AnyAlgebra, CheckReport, check_hom_jmp, check_map_properties
from .linalg import (
    DimensionMismatch,
    Matrix,
    Vector,
    basis_vector,
    mat_apply,
    rank,
)


class BilinearForm:
    """Bilinear form on the fixed basis: B(e_i, e_j) = matrix[i][j]."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix: Matrix):
        if matrix.rows != matrix.cols:
            raise DimensionMismatch("bilinear form matrix must be square")
        self.dim = matrix.rows
        self.matrix = matrix

    def value(self, u: Vector, v: Vector):
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("form dimension mismatch")
        total = 0
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.matrix.entries[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    total += ui * row[j] * vj
        return total

    def scaled(self, c) -> "BilinearForm":
        return BilinearForm(Matrix([[c * x for x in row] for row in self.matrix.entries]))

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearForm) and self.matrix == other.matrix


@dataclass(frozen=True)
class FormFlags:
    """Property flags of a bilinear form against an algebra."""

    symmetric: bool
    nondegenerate: bool
    invariant: dict  # product name -> bool
    alpha_compatible: bool
    gamma_invariant: bool | None = None

    @property
    def all_invariant(self) -> bool:
        return all(self.invariant.values())

    def to_doc(self) -> dict:
        doc = {"symmetric": self.symmetric, "nondegenerate": self.nondegenerate,
               "invariant": dict(sorted(self.invariant.items())),
               "alpha_compatible": self.alpha_compatible}
        if self.gamma_invariant is not None:
            doc["gamma_invariant"] = self.gamma_invariant
        return doc


def _products(algebra: AnyAlgebra) -> dict:
    if isinstance(algebra, HomJMPAlgebra):
        return {"bracket": algebra.bracket, "jordan": algebra.jordan}
    return {"mul": algebra.mul}


def check_form_properties(algebra: AnyAlgebra, b: BilinearForm,
                          gamma: Matrix | None = None) -> FormFlags:
    """Symmetry, exact rank, per-product invariance and twist compatibility of B.

    With `gamma` given, additionally checks the twisted invariance conditions
    B(p(x,y), gamma(z)) = B(gamma(x), p(y,z)) for every product p; gamma must
    preserve the products (weak morphism) or a ValueError is raised.
    """
    n = algebra.dim
    if b.dim != n:
        raise DimensionMismatch(f"form has dim {b.dim}, algebra has dim {n}")
    bm = b.matrix
    symmetric = bm == bm.transpose()
    nondegenerate = rank(bm) == n
    basis = [basis_vector(n, i) for i in range(n)]
    invariant = {}
    for pname, tensor in _products(algebra).items():
        invariant[pname] = all(
            b.value(tensor.row(i, j), basis[k]) == b.value(basis[i], tensor.row(j, k))
            for i in range(n) for j in range(n) for k in range(n))
    alpha = algebra.twist
    alpha_compatible = (alpha.transpose() @ bm) == (bm @ alpha)
    gamma_invariant = None
    if gamma is not None:
        flags = check_map_properties(algebra, gamma)
        if not flags.weak_morphism:
            raise ValueError("gamma must be a homomorphism (preserve every product)")
        gcols = [gamma.column(j) for j in range(n)]
        gamma_invariant = all(
            b.value(tensor.row(i, j), gcols[k]) == b.value(gcols[i], tensor.row(j, k))
            for tensor in _products(algebra).values()
            for i in range(n) for j in range(n) for k in range(n))
    return FormFlags(symmetric=symmetric, nondegenerate=nondegenerate,
                     invariant=invariant, alpha_compatible=alpha_compatible,
                     gamma_invariant=gamma_invariant)


def check_pseudo_euclidean_homjmp(j: HomJMPAlgebra, b: BilinearForm) -> CheckReport:
    """B is symmetric, non-degenerate, invariant for both products, twist-compatible."""
    flags = check_form_properties(j, b)
    n = j.dim
    passed = (flags.symmetric and flags.nondegenerate and flags.all_invariant
              and flags.alpha_compatible)
    return CheckReport(name="pseudo-euclidean-form", passed=passed,
                       checked=2 * n ** 3 + 2 * n ** 2,
                       details=flags.to_doc())


def pseudo_euclidean_jmp_suite(j: HomJMPAlgebra, b: BilinearForm) -> CheckReport:
    """Full pseudo-Euclidean Hom-JMP suite: algebra identities plus form properties."""
    jmp = check_hom_jmp(j)
    form = check_pseudo_euclidean_homjmp(j, b)
    passed = jmp.passed and form.passed
    return CheckReport(name="pseudo-euclidean-hom-jmp", passed=passed,
                       checked=jmp.checked + form.checked, subreports=(jmp, form))


def check_triple_invariance(system, b: BilinearForm,
                            gamma: Matrix | None = None) -> CheckReport:
    """(Gamma-)invariance of B under the triple bracket, on all basis 4-tuples.

    Plain invariance is B({x,y,z},t) = -B(z,{x,y,t}); with gamma the right
    slots are twisted: B({x,y,z},gamma(t)) = -B(gamma(z),{x,y,t}). Twist
    compatibility B(alpha(x),y) = B(x,alpha(y)) is checked as well.
    """
    t4 = system.triple
    n = t4.dim
    if b.dim != n:
        raise DimensionMismatch(f"form has dim {b.dim}, system has dim {n}")
    basis = [basis_vector(n, i) for i in range(n)]
    if gamma is None:
        gcols = basis
    else:
        gcols = [gamma.column(j) for j in range(n)]
    checked = 0
    witness = None
    residual = None
    for i in range(n):
        for jj in range(n):
            for k in range(n):
                row = t4.row(i, jj, k)
                for l in range(n):
                    checked += 1
                    lhs = b.value(row, gcols[l])
                    rhs = -b.value(gcols[k], t4.row(i, jj, l))
                    if lhs != rhs:
                        witness = (basis[i], basis[jj], basis[k], basis[l])
                        residual = (Fraction(lhs - rhs),)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    alpha = system.twist
    alpha_compatible = (alpha.transpose() @ b.matrix) == (b.matrix @ alpha)
    passed = witness is None and alpha_compatible
    return CheckReport(name="triple-form-invariance", passed=passed, checked=checked,
                       witness=witness, residual=residual,
                       details={"alpha_compatible": alpha_compatible,
                                "twisted_by_gamma": gamma is not None})
