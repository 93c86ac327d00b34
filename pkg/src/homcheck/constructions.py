"""Algebra-producing constructions: twists, A_n families, T*-extensions, centers.

Two twist conventions coexist in the source material and both are implemented:
`yau_twist` composes every product with the map (beta o product), while
`twisted_pseudo_euclidean` conjugates the arguments (product of alpha-images).
For a map that is a morphism of the products the two coincide; tests assert
that rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import HomAlgebra, HomJMPAlgebra
from .forms import BilinearForm, pseudo_euclidean_jmp_suite
from .identities import AnyAlgebra, check_hom_jmp, check_map_properties
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Tensor3,
    Vector,
    apply_product,
    basis_vector,
    is_zero,
    kernel_basis,
    mat_apply,
)


def yau_twist(algebra: AnyAlgebra, beta: Matrix, require: str = "weak") -> AnyAlgebra:
    """Composition twist: every product becomes beta o product, twist becomes beta o alpha.

    `require` is "weak" (beta must preserve the products) or "full" (beta must
    additionally commute with the twist map).
    """
    if require not in ("weak", "full"):
        raise ValueError(f"require must be 'weak' or 'full', got {require!r}")
    flags = check_map_properties(algebra, beta)
    if require == "weak" and not flags.weak_morphism:
        raise ValueError("twisting map is not a weak morphism of the products")
    if require == "full" and not flags.morphism:
        raise ValueError("twisting map is not a morphism (products + twist)")
    compose = lambda row: mat_apply(beta, row)
    new_twist = beta @ algebra.twist
    if isinstance(algebra, HomJMPAlgebra):
        return HomJMPAlgebra(algebra.bracket.map_rows(compose),
                             algebra.jordan.map_rows(compose), new_twist)
    return HomAlgebra(algebra.mul.map_rows(compose), new_twist)


def an_family(j: HomJMPAlgebra, b: BilinearForm, n: int) -> tuple[HomJMPAlgebra, BilinearForm]:
    """A_n member: products composed with alpha^n, twist alpha^(n+1), B_n = B(alpha^n ., .)."""
    if n < 0:
        raise ValueError("family index must be >= 0")
    suite = pseudo_euclidean_jmp_suite(j, b)
    if not suite.passed:
        raise ValueError("input does not pass the pseudo-Euclidean Hom-JMP suite")
    pw = j.twist.power(n)
    compose = lambda row: mat_apply(pw, row)
    twisted = HomJMPAlgebra(j.bracket.map_rows(compose), j.jordan.map_rows(compose),
                            j.twist.power(n + 1))
    return twisted, BilinearForm(pw.transpose() @ b.matrix)


# ---------------------------------------------------------------------------
# T*-extension

@dataclass(frozen=True)
class TStarExtension:
    """P = A + A* with the hyperbolic pairing B(x+f, y+g) = f(y) + g(x).

    Result basis order: (e_1..e_n, e^1..e^n); the form matrix has identity
    blocks off-diagonal and zero blocks on-diagonal.
    """

    base: HomJMPAlgebra
    result: HomJMPAlgebra
    form: BilinearForm


def t_star_extension(base: HomJMPAlgebra) -> TStarExtension:
    """T*-extension of an untwisted JMP algebra by its dual space.

    The bracket acts on duals by (plus/minus) the transposed adjoint action,
    the jordan product by the transposed left multiplication; duals multiply
    to zero.
    """
    n = base.dim
    if not base.twist.is_identity():
        raise ValueError("T*-extension needs an untwisted base (twist = identity)")
    jmp = check_hom_jmp(base)
    if not jmp.passed:
        raise ValueError(f"base is not a JMP algebra ({jmp.subreports[0].name} side fails)"
                         if jmp.subreports else "base is not a JMP algebra")
    cm = base.bracket.entries
    cj = base.jordan.entries
    items_bracket = []
    items_jordan = []
    for i in range(n):
        for jj in range(n):
            for k in range(n):
                if cm[i][jj][k]:
                    items_bracket.append((i, jj, k, cm[i][jj][k]))
                if cj[i][jj][k]:
                    items_jordan.append((i, jj, k, cj[i][jj][k]))
                # {e^i, e_j} = sum_k c^M[j][k][i] e^k  (f o ad_y on duals)
                if cm[jj][k][i]:
                    items_bracket.append((n + i, jj, n + k, cm[jj][k][i]))
                    items_bracket.append((jj, n + i, n + k, -cm[jj][k][i]))
                # e^i o e_j = sum_k c^J[j][k][i] e^k  (f o L_y on duals)
                if cj[jj][k][i]:
                    items_jordan.append((n + i, jj, n + k, cj[jj][k][i]))
                    items_jordan.append((jj, n + i, n + k, cj[jj][k][i]))
    bracket_p = Tensor3.from_sparse(2 * n, items_bracket)
    jordan_p = Tensor3.from_sparse(2 * n, items_jordan)
    form = BilinearForm(Matrix([
        [ONE if abs(i - jj) == n else ZERO for jj in range(2 * n)] for i in range(2 * n)]))
    result = HomJMPAlgebra(bracket_p, jordan_p, Matrix.identity(2 * n))
    return TStarExtension(base=base, result=result, form=form)


@dataclass(frozen=True)
class DualExtensionMap:
    """beta = a + transpose(a) on P = A + A*, with the automorphism criterion."""

    matrix: Matrix
    automorphism_of_extension: bool
    image_in_centers: bool

    @property
    def verdicts_agree(self) -> bool:
        return self.automorphism_of_extension == self.image_in_centers


def beta_from_automorphism(ext: TStarExtension, a: Matrix) -> DualExtensionMap:
    """Block map diag(a, a^T) on the extension, with both criterion verdicts.

    Reports independently whether beta is an automorphism of P and whether
    Im(a^2 - id) lies in the intersection of the jordan and bracket centers of
    the base; the proposition says the verdicts agree, which tests assert.
    """
    base = ext.base
    n = base.dim
    if not check_map_properties(base, a).automorphism:
        raise ValueError("map is not an automorphism of the base algebra")
    at = a.transpose()
    beta = Matrix([
        [a.entries[i][jj] if i < n and jj < n
         else at.entries[i - n][jj - n] if i >= n and jj >= n
         else ZERO
         for jj in range(2 * n)]
        for i in range(2 * n)])
    is_aut = check_map_properties(ext.result, beta).automorphism
    diff = (a @ a)
    image_ok = True
    for col in range(n):
        v = tuple(diff.entries[i][col] - (ONE if i == col else ZERO) for i in range(n))
        if is_zero(v):
            continue
        for k in range(n):
            ek = basis_vector(n, k)
            if not is_zero(apply_product(base.bracket, v, ek)):
                image_ok = False
                break
            if not is_zero(apply_product(base.jordan, v, ek)):
                image_ok = False
                break
        if not image_ok:
            break
    return DualExtensionMap(matrix=beta, automorphism_of_extension=is_aut,
                            image_in_centers=image_ok)


# ---------------------------------------------------------------------------
# centers (annihilators)

def _annihilator(tensor: Tensor3) -> list[Vector]:
    """Kernel of the stacked multiplication operators z -> (z e_j)_j."""
    n = tensor.dim
    if n == 0:
        return []
    rows = []
    for jj in range(n):
        for k in range(n):
            rows.append([tensor.entries[i][jj][k] for i in range(n)])
    return kernel_basis(Matrix(rows))


def center_malcev(algebra: AnyAlgebra) -> list[Vector]:
    """Basis of {z : {z, e_j} = 0 for all j} (bracket annihilator)."""
    tensor = algebra.bracket if isinstance(algebra, HomJMPAlgebra) else algebra.mul
    return _annihilator(tensor)


def center_jordan(algebra: AnyAlgebra) -> list[Vector]:
    """Basis of {z : z o e_j = 0 for all j} (jordan annihilator)."""
    tensor = algebra.jordan if isinstance(algebra, HomJMPAlgebra) else algebra.mul
    return _annihilator(tensor)


# ---------------------------------------------------------------------------
# conjugation twist of a pseudo-Euclidean structure

def twisted_pseudo_euclidean(j: HomJMPAlgebra, b: BilinearForm,
                             a: Matrix) -> tuple[HomJMPAlgebra, BilinearForm]:
    """Conjugation twist {x,y}_a = {a(x),a(y)}, x o_a y = a(x) o a(y), B_a = B(a., .).

    Requires a to be an automorphism of the products that is symmetric with
    respect to B.
    """
    flags = check_map_properties(j, a, form=b)
    if not (flags.automorphism and flags.symmetric_wrt_form):
        raise ValueError("twisting map must be a B-symmetric automorphism")
    n = j.dim
    cols = [a.column(i) for i in range(n)]
    bracket = Tensor3([[apply_product(j.bracket, cols[i], cols[jj]) for jj in range(n)]
                       for i in range(n)])
    jordan = Tensor3([[apply_product(j.jordan, cols[i], cols[jj]) for jj in range(n)]
                      for i in range(n)])
    return HomJMPAlgebra(bracket, jordan, a), BilinearForm(a.transpose() @ b.matrix)
