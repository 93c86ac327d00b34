"""Worked-example generators: the 3- and 5-dimensional algebras and the
6-dimensional dual extension used throughout the test suite."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import HomAlgebra, HomJMPAlgebra, jmp_pair
from .constructions import (
    DualExtensionMap,
    TStarExtension,
    beta_from_automorphism,
    t_star_extension,
    twisted_pseudo_euclidean,
)
from .forms import BilinearForm
from .linalg import Matrix, Tensor3, apply_product, rat

# antisymmetric 3-dimensional table: e1*e2 = e2, e2*e3 = e1, e3*e1 = e3
_BASE3_ITEMS = [
    (0, 1, 1, 1), (1, 0, 1, -1),
    (1, 2, 0, 1), (2, 1, 0, -1),
    (2, 0, 2, 1), (0, 2, 2, -1),
]


def zero_algebra(n: int) -> HomAlgebra:
    return HomAlgebra(Tensor3.zero(n), Matrix.identity(n))


def zero_jmp(n: int) -> HomJMPAlgebra:
    return HomJMPAlgebra(Tensor3.zero(n), Tensor3.zero(n), Matrix.identity(n))


def _conjugate(table: Tensor3, m: Matrix) -> Tensor3:
    """Product of m-images: c'[i][j] = table(m e_i, m e_j)."""
    n = table.dim
    cols = [m.column(i) for i in range(n)]
    return Tensor3([[apply_product(table, cols[i], cols[j]) for j in range(n)]
                    for i in range(n)])


def ex3(lam) -> HomAlgebra:
    """3-dimensional admissible fixture: base table conjugated by its diagonal twist.

    The product is x*y = alpha(x) star alpha(y) with alpha = diag(1, lam, 1/lam).
    """
    lam = rat(lam)
    if not lam:
        raise ValueError("twist must be invertible (lambda != 0)")
    base = Tensor3.from_sparse(3, _BASE3_ITEMS)
    alpha = Matrix.diagonal([1, lam, 1 / lam])
    return HomAlgebra(_conjugate(base, alpha), alpha)


def ex3_flat() -> HomAlgebra:
    """The untwisted 3-dimensional table (lambda = 1, twist = identity)."""
    return ex3(1)


def ex3_flat_jmp() -> HomJMPAlgebra:
    """Induced (commutator, anticommutator) pair of the untwisted 3-dim table."""
    return jmp_pair(ex3_flat())


def ex5(nu, lam) -> HomAlgebra:
    """5-dimensional Hom-flexible, Hom-Malcev admissible fixture.

    e1.e2 = e5 + 1/2 e4, e2.e1 = e5 - 1/2 e4, e1.e4 = (nu/2) e1,
    e2.e4 = -(1/(2 nu)) e2, e4.e4 = -e5 (with the skew counterparts of the
    e4 column); e3 multiplies to zero and carries the lam-eigenvalue of the
    twist alpha = diag(nu, 1/nu, lam, 1, 1).
    """
    nu, lam = rat(nu), rat(lam)
    if not nu or not lam:
        raise ValueError("twist must be invertible (nu, lambda != 0)")
    half = Fraction(1, 2)
    items = [
        (0, 1, 4, 1), (0, 1, 3, half),
        (1, 0, 4, 1), (1, 0, 3, -half),
        (0, 3, 0, nu * half),
        (1, 3, 1, -half / nu),
        (3, 0, 0, -nu * half),
        (3, 1, 1, half / nu),
        (3, 3, 4, -1),
    ]
    alpha = Matrix.diagonal([nu, 1 / nu, lam, 1, 1])
    return HomAlgebra(Tensor3.from_sparse(5, items), alpha)


def theta_involution() -> Matrix:
    """The involutive automorphism e1 -> -e1, e2 <-> e3 of the 3-dim table."""
    return Matrix([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])


@dataclass(frozen=True)
class P6Fixture:
    """All pieces of the 6-dimensional dual-extension fixture.

    `extension` is the untwisted T*-extension (twist = id, hyperbolic form);
    `twisted`/`twisted_form` is the beta-conjugated pseudo-Euclidean structure
    with twist beta = theta + transpose(theta).
    """

    base: HomJMPAlgebra
    extension: TStarExtension
    theta: Matrix
    beta_map: DualExtensionMap
    twisted: HomJMPAlgebra
    twisted_form: BilinearForm

    @property
    def beta(self) -> Matrix:
        return self.beta_map.matrix


def p6(theta: Matrix | str = "paper") -> P6Fixture:
    """Build the 6-dimensional fixture from the flat 3-dim JMP structure."""
    if theta == "paper":
        theta = theta_involution()
    elif theta == "id":
        theta = Matrix.identity(3)
    elif not isinstance(theta, Matrix):
        raise ValueError(f"unknown involution choice {theta!r}")
    base = ex3_flat_jmp()
    ext = t_star_extension(base)
    beta_map = beta_from_automorphism(ext, theta)
    if not beta_map.automorphism_of_extension:
        raise ValueError("chosen map does not extend to an automorphism of P")
    twisted, twisted_form = twisted_pseudo_euclidean(ext.result, ext.form, beta_map.matrix)
    return P6Fixture(base=base, extension=ext, theta=theta, beta_map=beta_map,
                     twisted=twisted, twisted_form=twisted_form)


def example(name: str, params: dict | None = None):
    """Named fixture for the CLI: returns (algebra, form-or-None, meta).

    Supported names: ex3 (param lam), ex3-flat, ex5 (params nu, lam),
    p6 (param theta in {paper, id}).
    """
    params = dict(params or {})
    meta = {"example": name}
    if name == "ex3":
        lam = params.pop("lam", params.pop("lambda", 2))
        _reject_extras(name, params)
        meta["lambda"] = str(rat(lam))
        return ex3(lam), None, meta
    if name == "ex3-flat":
        _reject_extras(name, params)
        return ex3_flat(), None, meta
    if name == "ex5":
        nu = params.pop("nu", 2)
        lam = params.pop("lam", params.pop("lambda", 3))
        _reject_extras(name, params)
        meta["nu"], meta["lambda"] = str(rat(nu)), str(rat(lam))
        return ex5(nu, lam), None, meta
    if name == "p6":
        choice = params.pop("theta", "paper")
        _reject_extras(name, params)
        fixture = p6(choice)
        meta["constructed-by"] = "textension+twist"
        meta["theta"] = choice
        return fixture.twisted, fixture.twisted_form, meta
    raise ValueError(f"unknown example {name!r} (use ex3, ex3-flat, ex5 or p6)")


def _reject_extras(name: str, params: dict) -> None:
    if params:
        raise ValueError(f"unknown parameter(s) for {name}: {sorted(params)}")
