"""Hom-algebras given by structure constants, and their basic derived maps.

A Hom-algebra is a triple (A, mul, alpha): a bilinear product together with a
linear twisting map that enters every defining identity. A Hom-JMP algebra
carries two products, a skewsymmetric bracket and a symmetric (Jordan-type)
product, sharing one twist.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    HALF,
    DimensionMismatch,
    Matrix,
    Tensor3,
    Vector,
    apply_product,
    mat_apply,
    vadd,
    vscale,
    vsub,
)


class HomAlgebra:
    """Single-product Hom-algebra (dim, structure tensor, twist matrix)."""

    __slots__ = ("dim", "mul", "twist")

    def __init__(self, mul: Tensor3, twist: Matrix):
        if twist.rows != twist.cols or twist.rows != mul.dim:
            raise DimensionMismatch(
                f"twist is {twist.rows}x{twist.cols}, product tensor has dim {mul.dim}")
        self.dim = mul.dim
        self.mul = mul
        self.twist = twist

    def product(self, u: Vector, v: Vector) -> Vector:
        return apply_product(self.mul, u, v)

    def twisted(self, v: Vector, k: int = 1) -> Vector:
        return mat_apply(self.twist.power(k), v)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomAlgebra)
                and self.mul == other.mul and self.twist == other.twist)

    def __repr__(self) -> str:
        return f"HomAlgebra(dim={self.dim})"


class HomJMPAlgebra:
    """Two-product Hom-algebra: skewsymmetric bracket + symmetric jordan product."""

    __slots__ = ("dim", "bracket", "jordan", "twist")

    def __init__(self, bracket: Tensor3, jordan: Tensor3, twist: Matrix):
        if bracket.dim != jordan.dim:
            raise DimensionMismatch("bracket and jordan tensors have different dimensions")
        if twist.rows != twist.cols or twist.rows != bracket.dim:
            raise DimensionMismatch("twist shape does not match the products")
        if not bracket.is_skewsymmetric():
            raise ValueError("bracket tensor must be skewsymmetric")
        if not jordan.is_symmetric():
            raise ValueError("jordan tensor must be symmetric")
        self.dim = bracket.dim
        self.bracket = bracket
        self.jordan = jordan
        self.twist = twist

    def bracket_of(self, u: Vector, v: Vector) -> Vector:
        return apply_product(self.bracket, u, v)

    def jordan_of(self, u: Vector, v: Vector) -> Vector:
        return apply_product(self.jordan, u, v)

    def twisted(self, v: Vector, k: int = 1) -> Vector:
        return mat_apply(self.twist.power(k), v)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomJMPAlgebra)
                and self.bracket == other.bracket
                and self.jordan == other.jordan
                and self.twist == other.twist)

    def __repr__(self) -> str:
        return f"HomJMPAlgebra(dim={self.dim})"


# ---------------------------------------------------------------------------
# derived maps

def hom_associator(a: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """as(x,y,z) = (x y) alpha(z) - alpha(x) (y z)."""
    left = a.product(a.product(x, y), a.twisted(z))
    right = a.product(a.twisted(x), a.product(y, z))
    return vsub(left, right)


def hom_jacobiator(a: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """J(x,y,z) = sum over cyclic permutations of (x y) alpha(z)."""
    acc = a.product(a.product(x, y), a.twisted(z))
    acc = vadd(acc, a.product(a.product(y, z), a.twisted(x)))
    return vadd(acc, a.product(a.product(z, x), a.twisted(y)))


def cyclic_associator(a: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """S(x,y,z) = as(x,y,z) + as(y,z,x) + as(z,x,y)."""
    acc = hom_associator(a, x, y, z)
    acc = vadd(acc, hom_associator(a, y, z, x))
    return vadd(acc, hom_associator(a, z, x, y))


def minus_algebra(a: HomAlgebra) -> HomAlgebra:
    """Commutator algebra [x,y] = x y - y x with the same twist."""
    e = a.mul.entries
    n = a.dim
    minus = Tensor3([[vsub(e[i][j], e[j][i]) for j in range(n)] for i in range(n)])
    return HomAlgebra(minus, a.twist)


def plus_algebra(a: HomAlgebra) -> HomAlgebra:
    """Anticommutator algebra x o y = (x y + y x)/2 with the same twist."""
    e = a.mul.entries
    n = a.dim
    plus = Tensor3([[vscale(HALF, vadd(e[i][j], e[j][i])) for j in range(n)] for i in range(n)])
    return HomAlgebra(plus, a.twist)


def jmp_pair(a: HomAlgebra) -> HomJMPAlgebra:
    """The induced (commutator, anticommutator) pair of a single-product algebra."""
    return HomJMPAlgebra(minus_algebra(a).mul, plus_algebra(a).mul, a.twist)


def jmp_to_admissible(j: HomJMPAlgebra) -> HomAlgebra:
    """Single product x.y = 1/2 {x,y} + x o y recovering (bracket, jordan) as minus/plus."""
    b = j.bracket.entries
    s = j.jordan.entries
    n = j.dim
    mul = Tensor3([[vadd(vscale(HALF, b[i][jj]), s[i][jj]) for jj in range(n)] for i in range(n)])
    return HomAlgebra(mul, j.twist)


def left_mult(a: HomAlgebra, x: Vector) -> Matrix:
    """Matrix of y -> x y in the fixed basis."""
    n = a.dim
    cols = [a.product(x, _basis(n, j)) for j in range(n)]
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])


def right_mult(a: HomAlgebra, x: Vector) -> Matrix:
    """Matrix of y -> y x in the fixed basis."""
    n = a.dim
    cols = [a.product(_basis(n, j), x) for j in range(n)]
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])


def _basis(n: int, i: int) -> Vector:
    from .linalg import basis_vector

    return basis_vector(n, i)


@dataclass(frozen=True)
class PowerTable:
    """Hom-powers of a fixed vector: entries[k] is x^(k+1)."""

    base: Vector
    entries: tuple[Vector, ...]


def power_table(a: HomAlgebra, x: Vector, n: int) -> PowerTable:
    """Hom-powers x^1 = x, x^k = x^(k-1) . alpha^(k-2)(x) up to x^n.

    The twist powers alpha^0..alpha^(n-2) are computed once and cached on the
    twist matrix, so repeated sweeps stay cheap.
    """
    if n < 1:
        raise ValueError("hom-power index must be >= 1")
    powers = [x]
    for k in range(2, n + 1):
        powers.append(a.product(powers[-1], a.twisted(x, k - 2)))
    return PowerTable(base=x, entries=tuple(powers))


def hom_power(a: HomAlgebra, x: Vector, n: int) -> Vector:
    """The n-th Hom-power of x (n >= 1)."""
    return power_table(a, x, n).entries[n - 1]
