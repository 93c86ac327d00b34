import random
from fractions import Fraction

import pytest

from homcheck import HomAlgebra, HomJMPAlgebra, Matrix, Tensor3
from homcheck.examples import p6


def rand_frac(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def rand_vector(rng: random.Random, n: int, span: int = 4):
    return tuple(rand_frac(rng, span) for _ in range(n))


def rand_matrix(rng: random.Random, n: int, span: int = 3) -> Matrix:
    return Matrix([[Fraction(rng.randint(-span, span)) for _ in range(n)] for _ in range(n)])


def rand_tensor(rng: random.Random, n: int, span: int = 2) -> Tensor3:
    return Tensor3([[[Fraction(rng.randint(-span, span)) for _ in range(n)]
                     for _ in range(n)] for _ in range(n)])


def rand_skew_tensor(rng: random.Random, n: int, span: int = 2) -> Tensor3:
    cube = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                c = Fraction(rng.randint(-span, span))
                cube[i][j][k] = c
                cube[j][i][k] = -c
    return Tensor3(cube)


def rand_sym_tensor(rng: random.Random, n: int, span: int = 2) -> Tensor3:
    cube = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                c = Fraction(rng.randint(-span, span))
                cube[i][j][k] = c
                cube[j][i][k] = c
    return Tensor3(cube)


def rand_algebra(rng: random.Random, n: int) -> HomAlgebra:
    return HomAlgebra(rand_tensor(rng, n), rand_matrix(rng, n))


def rand_jmp(rng: random.Random, n: int) -> HomJMPAlgebra:
    return HomJMPAlgebra(rand_skew_tensor(rng, n), rand_sym_tensor(rng, n),
                         rand_matrix(rng, n))


@pytest.fixture(scope="session")
def p6_fixture():
    return p6()
