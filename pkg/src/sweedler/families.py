"""Generators for the standard example algebras and coalgebras."""

from __future__ import annotations

from itertools import permutations

from .exact_linalg import Ring
from .fgmod import FreeModule
from .structures import AlgebraPresentation, CoalgebraPresentation, monoid_algebra


def cyclic_group_table(n: int) -> list[list[int]]:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(k: int) -> tuple[list[list[int]], list[str]]:
    """Multiplication table of S_k on permutations in lexicographic order.

    ``(σ τ)(x) = σ(τ(x))``; element 0 is the identity.
    """
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[x]] for x in range(k))] for t in perms] for s in perms]
    labels = ["".join(str(x) for x in p) for p in perms]
    return table, labels


def left_zero_monoid_table(k: int = 2) -> list[list[int]]:
    """``k`` left-zero elements (``xy = x``) plus an adjoined identity at index 0."""
    n = k + 1
    return [[j if i == 0 else i for j in range(n)] for i in range(n)]


def max_monoid_table(n: int) -> list[list[int]]:
    """``{0, .., n-1}`` under ``max``; identity 0."""
    return [[max(i, j) for j in range(n)] for i in range(n)]


def group_algebra(table, base: Ring, labels=None) -> AlgebraPresentation:
    return monoid_algebra(table, base, labels)


def matrix_algebra(n: int, base: Ring) -> AlgebraPresentation:
    """``M_n`` on matrix units ``E_ij`` (index ``i*n + j``)."""
    carrier = FreeModule(base, n * n, tuple(f"E{i}{j}" for i in range(n) for j in range(n)))
    mul = {(i * n + j, j * n + l, i * n + l): 1 for i in range(n) for j in range(n) for l in range(n)}
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return AlgebraPresentation.build(carrier, mul, unit)


def upper_triangular_algebra(base: Ring) -> AlgebraPresentation:
    """Upper-triangular 2x2 matrices on ``E00, E01, E11``."""
    carrier = FreeModule(base, 3, ("E00", "E01", "E11"))
    mul = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 2, 1): 1, (2, 2, 2): 1}
    return AlgebraPresentation.build(carrier, mul, [1, 0, 1])


def comatrix_coalgebra(n: int, base: Ring) -> CoalgebraPresentation:
    """``Δ e_ij = Σ_k e_ik ⊗ e_kj``, ``ε e_ij = δ_ij``."""
    carrier = FreeModule(base, n * n, tuple(f"e{i}{j}" for i in range(n) for j in range(n)))
    comul = {(i * n + j, i * n + k, k * n + j): 1 for i in range(n) for j in range(n) for k in range(n)}
    counit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return CoalgebraPresentation.build(carrier, comul, counit)


def divided_power_coalgebra(n: int, base: Ring) -> CoalgebraPresentation:
    """``Δ d_k = Σ_{i+j=k} d_i ⊗ d_j`` on ``d_0 .. d_{n-1}``."""
    carrier = FreeModule(base, n, tuple(f"d{i}" for i in range(n)))
    comul = {(k, i, k - i): 1 for k in range(n) for i in range(k + 1)}
    return CoalgebraPresentation.build(carrier, comul, [1] + [0] * (n - 1))


def truncated_polynomial_algebra(n: int, base: Ring) -> AlgebraPresentation:
    """``R[x]/(x^n)`` on ``1, x, .., x^{n-1}``."""
    carrier = FreeModule(base, n, tuple(f"x^{i}" for i in range(n)))
    mul = {(i, j, i + j): 1 for i in range(n) for j in range(n) if i + j < n}
    return AlgebraPresentation.build(carrier, mul, [1] + [0] * (n - 1))
