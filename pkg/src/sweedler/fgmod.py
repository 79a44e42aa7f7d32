"""Finite-rank free modules, linear maps and the canonical comparison maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .exact_linalg import (
    ZZ,
    Matrix,
    Ring,
    Scalar,
    field_rank,
    inverse,
    kronecker,
    smith_normal_form,
)


@dataclass(frozen=True)
class FreeModule:
    base: Ring
    rank: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.labels is not None and len(self.labels) != self.rank:
            raise ValueError("one label per basis element")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def basis_vector(self, i: int) -> tuple[Scalar, ...]:
        z, o = self.base.zero, self.base.one
        return tuple(o if k == i else z for k in range(self.rank))

    def zero_vector(self) -> tuple[Scalar, ...]:
        return (self.base.zero,) * self.rank


def dual_module(m: FreeModule) -> FreeModule:
    labels = tuple(f"{m.label(i)}*" for i in range(m.rank))
    return FreeModule(m.base, m.rank, labels)


def tensor_modules(*mods: FreeModule) -> FreeModule:
    """Tensor product with lexicographic (row-major) basis order."""
    base = mods[0].base
    if any(m.base != base for m in mods):
        raise ValueError("tensor factors over different base rings")
    rank = 1
    for m in mods:
        rank *= m.rank
    labels = tuple("⊗".join(m.label(i) for m, i in zip(mods, idx))
                   for idx in product(*(range(m.rank) for m in mods)))
    return FreeModule(base, rank, labels)


@dataclass(frozen=True)
class LinearMap:
    domain: FreeModule
    codomain: FreeModule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.rank, self.domain.rank):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{self.codomain.rank} x {self.domain.rank}")
        if not (self.matrix.ring == self.domain.base == self.codomain.base):
            raise ValueError("base rings of map and modules disagree")

    @classmethod
    def identity(cls, m: FreeModule) -> LinearMap:
        return cls(m, m, Matrix.identity(m.base, m.rank))

    @classmethod
    def from_rows(cls, domain: FreeModule, codomain: FreeModule, rows) -> LinearMap:
        return cls(domain, codomain, Matrix.from_rows(domain.base, rows, cols=domain.rank))

    @property
    def base(self) -> Ring:
        return self.domain.base

    def __call__(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        return self.matrix.apply(vec)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """Composition: ``(g @ f)(x) == g(f(x))``."""
        if other.codomain.rank != self.domain.rank:
            raise ValueError("composing maps with mismatched ranks")
        return LinearMap(other.domain, self.codomain, self.matrix @ other.matrix)

    def image_of_basis(self, i: int) -> tuple[Scalar, ...]:
        return self.matrix.col(i)


def tensor_maps(*maps: LinearMap) -> LinearMap:
    mat = maps[0].matrix
    for f in maps[1:]:
        mat = kronecker(mat, f.matrix)
    return LinearMap(tensor_modules(*(f.domain for f in maps)),
                     tensor_modules(*(f.codomain for f in maps)), mat)


def dual_map(f: LinearMap) -> LinearMap:
    """The transpose ``f*: N* -> M*`` of ``f: M -> N``."""
    return LinearMap(dual_module(f.codomain), dual_module(f.domain), f.matrix.T)


def dual_pairing(m: FreeModule) -> Matrix:
    """Matrix of ``(f, x) -> f(x)`` for dual basis ``f`` (rows) against basis ``x`` (columns)."""
    z, o = m.base.zero, m.base.one
    return Matrix(m.base, m.rank, m.rank,
                  tuple(tuple(o if i == j else z for j in range(m.rank)) for i in range(m.rank)))


def evaluation(m: FreeModule) -> LinearMap:
    """Canonical ``M -> M**``, ``x -> (f -> f(x))``, in the double-dual basis."""
    pair = dual_pairing(m)
    # row j: the double-dual basis functional e_j** applied to ev(e_i) gives e_j*(e_i)
    return LinearMap(m, dual_module(dual_module(m)), pair)


@lru_cache(maxsize=128)
def lambda_map(*mods: FreeModule) -> LinearMap:
    """``A* ⊗ B* (⊗ ...) -> (A ⊗ B ⊗ ...)*`` sending ``f ⊗ g`` to ``a ⊗ b -> f(a) g(b)``."""
    pairing = dual_pairing(mods[0])
    for m in mods[1:]:
        pairing = kronecker(pairing, dual_pairing(m))
    # column (f_i ⊗ g_j) holds its values on the basis tensors, i.e. its coordinates
    # in the dual basis of the tensor product
    return LinearMap(tensor_modules(*(dual_module(m) for m in mods)),
                     dual_module(tensor_modules(*mods)), pairing.T)


def swap(m: FreeModule, n: FreeModule) -> LinearMap:
    """Symmetry ``M ⊗ N -> N ⊗ M``."""
    ring = m.base
    z, o = ring.zero, ring.one
    size = m.rank * n.rank
    rows = [[z] * size for _ in range(size)]
    for i in range(m.rank):
        for j in range(n.rank):
            rows[j * m.rank + i][i * n.rank + j] = o
    return LinearMap(tensor_modules(m, n), tensor_modules(n, m),
                     Matrix(ring, size, size, tuple(tuple(r) for r in rows)))


def default_probes(m: FreeModule) -> list[tuple[Scalar, ...]]:
    return [m.basis_vector(i) for i in range(m.rank)]


def probe_matrix(m: FreeModule, probes: Sequence[Sequence[Scalar]] | None = None) -> Matrix:
    """Rows are probe elements of ``m``; entry ``[p][i]`` is ``e_i*(probe_p)``."""
    probes = default_probes(m) if probes is None else probes
    return Matrix.from_rows(m.base, probes, cols=m.rank)


def pi_map(*mods: FreeModule, probes: Sequence[Sequence[Sequence[Scalar]]] | None = None) -> LinearMap:
    """``A* ⊗ B* (⊗ ...) -> R^(grid)``, ``f ⊗ g -> ((a, b) -> f(a) g(b))``.

    The function space is truncated to a finite grid of probe tuples; by default
    each factor is probed on its basis.  Rows are grid points in lexicographic
    order, columns the tensor basis of the duals.
    """
    probes = probes or [None] * len(mods)
    mat = probe_matrix(mods[0], probes[0])
    for m, p in zip(mods[1:], probes[1:]):
        mat = kronecker(mat, probe_matrix(m, p))
    grid = FreeModule(mods[0].base, mat.rows)
    return LinearMap(tensor_modules(*(dual_module(m) for m in mods)), grid, mat)


@dataclass(frozen=True)
class Submodule:
    ambient: FreeModule
    generators: Matrix  # columns

    def __post_init__(self):
        if self.generators.rows != self.ambient.rank:
            raise ValueError("generator columns must live in the ambient module")

    @classmethod
    def spanned_by(cls, ambient: FreeModule, vectors: Sequence[Sequence]) -> Submodule:
        return cls(ambient, Matrix.from_columns(ambient.base, vectors, ambient.rank))

    def basis(self) -> Matrix:
        """A basis of the span over Z, from the Smith form of the generators."""
        if self.ambient.base != ZZ:
            raise ValueError("basis() is only implemented over Z")
        u, d, _ = smith_normal_form(self.generators)
        cols = [[u[i, t] * d[t, t] for i in range(u.rows)]
                for t in range(min(d.rows, d.cols)) if d[t, t]]
        return Matrix.from_columns(ZZ, cols, self.ambient.rank)


def is_pure_submodule(s: Submodule) -> bool:
    """True iff ``ambient / s`` is torsion-free (base ring Z)."""
    if s.ambient.base != ZZ:
        raise ValueError("purity is only decided over Z (every subspace is pure over a field)")
    if s.generators.cols == 0:
        return True
    _, d, _ = smith_normal_form(s.generators)
    return all(d[t, t] in (0, 1) for t in range(min(d.rows, d.cols)))


def is_injective(mat: Matrix) -> bool:
    """Full column rank; over Z via the Smith form (no zero invariant factor)."""
    if mat.cols == 0:
        return True
    if mat.ring == ZZ:
        _, d, _ = smith_normal_form(mat)
        return mat.cols <= mat.rows and all(d[t, t] != 0 for t in range(mat.cols))
    return field_rank(mat) == mat.cols


def is_isomorphism(f: LinearMap) -> bool:
    if f.matrix.rows != f.matrix.cols:
        return False
    try:
        inverse(f.matrix)
    except ValueError:
        return False
    return True
