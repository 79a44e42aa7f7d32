"""Algebras and coalgebras given by structure constants, with axiom checkers."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .exact_linalg import Matrix, Ring, Scalar
from .fgmod import FreeModule, LinearMap, tensor_modules

DEFAULT_WITNESS_LIMIT = 5

Triple = tuple[int, int, int]


def _clean(base: Ring, constants: Mapping[Triple, object], n: int) -> dict[Triple, Scalar]:
    out = {}
    for idx, c in constants.items():
        if len(idx) != 3 or any(not 0 <= t < n for t in idx):
            raise ValueError(f"structure constant index {idx} out of range for rank {n}")
        c = base(c)
        if c:
            out[tuple(idx)] = c
    return dict(sorted(out.items()))


def _vector(base: Ring, vec: Sequence, n: int) -> tuple[Scalar, ...]:
    if len(vec) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(vec)}")
    return tuple(base(x) for x in vec)


@dataclass(frozen=True)
class Witness:
    law: str
    indices: tuple[int, ...]
    left: tuple[Scalar, ...]
    right: tuple[Scalar, ...]


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    witnesses: tuple[Witness, ...] = ()

    @classmethod
    def from_witnesses(cls, witnesses: Sequence[Witness]) -> AxiomReport:
        return cls(not witnesses, tuple(witnesses))

    def __bool__(self):
        return self.passed

    def merge(self, other: AxiomReport, limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
        return AxiomReport.from_witnesses((self.witnesses + other.witnesses)[: max(limit, 1)])


class _WitnessCollector:
    def __init__(self, limit: int):
        self.limit = limit
        self.items: list[Witness] = []

    def add(self, law, indices, left, right) -> bool:
        """Record a failure; returns True once the limit is reached."""
        self.items.append(Witness(law, tuple(indices), tuple(left), tuple(right)))
        return len(self.items) >= self.limit

    def report(self) -> AxiomReport:
        return AxiomReport.from_witnesses(self.items)


def _dense(base: Ring, sparse: Mapping, n: int) -> tuple[Scalar, ...]:
    z = base.zero
    return tuple(sparse.get(k, z) for k in range(n))


@dataclass(frozen=True)
class AlgebraPresentation:
    """``mul[(i, j, k)]`` is the coefficient of ``e_k`` in ``e_i * e_j``."""

    carrier: FreeModule
    mul: Mapping[Triple, Scalar]
    unit: tuple[Scalar, ...]

    @classmethod
    def build(cls, carrier: FreeModule, mul: Mapping[Triple, object], unit: Sequence) -> AlgebraPresentation:
        return cls(carrier, _clean(carrier.base, mul, carrier.rank), _vector(carrier.base, unit, carrier.rank))

    @property
    def base(self) -> Ring:
        return self.carrier.base

    @property
    def rank(self) -> int:
        return self.carrier.rank

    @cached_property
    def table(self) -> dict[tuple[int, int], list[tuple[int, Scalar]]]:
        t = defaultdict(list)
        for (i, j, k), c in self.mul.items():
            t[i, j].append((k, c))
        return dict(t)

    def product(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        acc: dict[int, Scalar] = {}
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            for j, b in ys:
                for k, c in self.table.get((i, j), ()):
                    acc[k] = acc.get(k, self.base.zero) + a * b * c
        return _dense(self.base, acc, self.rank)

    def basis_product(self, i: int, j: int) -> tuple[Scalar, ...]:
        return _dense(self.base, dict(self.table.get((i, j), ())), self.rank)

    @cached_property
    def mul_map(self) -> LinearMap:
        """``m: A ⊗ A -> A`` as an ``n x n^2`` matrix."""
        n = self.rank
        z = self.base.zero
        rows = [[z] * (n * n) for _ in range(n)]
        for (i, j, k), c in self.mul.items():
            rows[k][i * n + j] = c
        return LinearMap(tensor_modules(self.carrier, self.carrier), self.carrier,
                         Matrix(self.base, n, n * n, tuple(tuple(r) for r in rows)))

    @cached_property
    def unit_map(self) -> LinearMap:
        return LinearMap(FreeModule(self.base, 1), self.carrier, Matrix.column(self.base, self.unit))

    def is_commutative(self) -> bool:
        return all(self.mul.get((j, i, k), self.base.zero) == c for (i, j, k), c in self.mul.items())


@dataclass(frozen=True)
class CoalgebraPresentation:
    """``comul[(k, i, j)]`` is the coefficient of ``e_i ⊗ e_j`` in ``Δ e_k``."""

    carrier: FreeModule
    comul: Mapping[Triple, Scalar]
    counit: tuple[Scalar, ...]

    @classmethod
    def build(cls, carrier: FreeModule, comul: Mapping[Triple, object], counit: Sequence) -> CoalgebraPresentation:
        return cls(carrier, _clean(carrier.base, comul, carrier.rank), _vector(carrier.base, counit, carrier.rank))

    @property
    def base(self) -> Ring:
        return self.carrier.base

    @property
    def rank(self) -> int:
        return self.carrier.rank

    @cached_property
    def terms(self) -> dict[int, list[tuple[int, int, Scalar]]]:
        t = defaultdict(list)
        for (k, i, j), c in self.comul.items():
            t[k].append((i, j, c))
        return dict(t)

    def coproduct(self, x: Sequence[Scalar]) -> dict[tuple[int, int], Scalar]:
        acc: dict[tuple[int, int], Scalar] = {}
        for k, a in enumerate(x):
            if a:
                for i, j, c in self.terms.get(k, ()):
                    acc[i, j] = acc.get((i, j), self.base.zero) + a * c
        return {key: v for key, v in acc.items() if v}

    @cached_property
    def comul_map(self) -> LinearMap:
        """``Δ: C -> C ⊗ C`` as an ``n^2 x n`` matrix."""
        n = self.rank
        z = self.base.zero
        rows = [[z] * n for _ in range(n * n)]
        for (k, i, j), c in self.comul.items():
            rows[i * n + j][k] = c
        return LinearMap(self.carrier, tensor_modules(self.carrier, self.carrier),
                         Matrix(self.base, n * n, n, tuple(tuple(r) for r in rows)))

    @cached_property
    def counit_map(self) -> LinearMap:
        return LinearMap(self.carrier, FreeModule(self.base, 1), Matrix.row_vector(self.base, self.counit))

    def is_cocommutative(self) -> bool:
        return all(self.comul.get((k, j, i), self.base.zero) == c for (k, i, j), c in self.comul.items())


def base_algebra(base: Ring) -> AlgebraPresentation:
    """The base ring as a rank-1 algebra."""
    return AlgebraPresentation.build(FreeModule(base, 1, ("1",)), {(0, 0, 0): 1}, [1])


def base_coalgebra(base: Ring) -> CoalgebraPresentation:
    """Rank-1 coalgebra with ``Δe = e ⊗ e`` and ``εe = 1``."""
    return CoalgebraPresentation.build(FreeModule(base, 1, ("1",)), {(0, 0, 0): 1}, [1])


def _sparse_add(acc: dict, key, val, zero):
    acc[key] = acc.get(key, zero) + val


def _nonzero(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def check_algebra_axioms(a: AlgebraPresentation, limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """Associativity on all basis triples and both unit laws."""
    n, z = a.rank, a.base.zero
    w = _WitnessCollector(limit)
    for i in range(n):
        for j in range(n):
            ij = a.table.get((i, j), ())
            for k in range(n):
                left: dict[int, Scalar] = {}
                for l, c in ij:
                    for m, d in a.table.get((l, k), ()):
                        _sparse_add(left, m, c * d, z)
                right: dict[int, Scalar] = {}
                for l, c in a.table.get((j, k), ()):
                    for m, d in a.table.get((i, l), ()):
                        _sparse_add(right, m, c * d, z)
                left, right = _nonzero(left), _nonzero(right)
                if left != right and w.add("associativity", (i, j, k),
                                           _dense(a.base, left, n), _dense(a.base, right, n)):
                    return w.report()
    for j in range(n):
        e_j = a.carrier.basis_vector(j)
        lu = a.product(a.unit, e_j)
        if lu != e_j and w.add("left unit", (j,), lu, e_j):
            return w.report()
        ru = a.product(e_j, a.unit)
        if ru != e_j and w.add("right unit", (j,), ru, e_j):
            return w.report()
    return w.report()


def _flatten3(d: dict[tuple[int, int, int], Scalar], n: int, base: Ring) -> tuple[Scalar, ...]:
    return _dense(base, {(i * n + j) * n + k: v for (i, j, k), v in d.items()}, n ** 3)


def _flatten2(d: dict[tuple[int, int], Scalar], n: int, base: Ring) -> tuple[Scalar, ...]:
    return _dense(base, {i * n + j: v for (i, j), v in d.items()}, n * n)


def check_coalgebra_axioms(c: CoalgebraPresentation, limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """Coassociativity and both counit laws on every basis element."""
    n, z = c.rank, c.base.zero
    w = _WitnessCollector(limit)
    for k in range(n):
        left: dict = {}
        right: dict = {}
        for i, j, a in c.terms.get(k, ()):
            for p, q, b in c.terms.get(i, ()):
                _sparse_add(left, (p, q, j), a * b, z)
            for p, q, b in c.terms.get(j, ()):
                _sparse_add(right, (i, p, q), a * b, z)
        left, right = _nonzero(left), _nonzero(right)
        if left != right and w.add("coassociativity", (k,),
                                   _flatten3(left, n, c.base), _flatten3(right, n, c.base)):
            return w.report()
    for k in range(n):
        e_k = c.carrier.basis_vector(k)
        lc: dict = {}
        rc: dict = {}
        for i, j, a in c.terms.get(k, ()):
            _sparse_add(lc, j, c.counit[i] * a, z)
            _sparse_add(rc, i, c.counit[j] * a, z)
        lv, rv = _dense(c.base, lc, n), _dense(c.base, rc, n)
        if lv != e_k and w.add("left counit", (k,), lv, e_k):
            return w.report()
        if rv != e_k and w.add("right counit", (k,), rv, e_k):
            return w.report()
    return w.report()


def opposite_algebra(a: AlgebraPresentation) -> AlgebraPresentation:
    return AlgebraPresentation.build(a.carrier, {(j, i, k): c for (i, j, k), c in a.mul.items()}, a.unit)


def tensor_algebra(a: AlgebraPresentation, b: AlgebraPresentation) -> AlgebraPresentation:
    if a.base != b.base:
        raise ValueError("tensor product over different base rings")
    nb = b.rank
    mul = {}
    for (i1, j1, k1), c1 in a.mul.items():
        for (i2, j2, k2), c2 in b.mul.items():
            mul[i1 * nb + i2, j1 * nb + j2, k1 * nb + k2] = c1 * c2
    unit = [x * y for x in a.unit for y in b.unit]
    return AlgebraPresentation.build(tensor_modules(a.carrier, b.carrier), mul, unit)


def tensor_coalgebra(c: CoalgebraPresentation, d: CoalgebraPresentation) -> CoalgebraPresentation:
    if c.base != d.base:
        raise ValueError("tensor product over different base rings")
    nd = d.rank
    comul = {}
    for (k1, i1, j1), a1 in c.comul.items():
        for (k2, i2, j2), a2 in d.comul.items():
            comul[k1 * nd + k2, i1 * nd + i2, j1 * nd + j2] = a1 * a2
    counit = [x * y for x in c.counit for y in d.counit]
    return CoalgebraPresentation.build(tensor_modules(c.carrier, d.carrier), comul, counit)


def _check_dims(f: LinearMap, src_rank: int, dst_rank: int):
    if f.matrix.shape != (dst_rank, src_rank):
        raise ValueError(f"map of shape {f.matrix.shape} between ranks {src_rank} -> {dst_rank}")


def algebra_morphism_report(f: LinearMap, a: AlgebraPresentation, b: AlgebraPresentation,
                            limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """Checks ``f(x y) = f(x) f(y)`` on basis pairs and ``f(1) = 1``."""
    _check_dims(f, a.rank, b.rank)
    w = _WitnessCollector(limit)
    images = [f.image_of_basis(i) for i in range(a.rank)]
    for i in range(a.rank):
        for j in range(a.rank):
            left = f(a.basis_product(i, j))
            right = b.product(images[i], images[j])
            if left != right and w.add("multiplicative", (i, j), left, right):
                return w.report()
    fu = f(a.unit)
    if fu != b.unit:
        w.add("unital", (), fu, b.unit)
    return w.report()


def is_algebra_morphism(f: LinearMap, a: AlgebraPresentation, b: AlgebraPresentation) -> bool:
    return algebra_morphism_report(f, a, b, limit=1).passed


def coalgebra_morphism_report(f: LinearMap, c: CoalgebraPresentation, d: CoalgebraPresentation,
                              limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """Checks ``Δ_D f = (f ⊗ f) Δ_C`` and ``ε_D f = ε_C`` on basis elements."""
    _check_dims(f, c.rank, d.rank)
    w = _WitnessCollector(limit)
    nd, z = d.rank, d.base.zero
    images = [f.image_of_basis(i) for i in range(c.rank)]
    for k in range(c.rank):
        left = d.coproduct(images[k])
        right: dict = {}
        for i, j, a in c.terms.get(k, ()):
            for p, x in enumerate(images[i]):
                if x:
                    for q, y in enumerate(images[j]):
                        if y:
                            _sparse_add(right, (p, q), a * x * y, z)
        right = _nonzero(right)
        if left != right and w.add("comultiplicative", (k,),
                                   _flatten2(left, nd, d.base), _flatten2(right, nd, d.base)):
            return w.report()
    eps = tuple(sum((d.counit[p] * x for p, x in enumerate(img)), z) for img in images)
    if eps != c.counit:
        w.add("counital", (), eps, c.counit)
    return w.report()


def is_coalgebra_morphism(f: LinearMap, c: CoalgebraPresentation, d: CoalgebraPresentation) -> bool:
    return coalgebra_morphism_report(f, c, d, limit=1).passed


def convolution(f: LinearMap, g: LinearMap, c: CoalgebraPresentation, a: AlgebraPresentation) -> LinearMap:
    """``m_A ∘ (f ⊗ g) ∘ Δ_C``."""
    _check_dims(f, c.rank, a.rank)
    _check_dims(g, c.rank, a.rank)
    fi = [f.image_of_basis(i) for i in range(c.rank)]
    gi = [g.image_of_basis(i) for i in range(c.rank)]
    z = a.base.zero
    cols = []
    for k in range(c.rank):
        acc = [z] * a.rank
        for i, j, coeff in c.terms.get(k, ()):
            prod = a.product(fi[i], gi[j])
            acc = [s + coeff * t for s, t in zip(acc, prod)]
        cols.append(acc)
    return LinearMap(c.carrier, a.carrier, Matrix.from_columns(a.base, cols, a.rank))


def convolution_unit(c: CoalgebraPresentation, a: AlgebraPresentation) -> LinearMap:
    """``e_A ∘ ε_C``."""
    return a.unit_map @ c.counit_map


def validate_monoid_table(table: Sequence[Sequence[int]]) -> int:
    """Check a multiplication table; return the index of its identity element."""
    n = len(table)
    if n == 0:
        raise ValueError("empty multiplication table")
    if any(len(r) != n for r in table):
        raise ValueError("multiplication table must be square")
    if any(not (isinstance(x, int) and 0 <= x < n) for r in table for x in r):
        raise ValueError("table entries must be element indices")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ValueError(f"table is not associative at ({i}, {j}, {k})")
    ident = next((e for e in range(n)
                  if all(table[e][x] == x and table[x][e] == x for x in range(n))), None)
    if ident is None:
        raise ValueError("table has no identity element")
    return ident


def monoid_algebra(table: Sequence[Sequence[int]], base: Ring,
                   labels: Sequence[str] | None = None) -> AlgebraPresentation:
    ident = validate_monoid_table(table)
    n = len(table)
    carrier = FreeModule(base, n, tuple(labels) if labels else tuple(f"g{i}" for i in range(n)))
    mul = {(i, j, table[i][j]): 1 for i in range(n) for j in range(n)}
    return AlgebraPresentation.build(carrier, mul, carrier.basis_vector(ident))
