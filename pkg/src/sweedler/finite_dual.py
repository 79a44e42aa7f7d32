"""Finite duals for the decidable families: finite-rank algebras (where the
finite dual is the full dual) and the polynomial algebra in one variable,
whose finite dual consists of the linearly recurrent sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .duality import dual_coalgebra_fgp
from .exact_linalg import QQ, Matrix, Ring, Scalar, field_rank, kronecker, rank, solve
from .fgmod import FreeModule, LinearMap, lambda_map, tensor_modules
from .structures import (
    DEFAULT_WITNESS_LIMIT,
    AlgebraPresentation,
    AxiomReport,
    CoalgebraPresentation,
    Witness,
    tensor_algebra,
)

POLYNOMIAL = "polynomial"
DEFAULT_PROBE_DEGREE = 8


@dataclass(frozen=True)
class RecurrentSequence:
    """The functional ``x^n -> a_n`` on ``R[x]``.

    ``initial`` lists ``a_0, a_1, ...`` (at least ``d`` terms); later terms follow
    ``a_{n+d} = r_1 a_{n+d-1} + ... + r_d a_n`` with ``recurrence = (r_1, .., r_d)``.
    Extra initial terms beyond ``d`` are allowed and must agree with the recurrence.
    """

    initial: tuple[Scalar, ...]
    recurrence: tuple[Scalar, ...]
    base: Ring = QQ

    def __post_init__(self):
        if not self.base.is_field:
            raise ValueError("recurrent sequences are handled over Q or F_p")
        if len(self.initial) < len(self.recurrence):
            raise ValueError("need at least as many initial terms as the recurrence order")

    @classmethod
    def build(cls, initial: Sequence, recurrence: Sequence, base: Ring = QQ) -> RecurrentSequence:
        return cls(tuple(base(x) for x in initial), tuple(base(x) for x in recurrence), base)

    @property
    def order(self) -> int:
        return len(self.recurrence)

    def terms(self, count: int) -> list[Scalar]:
        out = list(self.initial[:count])
        z = self.base.zero
        while len(out) < count:
            n = len(out)
            out.append(sum((r * out[n - i] for i, r in enumerate(self.recurrence, 1)), z))
        return out

    def __call__(self, n: int) -> Scalar:
        return self.terms(n + 1)[n]

    def shift(self, k: int = 1) -> RecurrentSequence:
        """``(x^k · f)(x^n) = f(x^{n+k})``."""
        length = max(len(self.initial) - k, self.order)
        return RecurrentSequence(tuple(self.terms(k + length)[k:]), self.recurrence, self.base)

    def consistency_defect(self) -> tuple[int, Scalar, Scalar] | None:
        """First ``(n, stored a_n, value forced by the recurrence)`` that disagree."""
        d = self.order
        z = self.base.zero
        for n in range(d, len(self.initial)):
            forced = sum((r * self.initial[n - i] for i, r in enumerate(self.recurrence, 1)), z)
            if forced != self.initial[n]:
                return n, self.initial[n], forced
        return None


def geometric_sequence(c, base: Ring = QQ) -> RecurrentSequence:
    return RecurrentSequence.build([1], [c], base)


def delta_sequence(k: int, base: Ring = QQ) -> RecurrentSequence:
    """``x^n -> 1 if n == k else 0``."""
    return RecurrentSequence.build([0] * k + [1], [0] * (k + 1), base)


def fibonacci_sequence(base: Ring = QQ) -> RecurrentSequence:
    return RecurrentSequence.build([0, 1], [1, 1], base)


def harmonic_prefix(length: int) -> list[Scalar]:
    """``1, 1/2, 1/3, ...``, which satisfies no linear recurrence."""
    return [QQ(1) / (n + 1) for n in range(length)]


def hankel(prefix: Sequence[Scalar], rows: int, cols: int, base: Ring) -> Matrix:
    return Matrix.from_rows(base, [[prefix[i + j] for j in range(cols)] for i in range(rows)], cols=cols)


def _infer_ring(prefix: Sequence) -> Ring:
    for x in prefix:
        if hasattr(x, "p"):
            return Ring("Fp", x.p)
    return QQ


def minimal_recurrence(prefix: Sequence, max_order: int,
                       base: Ring | None = None) -> tuple[Scalar, ...] | None:
    """Least-order recurrence consistent with ``prefix``, or ``None`` below ``max_order``.

    Order ``d`` is consistent exactly when the Hankel system ``a_{n+d} = Σ r_i a_{n+d-i}``
    has a solution, i.e. appending the next Hankel column does not raise the rank.
    When the coefficients are not unique the free ones are set to zero.
    """
    if len(prefix) < 2 * max_order:
        raise ValueError(f"prefix of length {len(prefix)} is too short for order {max_order}")
    base = base or _infer_ring(prefix)
    a = [base(x) for x in prefix]
    length = len(a)
    for d in range(max_order + 1):
        rows = length - d
        if d == 0:
            if all(not x for x in a):
                return ()
            continue
        system = Matrix.from_rows(base, [[a[n + d - i] for i in range(1, d + 1)] for n in range(rows)], cols=d)
        sol = solve(system, [a[n + d] for n in range(rows)])
        if sol is not None:
            return sol
    return None


def hankel_ranks(prefix: Sequence, base: Ring | None = None) -> list[int]:
    """Ranks of the leading ``k x k`` Hankel matrices, ``k = 1 .. len(prefix) // 2``."""
    base = base or _infer_ring(prefix)
    return [rank(hankel(prefix, k, k, base)) for k in range(1, len(prefix) // 2 + 1)]


def membership_certificate(f: RecurrentSequence) -> tuple[bool, str]:
    """Decide ``f`` in the finite dual of ``R[x]`` and explain the verdict."""
    defect = f.consistency_defect()
    if defect is not None:
        n, stored, forced = defect
        return False, (f"claimed recurrence contradicts the initial terms: a_{n} = {stored} "
                       f"but the recurrence gives {forced}")
    d = f.order
    prefix = f.terms(2 * d + 6)
    ranks = [rank(hankel(prefix, k, k, f.base)) for k in range(d + 1, d + 4)]
    if any(r > d for r in ranks):
        return False, f"Hankel ranks {ranks} exceed the claimed order {d}"
    if minimal_recurrence(prefix, d, f.base) is None:
        return False, f"no recurrence of order <= {d} fits the generated prefix"
    return True, f"orbit spanned by at most {d} shifts; Hankel ranks {ranks} stay <= {d}"


def is_in_finite_dual_polyalg(f: RecurrentSequence) -> bool:
    return membership_certificate(f)[0]


def minimal_form(f: RecurrentSequence) -> RecurrentSequence:
    """The same functional with its least-order recurrence."""
    d = f.order
    prefix = f.terms(2 * d + 6)
    rec = minimal_recurrence(prefix, d, f.base)
    if rec is None:
        raise ValueError("sequence does not satisfy its claimed recurrence")
    g = RecurrentSequence(tuple(prefix[: len(rec)]), rec, f.base)
    if g.terms(len(prefix)) != prefix:
        raise ValueError("reduced recurrence does not reproduce the sequence")
    return g


@dataclass(frozen=True)
class OrbitReport:
    finitely_generated: bool
    orbit_basis: tuple[tuple[Scalar, ...], ...]
    truncation_bound: int

    @property
    def dimension(self) -> int:
        return len(self.orbit_basis)


def act(a: AlgebraPresentation, i: int, f: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """``(e_i · f)(b) = f(b e_i)`` in dual-basis coordinates."""
    z = a.base.zero
    out = []
    for b in range(a.rank):
        out.append(sum((c * f[k] for k, c in a.table.get((b, i), ())), z))
    return tuple(out)


def _extends_span(span: list[tuple], v: tuple, base: Ring) -> bool:
    if not any(v):
        return False
    if not span:
        return True
    m = Matrix.from_columns(base, span + [v], len(v))
    return field_rank(m) == len(span) + 1


def orbit_module(a: AlgebraPresentation, f: Sequence) -> OrbitReport:
    """Close ``{e_i · f}`` under the action until the span stops growing."""
    f = tuple(a.base(x) for x in f)
    if len(f) != a.rank:
        raise ValueError("functional length does not match the algebra rank")
    span: list[tuple] = []
    frontier = [f]
    while frontier:
        new = []
        for v in frontier:
            for i in range(a.rank):
                w = act(a, i, v)
                if _extends_span(span, w, a.base):
                    span.append(w)
                    new.append(w)
        frontier = new
    return OrbitReport(True, tuple(span), a.rank)


@dataclass(frozen=True)
class FiniteDualCoalgebra:
    """A finitely generated subcoalgebra of the finite dual, with its comparison map
    into the full dual.  ``kappa`` columns are the basis functionals in dual-basis
    coordinates (finite rank); it is ``None`` for the polynomial case, where the
    basis entries are :class:`RecurrentSequence` values."""

    ambient: Union[AlgebraPresentation, str]
    basis: tuple
    coalgebra: CoalgebraPresentation
    kappa: Matrix | None

    @property
    def is_polynomial(self) -> bool:
        return self.ambient == POLYNOMIAL

    @property
    def rank(self) -> int:
        return self.coalgebra.rank

    @property
    def comul(self):
        return self.coalgebra.comul

    @property
    def counit(self):
        return self.coalgebra.counit


def finite_dual_findim(a: AlgebraPresentation) -> FiniteDualCoalgebra:
    # a free carrier of finite rank is fgp over any base, Z included, so A° = A*
    coalg = dual_coalgebra_fgp(a)
    basis = tuple(coalg.carrier.basis_vector(i) for i in range(a.rank))
    return FiniteDualCoalgebra(a, basis, coalg, Matrix.identity(a.base, a.rank))


def orbit_coalgebra_polyalg(f: RecurrentSequence) -> FiniteDualCoalgebra:
    """Subcoalgebra of ``R[x]°`` spanned by ``f, x·f, .., x^{d-1}·f``.

    Δ is obtained by solving ``g_k(x^{m+n}) = Σ D[k][i][j] g_i(x^m) g_j(x^n)`` on a
    probe grid, then re-checked on a grid twice as large.
    """
    ok, why = membership_certificate(f)
    if not ok:
        raise ValueError(f"not in the finite dual: {why}")
    base = f.base
    if f.order == 0 or not any(f.terms(2 * f.order + 2)):
        empty = FreeModule(base, 0, ())
        return FiniteDualCoalgebra(POLYNOMIAL, (), CoalgebraPresentation.build(empty, {}, []), None)
    g = minimal_form(f)
    d = g.order
    basis = tuple(g.shift(i) for i in range(d))
    grid = max(d, 3)
    seq = g.terms(2 * (2 * grid) + d + 1)

    probes = Matrix.from_rows(base, [[seq[i + m] for i in range(d)] for m in range(grid)], cols=d)
    system = kronecker(probes, probes)
    comul = {}
    for k in range(d):
        rhs = [seq[k + m + n] for m in range(grid) for n in range(grid)]
        sol = solve(system, rhs)
        if sol is None:
            raise ValueError(f"probe system for basis element {k} is inconsistent")
        for idx, c in enumerate(sol):
            comul[k, idx // d, idx % d] = c

    big = 2 * grid
    for k in range(d):
        for m in range(big):
            for n in range(big):
                lhs = sum((c * seq[i + m] * seq[j + n] for (kk, i, j), c in comul.items() if kk == k), base.zero)
                if lhs != seq[k + m + n]:
                    raise ValueError(f"comultiplication fails re-verification at (k, m, n) = {(k, m, n)}")

    carrier = FreeModule(base, d, tuple("f" if i == 0 else f"x^{i}·f" for i in range(d)))
    coalg = CoalgebraPresentation.build(carrier, comul, [seq[i] for i in range(d)])
    return FiniteDualCoalgebra(POLYNOMIAL, basis, coalg, None)


def kappa_probe(fd: FiniteDualCoalgebra, probe_degree: int = DEFAULT_PROBE_DEGREE) -> Matrix:
    """Evaluations of the basis functionals (columns) on algebra probes (rows)."""
    if fd.is_polynomial:
        base = fd.coalgebra.base
        cols = [g.terms(probe_degree + 1) for g in fd.basis]
        return Matrix.from_columns(base, cols, probe_degree + 1)
    return fd.kappa


def kappa_is_injective(fd: FiniteDualCoalgebra, probe_degree: int = DEFAULT_PROBE_DEGREE) -> bool:
    p = kappa_probe(fd, probe_degree)
    return p.cols == 0 or field_rank(p) == p.cols


def phi_map(fda: FiniteDualCoalgebra, fdb: FiniteDualCoalgebra) -> LinearMap:
    """``A° ⊗ B° -> (A ⊗ B)°`` with ``κ_{A⊗B} ∘ Φ = Λ ∘ (κ_A ⊗ κ_B)``; certified invertible."""
    if fda.is_polynomial or fdb.is_polynomial:
        raise ValueError("phi_map is only available for finite-rank operands")
    a, b = fda.ambient, fdb.ambient
    fdab = finite_dual_findim(tensor_algebra(a, b))
    lam = lambda_map(a.carrier, b.carrier).matrix
    target = lam @ kronecker(fda.kappa, fdb.kappa)
    cols = []
    for j in range(target.cols):
        sol = solve(fdab.kappa, target.col(j))
        if sol is None:
            raise ValueError("Λ ∘ (κ ⊗ κ) leaves the image of κ for A ⊗ B")
        cols.append(sol)
    mat = Matrix.from_columns(a.base, cols, fdab.rank)
    if mat.rows != mat.cols or rank(mat) != mat.cols:
        raise ValueError("Φ is not invertible")
    return LinearMap(tensor_modules(fda.coalgebra.carrier, fdb.coalgebra.carrier), fdab.coalgebra.carrier, mat)


def _induced_report_findim(a: AlgebraPresentation, coalg: CoalgebraPresentation, kappa: Matrix,
                           limit: int) -> AxiomReport:
    if kappa.rows != a.rank or kappa.cols != coalg.rank:
        raise ValueError("κ does not map the coalgebra into the dual of the algebra")
    witnesses = []
    z = a.base.zero
    lam = lambda_map(a.carrier, a.carrier).matrix
    mul_t = a.mul_map.matrix.T
    cols = kappa.columns()
    for k in range(coalg.rank):
        # Λ (κ ⊗ κ) Δ e_k, one column at a time
        acc = [z] * (a.rank * a.rank)
        for i, j, c in coalg.terms.get(k, ()):
            for p, x in enumerate(cols[i]):
                if x:
                    cx = c * x
                    base_idx = p * a.rank
                    for q, y in enumerate(cols[j]):
                        if y:
                            acc[base_idx + q] += cx * y
        left = lam.apply(acc)
        right = mul_t.apply(cols[k])
        if left != right:
            witnesses.append(Witness("comultiplication square", (k,), left, right))
            if len(witnesses) >= limit:
                return AxiomReport.from_witnesses(witnesses)
    unit_eval = (Matrix.row_vector(a.base, a.unit) @ kappa).row(0)
    if unit_eval != coalg.counit:
        witnesses.append(Witness("counit square", (), coalg.counit, unit_eval))
    return AxiomReport.from_witnesses(witnesses[:limit])


def _induced_report_poly(fd: FiniteDualCoalgebra, probe_degree: int, limit: int) -> AxiomReport:
    base = fd.coalgebra.base
    z = base.zero
    seqs = [g.terms(2 * probe_degree + 1) for g in fd.basis]
    witnesses = []
    terms = fd.coalgebra.terms
    for k in range(fd.rank):
        for m in range(probe_degree + 1):
            for n in range(probe_degree + 1):
                lhs = sum((c * seqs[i][m] * seqs[j][n] for i, j, c in terms.get(k, ())), z)
                rhs = seqs[k][m + n]
                if lhs != rhs:
                    witnesses.append(Witness("comultiplication square", (k, m, n), (lhs,), (rhs,)))
                    if len(witnesses) >= limit:
                        return AxiomReport.from_witnesses(witnesses)
    evals = tuple(s[0] for s in seqs)
    if evals != fd.coalgebra.counit:
        witnesses.append(Witness("counit square", (), fd.coalgebra.counit, evals))
    return AxiomReport.from_witnesses(witnesses[:limit])


def check_induced_quotient(a: AlgebraPresentation | str, fd: FiniteDualCoalgebra,
                           probe_degree: int = DEFAULT_PROBE_DEGREE,
                           limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """``Λ ∘ (κ ⊗ κ) ∘ Δ = m* ∘ κ`` and ``ε = (evaluation at 1) ∘ κ``.

    Polynomial instances are checked on the grid ``m, n <= probe_degree``.
    """
    if (a == POLYNOMIAL) != fd.is_polynomial:
        raise ValueError("algebra and finite dual come from different families")
    if fd.is_polynomial:
        return _induced_report_poly(fd, probe_degree, limit)
    return _induced_report_findim(a, fd.coalgebra, fd.kappa, limit)


def check_minimality(a: AlgebraPresentation, c: CoalgebraPresentation, iota: LinearMap | Matrix) -> bool:
    """Whether every basis functional of ``c`` (embedded by ``iota``) has its orbit in ``A°``."""
    mat = iota.matrix if isinstance(iota, LinearMap) else iota
    if mat.shape != (a.rank, c.rank):
        raise ValueError("iota must map the coalgebra carrier into the dual of the algebra")
    if c.rank and field_rank(mat) != c.rank:
        raise ValueError("iota is not injective")
    if not _induced_report_findim(a, c, mat, 1).passed:
        raise ValueError("(C, iota) is not induced from the algebra")
    full = finite_dual_findim(a)
    for k in range(c.rank):
        for v in orbit_module(a, mat.col(k)).orbit_basis:
            if solve(full.kappa, v) is None:
                return False
    return True
