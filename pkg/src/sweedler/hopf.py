"""Bialgebras and Hopf algebras by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .duality import dual_algebra, dual_coalgebra_fgp
from .exact_linalg import Matrix, Ring
from .fgmod import FreeModule, LinearMap, dual_map, tensor_modules
from .structures import (
    DEFAULT_WITNESS_LIMIT,
    AlgebraPresentation,
    AxiomReport,
    CoalgebraPresentation,
    Witness,
    algebra_morphism_report,
    base_algebra,
    check_algebra_axioms,
    check_coalgebra_axioms,
    convolution,
    convolution_unit,
    monoid_algebra,
    opposite_algebra,
    tensor_algebra,
    validate_monoid_table,
)


@dataclass(frozen=True)
class BialgebraPresentation:
    algebra: AlgebraPresentation
    coalgebra: CoalgebraPresentation

    def __post_init__(self):
        if self.algebra.carrier.base != self.coalgebra.carrier.base or \
                self.algebra.rank != self.coalgebra.rank:
            raise ValueError("algebra and coalgebra must share a carrier")

    @property
    def carrier(self) -> FreeModule:
        return self.algebra.carrier

    @property
    def base(self) -> Ring:
        return self.algebra.base


@dataclass(frozen=True)
class HopfPresentation:
    bialgebra: BialgebraPresentation
    antipode: LinearMap

    def __post_init__(self):
        n = self.bialgebra.algebra.rank
        if self.antipode.matrix.shape != (n, n):
            raise ValueError("antipode must be an endomorphism of the carrier")

    @property
    def algebra(self) -> AlgebraPresentation:
        return self.bialgebra.algebra

    @property
    def coalgebra(self) -> CoalgebraPresentation:
        return self.bialgebra.coalgebra


def _prefixed(report: AxiomReport, prefix: str) -> list[Witness]:
    return [Witness(f"{prefix}: {w.law}", w.indices, w.left, w.right) for w in report.witnesses]


def check_bialgebra(b: BialgebraPresentation, limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """Algebra and coalgebra axioms, plus Δ and ε being algebra morphisms."""
    a, c = b.algebra, b.coalgebra
    witnesses = _prefixed(check_algebra_axioms(a, limit), "algebra")
    witnesses += _prefixed(check_coalgebra_axioms(c, limit), "coalgebra")
    if not witnesses:
        delta = LinearMap(a.carrier, tensor_modules(a.carrier, a.carrier), c.comul_map.matrix)
        witnesses += _prefixed(algebra_morphism_report(delta, a, tensor_algebra(a, a), limit), "comultiplication")
        eps = LinearMap(a.carrier, FreeModule(a.base, 1, ("1",)), c.counit_map.matrix)
        witnesses += _prefixed(algebra_morphism_report(eps, a, base_algebra(a.base), limit), "counit")
    return AxiomReport.from_witnesses(witnesses[:limit])


def check_antipode(h: HopfPresentation, limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """``S * id = id * S = e∘ε`` under convolution, and ``S`` anti-multiplicative."""
    a, c, s = h.algebra, h.coalgebra, h.antipode
    ident = LinearMap.identity(a.carrier)
    unit = convolution_unit(c, a).matrix
    witnesses = []
    for law, conv in (("S*id", convolution(s, ident, c, a)), ("id*S", convolution(ident, s, c, a))):
        for k in range(a.rank):
            if conv.matrix.col(k) != unit.col(k):
                witnesses.append(Witness(law, (k,), conv.matrix.col(k), unit.col(k)))
    witnesses += _prefixed(algebra_morphism_report(s, a, opposite_algebra(a), limit), "antipode to opposite")
    return AxiomReport.from_witnesses(witnesses[:limit])


def dual_bialgebra_findim(b: BialgebraPresentation) -> BialgebraPresentation:
    return BialgebraPresentation(dual_algebra(b.coalgebra), dual_coalgebra_fgp(b.algebra))


def dual_hopf_findim(h: HopfPresentation) -> HopfPresentation:
    if not check_antipode(h, limit=1).passed:
        raise ValueError("input antipode fails the antipode equations")
    db = dual_bialgebra_findim(h.bialgebra)
    s = LinearMap(db.carrier, db.carrier, dual_map(h.antipode).matrix)
    return HopfPresentation(db, s)


def group_inverses(table: Sequence[Sequence[int]]) -> list[int]:
    ident = validate_monoid_table(table)
    n = len(table)
    inv = []
    for g in range(n):
        h = next((h for h in range(n) if table[g][h] == ident and table[h][g] == ident), None)
        if h is None:
            raise ValueError(f"element {g} has no inverse; table is not a group")
        inv.append(h)
    return inv


def group_algebra_hopf(table: Sequence[Sequence[int]], base: Ring,
                       labels: Sequence[str] | None = None) -> HopfPresentation:
    """``R[G]`` with ``Δg = g ⊗ g``, ``εg = 1``, ``Sg = g⁻¹``."""
    inv = group_inverses(table)
    alg = monoid_algebra(table, base, labels)
    n = alg.rank
    coalg = CoalgebraPresentation.build(alg.carrier, {(g, g, g): 1 for g in range(n)}, [1] * n)
    s = Matrix.from_rows(base, [[1 if inv[j] == i else 0 for j in range(n)] for i in range(n)], cols=n)
    return HopfPresentation(BialgebraPresentation(alg, coalg), LinearMap(alg.carrier, alg.carrier, s))


# --- Sweedler's four-dimensional Hopf algebra --------------------------------

_H4_BASIS = ("", "g", "x", "gx")


def _h4_normal_form(word: str) -> tuple[int, str]:
    """Reduce a word in g, x using g² = 1, x² = 0, xg = -gx; returns (sign, word)."""
    sign = 1
    while True:
        if "xx" in word:
            return 0, ""
        if "gg" in word:
            word = word.replace("gg", "", 1)
            continue
        if "xg" in word:
            word = word.replace("xg", "gx", 1)
            sign = -sign
            continue
        return sign, word


def _h4_mul(u: dict[str, int], v: dict[str, int]) -> dict[str, int]:
    out: dict[str, int] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            s, w = _h4_normal_form(a + b)
            if s:
                out[w] = out.get(w, 0) + s * ca * cb
    return {w: c for w, c in out.items() if c}


def _h4_tensor_mul(u: dict, v: dict) -> dict:
    out: dict = {}
    for (a1, a2), ca in u.items():
        for (b1, b2), cb in v.items():
            s1, w1 = _h4_normal_form(a1 + b1)
            s2, w2 = _h4_normal_form(a2 + b2)
            if s1 and s2:
                out[w1, w2] = out.get((w1, w2), 0) + s1 * s2 * ca * cb
    return {k: c for k, c in out.items() if c}


def sweedler_h4(base: Ring) -> HopfPresentation:
    """Basis ``1, g, x, gx`` with ``g² = 1``, ``x² = 0``, ``xg = -gx``,
    ``Δg = g ⊗ g``, ``Δx = x ⊗ 1 + g ⊗ x``.

    All structure constants come from rewriting words to normal form.
    """
    if base.characteristic == 2:
        raise ValueError("Sweedler's algebra needs characteristic different from 2")
    idx = {w: i for i, w in enumerate(_H4_BASIS)}
    carrier = FreeModule(base, 4, ("1", "g", "x", "gx"))

    mul = {}
    for a in _H4_BASIS:
        for b in _H4_BASIS:
            for w, c in _h4_mul({a: 1}, {b: 1}).items():
                mul[idx[a], idx[b], idx[w]] = c

    gen_comul = {"g": {("g", "g"): 1}, "x": {("x", ""): 1, ("g", "x"): 1}}
    gen_counit = {"g": 1, "x": 0}
    # S(g) = g^-1; S(x) from m(S ⊗ id)Δx = ε(x) = 0, i.e. S(x) + S(g) x = 0
    g_inv = {"g": 1}
    gen_antipode = {"g": g_inv, "x": {w: -c for w, c in _h4_mul(g_inv, {"x": 1}).items()}}

    comul, counit, antipode_cols = {}, [], []
    for word in _H4_BASIS:
        d = {("", ""): 1}
        e = 1
        s = {"": 1}
        for letter in word:
            d = _h4_tensor_mul(d, gen_comul[letter])
            e *= gen_counit[letter]
            s = _h4_mul(gen_antipode[letter], s)  # anti-multiplicative
        for (w1, w2), c in d.items():
            comul[idx[word], idx[w1], idx[w2]] = c
        counit.append(e)
        antipode_cols.append([s.get(w, 0) for w in _H4_BASIS])

    alg = AlgebraPresentation.build(carrier, mul, [1, 0, 0, 0])
    coalg = CoalgebraPresentation.build(carrier, comul, counit)
    s_mat = Matrix.from_columns(base, antipode_cols, 4)
    return HopfPresentation(BialgebraPresentation(alg, coalg), LinearMap(carrier, carrier, s_mat))
