"""Dual algebra of a coalgebra, dual coalgebra of a finite-rank algebra, and the
hom-set bijection between algebra maps ``A -> C*`` and coalgebra maps ``C -> A*``."""

from __future__ import annotations

from .exact_linalg import Matrix, inverse, kronecker
from .fgmod import (
    FreeModule,
    LinearMap,
    dual_map,
    dual_module,
    evaluation,
    is_isomorphism,
    lambda_map,
)
from .structures import (
    AlgebraPresentation,
    AxiomReport,
    CoalgebraPresentation,
    Witness,
    algebra_morphism_report,
    coalgebra_morphism_report,
)


def algebra_from_maps(carrier: FreeModule, mul: Matrix, unit: Matrix) -> AlgebraPresentation:
    n = carrier.rank
    consts = {(i, j, k): mul[k, i * n + j] for k in range(n) for i in range(n) for j in range(n)}
    return AlgebraPresentation.build(carrier, consts, unit.col(0))


def coalgebra_from_maps(carrier: FreeModule, comul: Matrix, counit: Matrix) -> CoalgebraPresentation:
    n = carrier.rank
    consts = {(k, i, j): comul[i * n + j, k] for k in range(n) for i in range(n) for j in range(n)}
    return CoalgebraPresentation.build(carrier, consts, counit.row(0))


def dual_algebra(c: CoalgebraPresentation) -> AlgebraPresentation:
    """``C*`` with multiplication ``Δ* ∘ Λ`` and unit ``ε*``."""
    lam = lambda_map(c.carrier, c.carrier)
    mul = dual_map(c.comul_map) @ lam
    return algebra_from_maps(dual_module(c.carrier), mul.matrix, dual_map(c.counit_map).matrix)


def dual_coalgebra_fgp(a: AlgebraPresentation) -> CoalgebraPresentation:
    """``A*`` with comultiplication ``Λ⁻¹ ∘ m*`` and counit ``e*``."""
    lam = lambda_map(a.carrier, a.carrier)
    lam_inv = LinearMap(lam.codomain, lam.domain, inverse(lam.matrix))
    comul = lam_inv @ dual_map(a.mul_map)
    return coalgebra_from_maps(dual_module(a.carrier), comul.matrix, dual_map(a.unit_map).matrix)


def transport_algebra(f: LinearMap, a: AlgebraPresentation) -> AlgebraPresentation:
    """Structure constants of ``a`` moved along an isomorphism ``f``."""
    f_inv = inverse(f.matrix)
    mul = f.matrix @ a.mul_map.matrix @ kronecker(f_inv, f_inv)
    unit = f.matrix @ a.unit_map.matrix
    return algebra_from_maps(f.codomain, mul, unit)


def verify_fgp_duality(a: AlgebraPresentation) -> AxiomReport:
    """Evaluation ``A -> A**`` must be an algebra isomorphism onto the double dual."""
    ev = evaluation(a.carrier)
    double = dual_algebra(dual_coalgebra_fgp(a))
    report = algebra_morphism_report(ev, a, double)
    if not is_isomorphism(ev):
        report = report.merge(AxiomReport.from_witnesses(
            [Witness("evaluation invertible", (), (), ())]))
    elif report.passed:
        moved = transport_algebra(ev, a)
        if dict(moved.mul) != dict(double.mul) or moved.unit != double.unit:
            report = AxiomReport.from_witnesses(
                [Witness("structure constants", (), tuple(moved.mul.values()), tuple(double.mul.values()))])
    return report


def transpose_forward(phi: LinearMap, a: AlgebraPresentation,
                      c: CoalgebraPresentation) -> tuple[LinearMap, bool]:
    """Send an algebra map ``φ: A -> C*`` to ``φ̂: C -> A*``, ``φ̂(x)(y) = φ(y)(x)``.

    Returns the transpose and whether it is a coalgebra morphism into the dual
    coalgebra of ``A``.
    """
    target = dual_algebra(c)
    if not algebra_morphism_report(phi, a, target, limit=1).passed:
        raise ValueError("phi is not an algebra morphism A -> C*")
    hat = dual_map(phi) @ evaluation(c.carrier)
    hat = LinearMap(c.carrier, dual_module(a.carrier), hat.matrix)
    return hat, coalgebra_morphism_report(hat, c, dual_coalgebra_fgp(a), limit=1).passed


def transpose_backward(psi: LinearMap, c: CoalgebraPresentation,
                       a: AlgebraPresentation) -> tuple[LinearMap, bool]:
    """Inverse direction: a coalgebra map ``ψ: C -> A*`` to an algebra map ``A -> C*``."""
    if not coalgebra_morphism_report(psi, c, dual_coalgebra_fgp(a), limit=1).passed:
        raise ValueError("psi is not a coalgebra morphism C -> A*")
    back = dual_map(psi) @ evaluation(a.carrier)
    back = LinearMap(a.carrier, dual_module(c.carrier), back.matrix)
    return back, algebra_morphism_report(back, a, dual_algebra(c), limit=1).passed
