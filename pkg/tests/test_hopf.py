from itertools import product

import pytest

from sweedler.exact_linalg import GF, QQ, Matrix, kernel_basis, kronecker, solve
from sweedler.families import cyclic_group_table, symmetric_group_table
from sweedler.fgmod import LinearMap, evaluation
from sweedler.hopf import (
    BialgebraPresentation,
    HopfPresentation,
    check_antipode,
    check_bialgebra,
    dual_bialgebra_findim,
    dual_hopf_findim,
    group_algebra_hopf,
    group_inverses,
    sweedler_h4,
)
from sweedler.structures import (
    CoalgebraPresentation,
    algebra_morphism_report,
    base_algebra,
    base_coalgebra,
    coalgebra_morphism_report,
    convolution,
)


def antipode_power(h: HopfPresentation, k: int) -> Matrix:
    s = Matrix.identity(h.algebra.base, h.algebra.rank)
    for _ in range(k):
        s = h.antipode.matrix @ s
    return s


def ident(h):
    return Matrix.identity(h.algebra.base, h.algebra.rank)


# --- bialgebra checks ----------------------------------------------------------------------

def test_trivial_bialgebra_passes():
    b = BialgebraPresentation(base_algebra(QQ), base_coalgebra(QQ))
    assert check_bialgebra(b).passed


def test_z3_bialgebra_passes():
    assert check_bialgebra(group_algebra_hopf(cyclic_group_table(3), QQ).bialgebra).passed


def test_broken_coproduct_fails():
    h = group_algebra_hopf(cyclic_group_table(2), QQ)
    comul = {(0, 0, 0): 1, (1, 1, 0): 1}  # Δg = g ⊗ 1
    c = CoalgebraPresentation.build(h.algebra.carrier, comul, [1, 1])
    assert not check_bialgebra(BialgebraPresentation(h.algebra, c)).passed


def test_carriers_must_match():
    with pytest.raises(ValueError):
        BialgebraPresentation(base_algebra(QQ), group_algebra_hopf(cyclic_group_table(2), QQ).coalgebra)


# --- antipodes -----------------------------------------------------------------------------

def test_antipode_examples():
    z2 = group_algebra_hopf(cyclic_group_table(2), QQ)
    assert z2.antipode.matrix == ident(z2) and check_antipode(z2).passed
    z3 = group_algebra_hopf(cyclic_group_table(3), QQ)
    assert z3.antipode.matrix.to_lists() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert check_antipode(z3).passed
    wrong = HopfPresentation(z3.bialgebra, LinearMap.identity(z3.algebra.carrier))
    assert not check_antipode(wrong).passed


def test_group_algebra_antipode_is_involution():
    for n in range(1, 7):
        h = group_algebra_hopf(cyclic_group_table(n), QQ)
        assert antipode_power(h, 2) == ident(h)
    table, labels = symmetric_group_table(3)
    h = group_algebra_hopf(table, QQ, labels)
    assert antipode_power(h, 2) == ident(h)


def test_s3_properties():
    table, labels = symmetric_group_table(3)
    h = group_algebra_hopf(table, QQ, labels)
    assert h.algebra.rank == 6
    assert not h.algebra.is_commutative() and h.coalgebra.is_cocommutative()
    assert check_bialgebra(h.bialgebra).passed and check_antipode(h).passed


def test_group_inverses_reject_monoids():
    with pytest.raises(ValueError):
        group_inverses([[0, 1], [1, 1]])


def test_trivial_group():
    h = group_algebra_hopf([[0]], QQ)
    assert h.algebra.rank == 1 and check_antipode(h).passed


def convolution_inverse_space(h: HopfPresentation) -> int:
    """Dimension of {T : T * id = 0}; zero means the antipode is unique."""
    a, c = h.algebra, h.coalgebra
    n = a.rank
    idm = LinearMap.identity(a.carrier)
    cols = []
    for p, q in product(range(n), repeat=2):
        e = Matrix.from_rows(a.base, [[1 if (i, j) == (p, q) else 0 for j in range(n)] for i in range(n)])
        conv = convolution(LinearMap(a.carrier, a.carrier, e), idm, c, a).matrix
        cols.append([x for row in conv.to_lists() for x in row])
    system = Matrix.from_columns(a.base, cols, n * n)
    return kernel_basis(system).cols


def test_antipode_uniqueness(hopf_algebras):
    for name, h in hopf_algebras:
        assert convolution_inverse_space(h) == 0, name


# --- duals ---------------------------------------------------------------------------------

def test_dual_of_trivial_bialgebra():
    b = BialgebraPresentation(base_algebra(QQ), base_coalgebra(QQ))
    d = dual_bialgebra_findim(b)
    assert dict(d.algebra.mul) == dict(b.algebra.mul) and dict(d.coalgebra.comul) == dict(b.coalgebra.comul)


def test_dual_of_z3_is_function_bialgebra():
    d = dual_bialgebra_findim(group_algebra_hopf(cyclic_group_table(3), QQ).bialgebra)
    assert dict(d.algebra.mul) == {(i, i, i): 1 for i in range(3)}
    assert d.algebra.unit == (1, 1, 1)
    assert dict(d.coalgebra.comul) == {(k, i, j): 1 for i in range(3) for j in range(3) for k in [(i + j) % 3]}
    assert d.coalgebra.counit == (1, 0, 0)
    assert check_bialgebra(d).passed


def test_double_dual_via_evaluation(hopf_algebras):
    for name, h in hopf_algebras:
        dd = dual_bialgebra_findim(dual_bialgebra_findim(h.bialgebra))
        ev = evaluation(h.algebra.carrier)
        ev = LinearMap(h.algebra.carrier, dd.carrier, ev.matrix)
        assert algebra_morphism_report(ev, h.algebra, dd.algebra).passed, name
        assert coalgebra_morphism_report(ev, h.coalgebra, dd.coalgebra).passed, name


def test_dual_hopf_transfers_antipode(hopf_algebras):
    for name, h in hopf_algebras:
        d = dual_hopf_findim(h)
        assert check_bialgebra(d.bialgebra).passed, name
        assert check_antipode(d).passed, name
        assert d.antipode.matrix == h.antipode.matrix.T


def test_dual_z3_antipode_composes_with_inversion():
    d = dual_hopf_findim(group_algebra_hopf(cyclic_group_table(3), QQ))
    # S*(δ_k) = δ_{-k}
    for k in range(3):
        assert d.antipode.matrix.col(k) == tuple(1 if i == (-k) % 3 else 0 for i in range(3))


def test_dual_z2_is_self_dual_rank_two():
    d = dual_hopf_findim(group_algebra_hopf(cyclic_group_table(2), QQ))
    assert d.algebra.rank == 2 and check_antipode(d).passed


def test_involution_transfers(hopf_algebras):
    for name, h in hopf_algebras:
        if antipode_power(h, 2) == ident(h):
            assert antipode_power(dual_hopf_findim(h), 2) == ident(h), name


def test_dual_hopf_rejects_bad_antipode():
    z3 = group_algebra_hopf(cyclic_group_table(3), QQ)
    with pytest.raises(ValueError):
        dual_hopf_findim(HopfPresentation(z3.bialgebra, LinearMap.identity(z3.algebra.carrier)))


def test_cocommutative_dualizes_to_commutative(hopf_algebras):
    for name, h in hopf_algebras:
        if h.coalgebra.is_cocommutative():
            assert dual_bialgebra_findim(h.bialgebra).algebra.is_commutative(), name


# --- Sweedler's algebra --------------------------------------------------------------------

def h4_representation():
    """A faithful 4-dimensional representation: g and x as 4x4 matrices."""
    g = Matrix.from_rows(QQ, [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    x = Matrix.from_rows(QQ, [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    one = Matrix.identity(QQ, 4)
    return [one, g, x, g @ x]


def flatten(m: Matrix):
    return [v for row in m.to_lists() for v in row]


def test_h4_multiplication_matches_representation():
    h = sweedler_h4(QQ)
    basis = h4_representation()
    g, x = basis[1], basis[2]
    assert g @ g == basis[0] and (x @ x).is_zero() and x @ g == -(g @ x)
    decomposer = Matrix.from_columns(QQ, [flatten(b) for b in basis], 16)
    for i, j in product(range(4), repeat=2):
        coords = solve(decomposer, flatten(basis[i] @ basis[j]))
        assert coords == h.algebra.basis_product(i, j)


def test_h4_coproduct_matches_representation():
    h = sweedler_h4(QQ)
    basis = h4_representation()
    one, g, x, gx = basis
    delta = {0: kronecker(one, one), 1: kronecker(g, g), 2: kronecker(x, one) + kronecker(g, x)}
    delta[3] = delta[1] @ delta[2]
    pairs = [kronecker(a, b) for a in basis for b in basis]
    decomposer = Matrix.from_columns(QQ, [flatten(p) for p in pairs], 256)
    for k in range(4):
        coords = solve(decomposer, flatten(delta[k]))
        expected = tuple(h.coalgebra.comul.get((k, i, j), 0) for i in range(4) for j in range(4))
        assert coords == expected


def test_h4_passes_all_checks():
    h = sweedler_h4(QQ)
    assert check_bialgebra(h.bialgebra).passed and check_antipode(h).passed
    d = dual_hopf_findim(h)
    assert check_bialgebra(d.bialgebra).passed and check_antipode(d).passed


def test_h4_antipode_has_order_four():
    h = sweedler_h4(QQ)
    assert antipode_power(h, 2) != ident(h)
    assert antipode_power(h, 4) == ident(h)
    d = dual_hopf_findim(h)
    assert antipode_power(d, 2) != ident(d)
    assert antipode_power(d, 4) == ident(d)


def test_h4_needs_odd_characteristic():
    with pytest.raises(ValueError):
        sweedler_h4(GF(2))
    assert check_antipode(sweedler_h4(GF(3))).passed


# --- characters: abelian group algebras are self-dual ------------------------------------

def primitive_root_of_unity(n: int, p: int) -> int:
    return next(z for z in range(1, p) if pow(z, n, p) == 1 and all(pow(z, k, p) != 1 for k in range(1, n)))


@pytest.mark.parametrize("n", range(1, 7))
def test_cyclic_group_algebra_self_dual_over_f61(n):
    # 60 is divisible by every n <= 6, so F_61 has the needed roots of unity
    p = 61
    base = GF(p)
    h = group_algebra_hopf(cyclic_group_table(n), base)
    d = dual_hopf_findim(h)
    z = primitive_root_of_unity(n, p)
    # g^k -> (χ_j -> ζ^{jk}), a function on the character group
    table = Matrix.from_rows(base, [[pow(z, j * k, p) for k in range(n)] for j in range(n)])
    phi = LinearMap(h.algebra.carrier, d.algebra.carrier, table)
    assert kernel_basis(table).cols == 0
    assert algebra_morphism_report(phi, h.algebra, d.algebra).passed
    assert coalgebra_morphism_report(phi, h.coalgebra, d.coalgebra).passed
    assert phi.matrix @ h.antipode.matrix == d.antipode.matrix @ phi.matrix
