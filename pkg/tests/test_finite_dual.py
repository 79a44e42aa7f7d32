from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sweedler.corpus import algebra_corpus, recseq_corpus
from sweedler.duality import dual_coalgebra_fgp
from sweedler.exact_linalg import GF, QQ, ZZ, Matrix, rank
from sweedler.families import comatrix_coalgebra, cyclic_group_table, matrix_algebra
from sweedler.finite_dual import (
    POLYNOMIAL,
    FiniteDualCoalgebra,
    RecurrentSequence,
    check_induced_quotient,
    check_minimality,
    delta_sequence,
    fibonacci_sequence,
    finite_dual_findim,
    geometric_sequence,
    hankel,
    harmonic_prefix,
    is_in_finite_dual_polyalg,
    kappa_is_injective,
    kappa_probe,
    membership_certificate,
    minimal_recurrence,
    orbit_coalgebra_polyalg,
    orbit_module,
    phi_map,
)
from sweedler.structures import (
    CoalgebraPresentation,
    base_algebra,
    base_coalgebra,
    check_coalgebra_axioms,
    monoid_algebra,
)
from sweedler.verify import _perturbations


def plain_terms(initial, recurrence, count):
    """Independent term generator on Fractions."""
    a = [Fraction(x) for x in initial]
    while len(a) < count:
        a.append(sum(Fraction(r) * a[-i] for i, r in enumerate(recurrence, 1)))
    return a[:count]


def probe_identity_holds(fd: FiniteDualCoalgebra, bound: int) -> bool:
    """f_k(x^{m+n}) = Σ D[k][i][j] f_i(x^m) f_j(x^n) for all m, n ≤ bound."""
    seqs = [plain_terms(g.initial, g.recurrence, 2 * bound + 2) for g in fd.basis]
    for k in range(fd.rank):
        for m in range(bound + 1):
            for n in range(bound + 1):
                rhs = sum(c * seqs[i][m] * seqs[j][n] for (kk, i, j), c in fd.comul.items() if kk == k)
                if rhs != seqs[k][m + n]:
                    return False
    return True


# --- recurrent sequences -------------------------------------------------------------------

def test_terms_match_plain_generator():
    f = fibonacci_sequence()
    assert f.terms(10) == plain_terms([0, 1], [1, 1], 10)
    assert f(9) == 34
    assert f.shift(3).terms(4) == plain_terms([0, 1], [1, 1], 7)[3:]


def test_sequences_need_a_field():
    from sweedler.exact_linalg import ZZ

    with pytest.raises(ValueError):
        RecurrentSequence.build([1], [1], ZZ)


def test_minimal_recurrence_examples():
    assert minimal_recurrence([1] * 6, 3) == (1,)
    assert minimal_recurrence([0, 1, 1, 2, 3, 5, 8, 13], 4) == (1, 1)
    assert minimal_recurrence(harmonic_prefix(8), 3) is None
    assert minimal_recurrence([0] * 6, 3) == ()


def test_minimal_recurrence_prefix_too_short():
    with pytest.raises(ValueError):
        minimal_recurrence([1, 2, 3], 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_harmonic_hankel_determinants_nonzero(k):
    # independent oracle: the Hilbert-type Hankel matrices are nonsingular
    h = sympy.Matrix(k, k, lambda i, j: sympy.Rational(1, i + j + 1))
    assert h.det() != 0
    assert rank(hankel(harmonic_prefix(2 * k), k, k, QQ)) == k


def test_harmonic_rejected_at_order_four():
    assert minimal_recurrence(harmonic_prefix(10), 4) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.lists(st.integers(-3, 3), min_size=d, max_size=d),
    st.lists(st.integers(-3, 3), min_size=d, max_size=d))))
def test_minimal_recurrence_reproduces_sequence(data):
    initial, rec = data
    prefix = plain_terms(initial, rec, 12)
    found = minimal_recurrence(prefix, 3)
    assert found is not None and len(found) <= len(rec)
    d = len(found)
    assert plain_terms(prefix[:d], found, 12) == prefix


def test_membership_examples():
    assert is_in_finite_dual_polyalg(geometric_sequence(5))
    assert is_in_finite_dual_polyalg(delta_sequence(1))
    ok, why = membership_certificate(RecurrentSequence.build([1, 1, 3], [1, 1]))
    assert not ok and "contradicts" in why


def test_shift_closure_hankel_rank():
    for name, f in recseq_corpus():
        fd = orbit_coalgebra_polyalg(f)
        d = fd.rank
        prefix = f.terms(2 * d + 4)
        assert rank(hankel(prefix, d + 1, d + 1, QQ)) == d, name


# --- orbit coalgebras in Q[x]° ---------------------------------------------------------------

def test_geometric_is_grouplike():
    fd = orbit_coalgebra_polyalg(geometric_sequence(QQ(-2) / 3))
    assert dict(fd.comul) == {(0, 0, 0): 1} and fd.counit == (1,)


def test_delta_one_is_primitive():
    fd = orbit_coalgebra_polyalg(delta_sequence(1))
    # basis: f = δ_1, x·f = δ_0
    assert [g.terms(3) for g in fd.basis] == [[0, 1, 0], [1, 0, 0]]
    assert dict(fd.comul) == {(0, 0, 1): 1, (0, 1, 0): 1, (1, 1, 1): 1}
    assert fd.counit == (0, 1)


def test_fibonacci_orbit_coalgebra():
    fd = orbit_coalgebra_polyalg(fibonacci_sequence())
    assert fd.rank == 2
    assert probe_identity_holds(fd, 10)
    assert check_coalgebra_axioms(fd.coalgebra).passed


def test_zero_functional_gives_empty_coalgebra():
    fd = orbit_coalgebra_polyalg(RecurrentSequence.build([0, 0], [1, 1]))
    assert fd.rank == 0 and check_coalgebra_axioms(fd.coalgebra).passed


def test_orbit_rejects_non_members():
    with pytest.raises(ValueError):
        orbit_coalgebra_polyalg(RecurrentSequence.build([1, 1, 3], [1, 1]))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.lists(st.integers(-3, 3), min_size=d, max_size=d),
    st.lists(st.integers(-3, 3), min_size=d, max_size=d))))
def test_random_orbit_coalgebras(data):
    initial, rec = data
    f = RecurrentSequence.build(initial, rec)
    fd = orbit_coalgebra_polyalg(f)
    assert check_coalgebra_axioms(fd.coalgebra).passed
    assert check_induced_quotient(POLYNOMIAL, fd, 6).passed
    assert probe_identity_holds(fd, 6)
    assert kappa_is_injective(fd)


@given(st.integers(-4, 4).filter(bool))
def test_grouplike_characterization(c):
    fd = orbit_coalgebra_polyalg(geometric_sequence(c))
    assert fd.rank == 1 and fd.counit[0] != 0 and dict(fd.comul) == {(0, 0, 0): 1}


def test_orbit_over_fp():
    f = RecurrentSequence.build([0, 1], [1, 1], GF(7))
    fd = orbit_coalgebra_polyalg(f)
    assert fd.rank == 2 and check_induced_quotient(POLYNOMIAL, fd).passed


# --- κ ----------------------------------------------------------------------------------------

def test_kappa_probe_examples():
    fd = finite_dual_findim(matrix_algebra(2, QQ))
    assert kappa_probe(fd, 4) == Matrix.identity(QQ, 4)
    fib = orbit_coalgebra_polyalg(fibonacci_sequence())
    k = kappa_probe(fib, 4)
    assert k.shape == (5, 2) and rank(k) == 2


def test_kappa_injective_across_corpus():
    for name, a in algebra_corpus(QQ):
        assert kappa_is_injective(finite_dual_findim(a)), name
    for name, f in recseq_corpus():
        assert kappa_is_injective(orbit_coalgebra_polyalg(f), 8), name


# --- finite rank ------------------------------------------------------------------------------

def test_finite_dual_findim_examples():
    fd = finite_dual_findim(base_algebra(QQ))
    assert dict(fd.comul) == {(0, 0, 0): 1}
    z2 = monoid_algebra(cyclic_group_table(2), QQ)
    assert dict(finite_dual_findim(z2).comul) == dict(dual_coalgebra_fgp(z2).comul)
    m2 = finite_dual_findim(matrix_algebra(2, QQ))
    assert dict(m2.comul) == dict(comatrix_coalgebra(2, QQ).comul) and m2.kappa == Matrix.identity(QQ, 4)


def test_orbit_module_examples():
    assert orbit_module(base_algebra(QQ), [1]).dimension == 1
    trace = [1, 0, 0, 1]
    assert orbit_module(matrix_algebra(2, QQ), trace).dimension == 4
    assert orbit_module(matrix_algebra(2, QQ), [0, 0, 0, 0]).dimension == 0


def test_orbit_of_character_is_one_dimensional():
    z3 = monoid_algebra(cyclic_group_table(3), QQ)
    assert orbit_module(z3, [1, 1, 1]).dimension == 1
    assert orbit_module(z3, [1, 0, 0]).dimension == 3


def test_phi_map_examples():
    one = finite_dual_findim(base_algebra(QQ))
    assert phi_map(one, one).matrix.to_lists() == [[1]]
    z2 = finite_dual_findim(monoid_algebra(cyclic_group_table(2), QQ))
    phi = phi_map(z2, z2)
    assert phi.matrix.shape == (4, 4) and rank(phi.matrix) == 4


def test_phi_map_rejects_polynomial_operands():
    fib = orbit_coalgebra_polyalg(fibonacci_sequence())
    with pytest.raises(ValueError):
        phi_map(fib, fib)


# --- induced quotients and minimality ----------------------------------------------------------

def test_induced_quotient_on_corpus(algebras):
    for name, a in algebras:
        assert check_induced_quotient(a, finite_dual_findim(a)).passed, name


def test_perturbed_comultiplication_fails_with_witness():
    a = matrix_algebra(2, QQ)
    fd = finite_dual_findim(a)
    comul = dict(fd.comul)
    comul[0, 1, 1] = comul.get((0, 1, 1), 0) + 1
    bad = FiniteDualCoalgebra(a, fd.basis, CoalgebraPresentation.build(fd.coalgebra.carrier, comul, fd.counit),
                              fd.kappa)
    report = check_induced_quotient(a, bad)
    assert not report.passed and report.witnesses[0].law == "comultiplication square"


def test_perturbed_counit_fails():
    a = monoid_algebra(cyclic_group_table(3), QQ)
    fd = finite_dual_findim(a)
    bad = FiniteDualCoalgebra(a, fd.basis, CoalgebraPresentation.build(fd.coalgebra.carrier, fd.comul, [1, 1, 0]),
                              fd.kappa)
    assert check_induced_quotient(a, bad).witnesses[0].law == "counit square"


def test_rank_one_induced():
    a = base_algebra(QQ)
    assert check_induced_quotient(a, finite_dual_findim(a)).passed


def test_family_mismatch_rejected():
    with pytest.raises(ValueError):
        check_induced_quotient(POLYNOMIAL, finite_dual_findim(base_algebra(QQ)))


def test_minimality_examples():
    z2 = monoid_algebra(cyclic_group_table(2), QQ)
    fd = finite_dual_findim(z2)
    assert check_minimality(z2, fd.coalgebra, fd.kappa)
    assert check_minimality(z2, base_coalgebra(QQ), Matrix.column(QQ, [1, -1]))
    for name, a in algebra_corpus(QQ):
        fd = finite_dual_findim(a)
        assert check_minimality(a, fd.coalgebra, fd.kappa), name


def test_minimality_rejects_bad_embeddings():
    z2 = monoid_algebra(cyclic_group_table(2), QQ)
    with pytest.raises(ValueError):
        check_minimality(z2, base_coalgebra(QQ), Matrix.column(QQ, [1, 2]))
    with pytest.raises(ValueError):
        check_minimality(z2, base_coalgebra(QQ), Matrix.column(QQ, [0, 0]))


def test_findim_dual_over_integers_is_induced_and_rigid():
    for name, a in algebra_corpus(ZZ):
        fd = finite_dual_findim(a)
        assert check_induced_quotient(a, fd).passed, name
        assert all(not check_induced_quotient(a, p, limit=1).passed for _, p in _perturbations(fd)), name
