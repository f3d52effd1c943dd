import random

import pytest

from necklacekit import (
    BoundExceeded,
    FormBasisElement,
    FormSum,
    NecklaceWord,
    Path,
    PathSum,
    contract,
    d_of_path_sum,
    differential,
    dr0_dimension,
    euler_derivation,
    form_of,
    form_unit,
    graded_homology_dim,
    is_symplectic,
    karoubi_dim,
    karoubi_homology_dim,
    lie_derivative,
    necklace_differential,
    omega_basis,
    partial_derivative,
    reduce_to_dr1,
    symplectic_form,
    tau,
    zero_derivation,
)

from conftest import random_derivation, random_form, random_necklace, random_path_sum
from oracles import count_necklaces_by_rotation


def _d_arrow(dq, label):
    return d_of_path_sum(PathSum.of(Path.of_arrow(dq, label)))


def test_differential_examples(calogero_double):
    a = Path.of_arrow(calogero_double, "a")
    da = d_of_path_sum(PathSum.of(a))
    assert da == FormSum.of(FormBasisElement(Path.trivial(calogero_double, 2), (a,)))
    assert d_of_path_sum(PathSum.of(Path.trivial(calogero_double, 1))).is_zero()


def test_differential_squares_to_zero(calogero_double):
    rng = random.Random(20)
    for _ in range(100):
        x = random_form(rng, calogero_double)
        assert differential(differential(x)).is_zero()


def test_multiply_unit_and_degree_zero(calogero_double):
    rng = random.Random(21)
    one = form_unit(calogero_double)
    for _ in range(50):
        x = random_form(rng, calogero_double)
        assert x * one == x
        assert one * x == x
        p = random_path_sum(rng, calogero_double)
        q = random_path_sum(rng, calogero_double)
        assert form_of(p) * form_of(q) == form_of(p * q)


def test_multiply_da_times_astar_frozen(calogero_double):
    # (da) . a* = d(a a*) - a d(a*) expanded in the tuple basis
    a = Path.of_arrow(calogero_double, "a")
    astar = Path.of_arrow(calogero_double, "a*")
    product = _d_arrow(calogero_double, "a") * form_of(PathSum.of(astar))
    cycle_at_2 = Path(calogero_double, ("a*", "a"))
    expected = FormSum.of(
        FormBasisElement(Path.trivial(calogero_double, 2), (cycle_at_2,))
    ) - FormSum.of(FormBasisElement(a, (astar,)))
    assert product == expected


def test_multiply_associative_random(calogero_double):
    rng = random.Random(22)
    for _ in range(200):
        x = random_form(rng, calogero_double, max_degree=2, max_length=3)
        y = random_form(rng, calogero_double, max_degree=2, max_length=3)
        z = random_form(rng, calogero_double, max_degree=2, max_length=3)
        assert (x * y) * z == x * (y * z)


def test_differential_is_graded_leibniz(calogero_double):
    rng = random.Random(23)
    for _ in range(200):
        x = random_form(rng, calogero_double, max_degree=2, max_length=3, max_terms=1)
        y = random_form(rng, calogero_double, max_degree=2, max_length=3, max_terms=1)
        degrees = x.degrees()
        if len(degrees) != 1:
            continue
        sign = -1 if degrees.pop() % 2 else 1
        assert differential(x * y) == differential(x) * y + sign * (x * differential(y))


def test_contract_generator_rules(calogero_double):
    rng = random.Random(24)
    theta = random_derivation(rng, calogero_double)
    for label in ("a", "a*", "b", "b*"):
        assert contract(theta, _d_arrow(calogero_double, label)) == form_of(
            theta.of_arrow(label)
        )
    x = random_path_sum(rng, calogero_double)
    assert contract(theta, form_of(x)).is_zero()


def test_contract_euler_on_symplectic_form(calogero, calogero_double):
    omega = symplectic_form(calogero)
    contraction = contract(euler_derivation(calogero_double), omega)
    expected = FormSum.zero()
    for label in ("a", "b"):
        arrow_path = Path.of_arrow(calogero_double, label)
        star_path = Path.of_arrow(calogero_double, label + "*")
        expected = expected + 2 * (
            form_of(PathSum.of(star_path)) * _d_arrow(calogero_double, label)
        )
        cycle = Path(calogero_double, (label, label + "*"))
        expected = expected - d_of_path_sum(PathSum.of(cycle))
    assert contraction == expected
    reduced = reduce_to_dr1(contraction)
    expected_reduced = FormSum.zero()
    for label in ("a", "b"):
        arrow_path = Path.of_arrow(calogero_double, label)
        star_path = Path.of_arrow(calogero_double, label + "*")
        expected_reduced = expected_reduced + FormSum.of(
            FormBasisElement(star_path, (arrow_path,))
        )
        expected_reduced = expected_reduced - FormSum.of(
            FormBasisElement(arrow_path, (star_path,))
        )
    assert reduced == expected_reduced


def test_lie_derivative_euler_grades_by_length(calogero_double):
    rng = random.Random(25)
    euler = euler_derivation(calogero_double)
    for _ in range(100):
        x = random_form(rng, calogero_double, max_terms=1)
        (elt, coeff), = list(x.terms())
        assert lie_derivative(euler, x) == elt.total_length * x
    e_form = form_of(PathSum.of(Path.trivial(calogero_double, 1)))
    assert lie_derivative(euler, e_form).is_zero()


def test_cartan_homotopy_and_operator_identities(calogero_double):
    rng = random.Random(26)
    from necklacekit import derivation_commutator

    for _ in range(200):
        theta = random_derivation(rng, calogero_double, max_len=2)
        gamma = random_derivation(rng, calogero_double, max_len=2)
        x = random_form(rng, calogero_double, max_degree=3, max_length=4, max_terms=1)
        assert lie_derivative(theta, x) == contract(theta, differential(x)) + differential(
            contract(theta, x)
        )
        bracket = derivation_commutator(theta, gamma)
        lhs = lie_derivative(theta, contract(gamma, x)) - contract(
            gamma, lie_derivative(theta, x)
        )
        assert lhs == contract(bracket, x)
        lhs2 = lie_derivative(theta, lie_derivative(gamma, x)) - lie_derivative(
            gamma, lie_derivative(theta, x)
        )
        assert lhs2 == lie_derivative(bracket, x)


def test_graded_homology(calogero_double, a1_tilde_double):
    for dq in (calogero_double, a1_tilde_double):
        assert graded_homology_dim(dq, 0, 0) == 2
        for length in range(1, 5):
            assert graded_homology_dim(dq, 0, length) == 0
        for degree in range(1, 4):
            for length in range(1, 5):
                assert graded_homology_dim(dq, degree, length, length_cap=6) == 0


def test_graded_bounds_error(calogero_double):
    with pytest.raises(BoundExceeded):
        graded_homology_dim(calogero_double, 5, 1)
    with pytest.raises(BoundExceeded):
        karoubi_dim(calogero_double, 1, 9)


def test_karoubi_degree_zero_counts_necklaces(one_loop_double, calogero_double):
    dim, reps = karoubi_dim(one_loop_double, 0, 2)
    assert dim == 3
    for dq in (one_loop_double, calogero_double):
        for length in range(0, 5):
            dim, reps = karoubi_dim(dq, 0, length, length_cap=6)
            assert dim == dr0_dimension(dq, length)
            assert dim == count_necklaces_by_rotation(dq, length)
            assert len(reps) == dim


def test_karoubi_dr1_piece_calogero(calogero_double):
    dim, reps = karoubi_dim(calogero_double, 1, 1)
    assert dim == 2
    tails = sorted(r.tails[0].arrows[0] for r in reps)
    assert tails == ["b", "b*"]


def test_karoubi_complex_acyclic(calogero_double, a1_tilde_double):
    for dq in (calogero_double, a1_tilde_double):
        for degree in range(1, 4):
            for length in range(1, 5):
                assert karoubi_homology_dim(dq, degree, length, length_cap=6) == 0


def test_karoubi_degree_zero_homology_is_vertex_algebra(calogero_double):
    assert karoubi_homology_dim(calogero_double, 0, 0) == 2
    for length in range(1, 5):
        assert karoubi_homology_dim(calogero_double, 0, length) == 0


def test_symplectic_form_shape(calogero, calogero_double, one_loop):
    omega = symplectic_form(calogero)
    assert set(omega.degrees()) == {2}
    assert len(omega) == 2
    a = Path.of_arrow(calogero_double, "a")
    astar = Path.of_arrow(calogero_double, "a*")
    assert omega.coefficient(
        FormBasisElement(Path.trivial(calogero_double, 1), (astar, a))
    ) == 1
    from necklacekit import Quiver

    assert symplectic_form(Quiver(1, ())).is_zero()
    omega_loop = symplectic_form(one_loop)
    assert len(omega_loop) == 1


def test_tau_equals_necklace_differential(one_loop_double, calogero_double):
    from necklacekit import hamiltonian_derivation

    w = NecklaceWord(one_loop_double, ("x", "x"))
    x_path = Path.of_arrow(one_loop_double, "x")
    expected = 2 * FormSum.of(FormBasisElement(x_path, (x_path,)))
    assert tau(hamiltonian_derivation(w)) == expected
    assert necklace_differential(w) == expected

    rng = random.Random(27)
    for dq in (one_loop_double, calogero_double):
        for _ in range(25):
            word = random_necklace(rng, dq, max_len=4)
            assert tau(hamiltonian_derivation(word)) == necklace_differential(word)
    assert tau(zero_derivation(calogero_double)).is_zero()


def test_hamiltonian_derivations_are_symplectic(one_loop_double, calogero_double):
    from necklacekit import hamiltonian_derivation

    rng = random.Random(28)
    for dq in (one_loop_double, calogero_double):
        for _ in range(10):
            word = random_necklace(rng, dq, max_len=4)
            assert is_symplectic(hamiltonian_derivation(word), length_cap=6)


def test_differential_matches_partials_in_dr1(calogero_double, one_loop_double):
    rng = random.Random(29)
    for dq in (calogero_double, one_loop_double):
        for _ in range(25):
            w = random_necklace(rng, dq, max_len=4)
            expected = FormSum.zero()
            for arr in dq.arrows:
                partial = partial_derivative(w, arr.label)
                arrow_path = Path.of_arrow(dq, arr.label)
                for path, coeff in partial.terms():
                    expected = expected + coeff * FormSum.of(
                        FormBasisElement(path, (arrow_path,))
                    )
            assert necklace_differential(w) == expected


def test_reduction_independent_of_rotation(calogero_double):
    cycle = Path(calogero_double, ("a", "b", "a*"))
    reductions = []
    for shift in range(3):
        labels = cycle.arrows[shift:] + cycle.arrows[:shift]
        rotated = Path(calogero_double, labels)
        reductions.append(reduce_to_dr1(d_of_path_sum(PathSum.of(rotated))))
    assert reductions[0] == reductions[1] == reductions[2]


def test_omega_basis_dimensions(calogero_double):
    # paths of length l cut at chosen points: dim = #paths x #compositions
    path_counts = {l: len(omega_basis(calogero_double, 0, l)) for l in range(5)}
    assert path_counts == {0: 2, 1: 4, 2: 10, 3: 24, 4: 58}
    assert len(omega_basis(calogero_double, 1, 1)) == 4
    assert len(omega_basis(calogero_double, 2, 4)) == 6 * 58
    assert len(omega_basis(calogero_double, 3, 3)) == 24
