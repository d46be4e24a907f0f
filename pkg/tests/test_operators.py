"""Space/operator scaffolding, word evaluation, and the symmetry checker."""

import numpy as np
import pytest

from spreadlab.boolean import BooleanSpace
from spreadlab.monoid import psi, theta, tau_pow, cycle_for_interval, localize
from spreadlab.monotone import MonotoneBasis, lambda_forms
from spreadlab.operators import (
    GramError,
    Kind,
    Letter,
    Operator,
    TruncatedSpace,
    Word,
    annihilator,
    creator,
    evaluate_word,
    metric_adjoint,
    mixture,
    position,
    relabel,
    word,
)
from spreadlab.qfock import QBasis
from spreadlab.symmetry import (
    check_symmetry,
    empty_family,
    permutation_family,
    shift_family,
    spreading_family,
)


# ---------------------------------------------------------------------------
# Letters and words


def test_letter_validation():
    with pytest.raises(ValueError):
        Letter(Kind.UNIT, 3)
    with pytest.raises(ValueError):
        Letter(Kind.CREATOR)


def test_word_adjoint_reverses_and_swaps():
    w = word(creator(0), annihilator(1), position(2))
    assert w.adjoint() == word(position(2), creator(1), annihilator(0))
    assert w.adjoint().adjoint() == w


def test_word_text_roundtrip():
    w = word(creator(0), annihilator(-1))
    assert w.to_text() == "c(0).a(-1)"
    assert Word.from_text(w.to_text()) == w
    assert Word.from_text("1") == Word(())
    with pytest.raises(ValueError):
        Word.from_text("z(0)")


# ---------------------------------------------------------------------------
# Spaces, operators, metric adjoint


def test_space_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        TruncatedSpace(("a", "a"))


def test_space_rejects_bad_gram():
    with pytest.raises(GramError):
        TruncatedSpace(("a", "b"), np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(GramError):
        TruncatedSpace(("a", "b"), np.array([[1.0, 0.0], [0.0, -1.0]]))


def test_metric_adjoint_identity_metric_is_conjugate_transpose(rng):
    space = TruncatedSpace(tuple(range(4)))
    a = Operator(space, rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    assert np.array_equal(metric_adjoint(a).matrix, a.matrix.conj().T)


def test_metric_adjoint_involution_and_antimultiplicative(rng):
    g = rng.standard_normal((5, 5))
    gram = g @ g.T + 5 * np.eye(5)
    space = TruncatedSpace(tuple(range(5)), gram)
    a = Operator(space, rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
    b = Operator(space, rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
    assert np.allclose(metric_adjoint(metric_adjoint(a)).matrix, a.matrix, atol=1e-12)
    assert np.allclose(
        metric_adjoint(a @ b).matrix,
        (metric_adjoint(b) @ metric_adjoint(a)).matrix,
        atol=1e-12,
    )


def test_metric_adjoint_sends_q_annihilator_to_creator():
    # Two independent constructions: the creator from its prepend rule, the
    # adjoint from the Gram metric of the deformed inner product.
    basis = QBasis((1, 2), 2, 0.5)
    got = metric_adjoint(basis.annihilator(1))
    assert np.allclose(got.matrix, basis.creator(1).matrix, atol=1e-12)


# ---------------------------------------------------------------------------
# Word evaluation


def test_empty_word_is_identity():
    basis = MonotoneBasis((0, 2), 2)
    assert np.array_equal(evaluate_word(basis, Word(())).matrix, np.eye(basis.dim))


def test_two_factor_product_monotone():
    basis = MonotoneBasis((0, 2), 2)
    w = word(creator(0), annihilator(0))
    expected = basis.creator(0) @ basis.annihilator(0)
    assert np.array_equal(evaluate_word(basis, w).matrix, expected.matrix)


def test_boolean_cross_word_is_zero():
    bs = BooleanSpace((0, 3))
    w = word(annihilator(0), creator(1))
    assert evaluate_word(bs, w).is_zero()


def test_unit_letters_are_transparent():
    basis = MonotoneBasis((0, 2), 2)
    w1 = word(creator(0), Letter(Kind.UNIT), annihilator(0))
    w2 = word(creator(0), annihilator(0))
    assert np.array_equal(evaluate_word(basis, w1).matrix, evaluate_word(basis, w2).matrix)


def test_evaluate_word_rejects_out_of_window_index():
    basis = MonotoneBasis((0, 2), 2)
    with pytest.raises(IndexError):
        evaluate_word(basis, word(creator(5)))


def test_evaluate_word_multiplicative(rng):
    basis = MonotoneBasis((0, 3), 3)
    letters = [creator, annihilator]
    for _ in range(25):
        w1 = Word(tuple(letters[rng.integers(2)](int(rng.integers(0, 4))) for _ in range(int(rng.integers(0, 4)))))
        w2 = Word(tuple(letters[rng.integers(2)](int(rng.integers(0, 4))) for _ in range(int(rng.integers(0, 4)))))
        joint = evaluate_word(basis, w1 + w2)
        split = evaluate_word(basis, w1) @ evaluate_word(basis, w2)
        assert np.array_equal(joint.matrix, split.matrix)


# ---------------------------------------------------------------------------
# Relabeling


def test_relabel_identity():
    w = word(creator(0), annihilator(0))
    assert relabel(w, tau_pow(0)) == w


def test_relabel_under_partial_shifts():
    w = word(creator(0), annihilator(0))
    assert relabel(w, theta(0)) == word(creator(1), annihilator(1))
    w2 = word(creator(1), creator(-1))
    assert relabel(w2, psi(0)) == word(creator(1), creator(-2))


def test_relabel_keeps_unit_letters():
    w = word(creator(0), Letter(Kind.UNIT))
    assert relabel(w, theta(0)).letters[1].kind is Kind.UNIT


# ---------------------------------------------------------------------------
# States and mixtures


def test_mixture_endpoints():
    basis = MonotoneBasis((0, 4), 3)
    om = basis.vacuum_state()
    oo = basis.state_at_infinity()
    w = word(creator(0), annihilator(0))
    assert mixture(oo, om, 1.0)(w) == om(w)
    assert mixture(oo, om, 0.0)(w) == oo(w)


def test_mixture_midpoint_on_number_word():
    basis = MonotoneBasis((0, 4), 3)
    om = basis.vacuum_state()
    oo = basis.state_at_infinity()
    w = word(annihilator(0), creator(0))
    assert om(w) == 1 and oo(w) == 1
    assert mixture(oo, om, 0.5)(w) == 1


def test_mixture_rejects_bad_weight():
    basis = MonotoneBasis((0, 4), 3)
    om = basis.vacuum_state()
    with pytest.raises(ValueError):
        mixture(om, om, 1.5)
    with pytest.raises(ValueError):
        mixture(om, om, -0.1)


def test_states_are_unital_and_conjugate_symmetric(rng):
    basis = MonotoneBasis((0, 4), 3)
    states = [basis.vacuum_state(), basis.state_at_infinity(), basis.vector_state((1,))]
    empty = Word(())
    for phi in states:
        assert phi(empty) == 1
    letters = [creator, annihilator]
    for _ in range(40):
        w = Word(tuple(letters[rng.integers(2)](int(rng.integers(0, 4))) for _ in range(int(rng.integers(0, 5)))))
        for phi in states:
            assert phi(w.adjoint()) == pytest.approx(phi(w).conjugate(), abs=1e-12)


# ---------------------------------------------------------------------------
# Symmetry checker


def test_empty_family_is_vacuous_pass():
    basis = MonotoneBasis((0, 4), 3)
    report = check_symmetry(
        basis.vacuum_state(), [word(creator(0))], empty_family(), tol=1e-12
    )
    assert report.passed and report.samples == 0 and report.max_deviation == 0.0


def test_monotone_vacuum_passes_spreading_on_normal_words():
    basis = MonotoneBasis((-6, 7), 4)
    words = [f.word() for f in lambda_forms(range(-3, 4), 2, 2)]
    family = spreading_family(-2, 2, n_random=10, seed=3)
    report = check_symmetry(basis.vacuum_state(), words, family, tol=1e-12)
    assert report.passed
    assert report.max_deviation == 0.0
    assert report.samples > 0


def test_boolean_vector_state_fails_shift_with_witness():
    bs = BooleanSpace((-2, 2))
    phi = bs.vector_state(0)
    w = word(creator(0), annihilator(0))
    report = check_symmetry(phi, [w], shift_family(), tol=1e-12)
    assert not report.passed
    assert report.witnesses
    assert report.witnesses[0].word == "c(0).a(0)"
    assert report.max_deviation == 1.0


def test_out_of_window_relabelings_are_skipped_not_fatal():
    basis = MonotoneBasis((0, 3), 2)
    w = word(creator(3), annihilator(3))
    family = spreading_family(3, 3, n_random=0)  # theta(3), psi(3)
    report = check_symmetry(basis.vacuum_state(), [w], family, tol=1e-12)
    # theta(3) pushes index 3 to 4, outside; psi(3) keeps it at 2.
    assert report.skipped == 1
    assert report.samples == 1


def test_parallel_aggregation_matches_serial():
    basis = MonotoneBasis((-6, 7), 4)
    words = [f.word() for f in lambda_forms(range(-2, 3), 2, 2)]
    family = spreading_family(-1, 1, n_random=5, seed=9)
    serial = check_symmetry(basis.vacuum_state(), words, family, tol=1e-12)
    threaded = check_symmetry(
        basis.vacuum_state(), words, family, tol=1e-12, parallel=True
    )
    assert serial.to_dict() == threaded.to_dict()


def test_report_serialization_roundtrip():
    basis = MonotoneBasis((0, 4), 3)
    report = check_symmetry(
        basis.vector_state((0,)),
        [word(creator(0), annihilator(0))],
        shift_family(),
        tol=1e-12,
    )
    data = report.to_dict()
    assert data["family"] == "shift"
    assert not data["passed"]
    assert isinstance(report.to_json(), str)
    assert "witness" in report.to_text()


# ---------------------------------------------------------------------------
# Family hierarchy at sample level


def test_cycle_realizes_shift_on_window_words():
    # Relabeling by the interval cycle equals relabeling by the shift for any
    # word inside the interval, so permutation invariance forces shift
    # invariance at window level.
    words = [
        word(creator(0), annihilator(2)),
        word(creator(1), creator(2), annihilator(1)),
    ]
    sigma = cycle_for_interval(0, 2)
    for w in words:
        assert relabel(w, sigma) == relabel(w, tau_pow(1))


def test_permutation_pass_implies_shift_pass_on_window():
    basis = QBasis((-4, 4), 3, 0.5)
    phi = basis.vacuum_state()
    words = [word(annihilator(0), creator(1)), word(annihilator(-1), creator(-1))]
    perm = check_symmetry(phi, words, permutation_family(-2, 2, n_random=8, seed=1), tol=1e-12)
    shift = check_symmetry(phi, words, shift_family(), tol=1e-12)
    assert perm.passed
    assert shift.passed


def test_spreading_maps_factor_through_localized_words(rng):
    # Relabeling through a cofinite-range map equals relabeling through any
    # partial-shift word localizing it on the index window of the word.
    from spreadlab.monoid import random_increasing_map

    words = [
        word(creator(-2), annihilator(0), creator(2)),
        word(creator(1), creator(0), annihilator(-1), annihilator(2)),
    ]
    maps = [theta(1) * psi(-1) * tau_pow(-1)]
    maps += [random_increasing_map(rng, (-3, 3), 4, (-6, 6)) for _ in range(25)]
    for g in maps:
        for w in words:
            k, l = min(w.indices()), max(w.indices())
            r = localize({j: g(j) for j in range(k, l + 1)}, k, l)
            assert relabel(w, g) == relabel(w, r)
