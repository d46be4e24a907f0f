"""Boolean window algebra: relations, the relabeling endomorphisms, and the
segment of invariant states."""

import numpy as np
import pytest

from spreadlab.boolean import (
    SHARP,
    BooleanElement,
    BooleanSpace,
    WindowOverflowError,
    alpha,
    chain_windows,
    image_window,
    isometry,
    omega_infinity,
    omega_sharp,
)
from spreadlab.monoid import (
    FinitePermutation,
    compose,
    random_increasing_map,
    random_permutation,
    tau_pow,
    theta,
)
from spreadlab.operators import annihilator, creator, word


@pytest.fixture(scope="module")
def bs():
    return BooleanSpace((0, 3))


def random_element(space, rng):
    k = rng.standard_normal((space.dim, space.dim)) + 1j * rng.standard_normal(
        (space.dim, space.dim)
    )
    return space.element(k, complex(rng.standard_normal(), rng.standard_normal()))


# ---------------------------------------------------------------------------
# Generators and matrix units


def test_creator_sends_vacuum_to_site(bs):
    out = bs.creator(0).compact @ bs.space.basis_vector(SHARP)
    assert np.array_equal(out, bs.space.basis_vector(0))


def test_annihilator_sends_site_to_vacuum(bs):
    out = bs.annihilator(0).compact @ bs.space.basis_vector(0)
    assert np.array_equal(out, bs.space.basis_vector(SHARP))
    assert not (bs.annihilator(0).compact @ bs.space.basis_vector(SHARP)).any()


def test_matrix_unit_identities(bs):
    assert (bs.matrix_unit(SHARP, 0) * bs.matrix_unit(0, SHARP)).allclose(
        bs.matrix_unit(SHARP, SHARP)
    )
    assert (bs.matrix_unit(0, 1) * bs.matrix_unit(2, 3)).allclose(bs.zero())
    assert bs.matrix_unit(0, 1).adjoint().allclose(bs.matrix_unit(1, 0))
    assert bs.creator(2).allclose(bs.matrix_unit(2, SHARP))
    assert bs.annihilator(2).allclose(bs.matrix_unit(SHARP, 2))


def test_label_outside_window_rejected(bs):
    with pytest.raises(IndexError):
        bs.matrix_unit(0, 9)
    with pytest.raises(IndexError):
        bs.creator(-1)


def test_commutation_relation_exact(bs):
    lo, hi = bs.window
    number_sum = bs.zero()
    for k in range(lo, hi + 1):
        number_sum = number_sum + bs.creator(k) * bs.annihilator(k)
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            lhs = bs.annihilator(i) * bs.creator(j)
            delta = 1.0 if i == j else 0.0
            rhs = delta * (bs.identity() - number_sum)
            # pair identity against the vacuum matrix unit
            assert lhs.allclose(
                delta * bs.matrix_unit(SHARP, SHARP)
            ), "b b† is the vacuum unit"
            # the window form of the relation holds at full-matrix level
            assert np.array_equal(lhs.total_matrix(), rhs.total_matrix())
            # creator-then-annihilator gives the matrix units
            assert (bs.creator(i) * bs.annihilator(j)).allclose(bs.matrix_unit(i, j))


def test_number_sum_misses_only_vacuum(bs):
    total = bs.zero()
    lo, hi = bs.window
    for k in range(lo, hi + 1):
        total = total + bs.creator(k) * bs.annihilator(k)
    expected = np.eye(bs.dim)
    expected[0, 0] = 0.0
    assert np.array_equal(total.total_matrix(), expected)


def test_element_pair_arithmetic(bs):
    rng = np.random.default_rng(4)
    x, y = random_element(bs, rng), random_element(bs, rng)
    prod = x * y
    assert np.allclose(prod.total_matrix(), x.total_matrix() @ y.total_matrix())
    assert prod.scalar == x.scalar * y.scalar
    assert np.allclose(x.adjoint().total_matrix(), x.total_matrix().conj().T)


# ---------------------------------------------------------------------------
# Isometries


def test_isometry_identity(bs):
    v = isometry(tau_pow(0), bs, bs)
    assert np.array_equal(v, np.eye(bs.dim))


def test_isometry_forward_shift_example():
    src, dst = BooleanSpace((0, 0)), BooleanSpace((0, 1))
    v = isometry(theta(0), src, dst)
    assert np.array_equal(v @ src.space.basis_vector(0), dst.space.basis_vector(1))
    assert np.array_equal(v @ src.space.basis_vector(SHARP), dst.space.basis_vector(SHARP))


def test_isometry_columns_orthonormal(rng):
    for _ in range(50):
        f = random_increasing_map(rng, (-2, 2), 3, (-5, 5))
        src = BooleanSpace((-3, 3))
        dst = BooleanSpace(image_window(f, src.window))
        v = isometry(f, src, dst)
        assert np.array_equal(v.conj().T @ v, np.eye(src.dim))


def test_isometry_overflow_detected():
    src, dst = BooleanSpace((0, 3)), BooleanSpace((0, 3))
    with pytest.raises(WindowOverflowError):
        isometry(theta(0), src, dst)  # image of 3 is 4


# ---------------------------------------------------------------------------
# The relabeling action


def test_alpha_is_unital(rng, bs):
    for _ in range(20):
        f = random_increasing_map(rng, (-2, 2), 3, (-5, 5))
        out = alpha(f, bs.identity())
        assert out.allclose(out.home.identity())


def test_alpha_moves_matrix_units(bs):
    got = alpha(theta(0), bs.matrix_unit(0, 0))
    assert got.allclose(got.home.matrix_unit(1, 1))
    fixed = alpha(theta(0), bs.matrix_unit(SHARP, SHARP))
    assert fixed.allclose(fixed.home.matrix_unit(SHARP, SHARP))


def test_alpha_matrix_unit_rule_general(bs, rng):
    lo, hi = bs.window
    for _ in range(20):
        f = random_increasing_map(rng, (-2, 2), 2, (-4, 4))
        out_space = BooleanSpace(image_window(f, bs.window))
        for k in (SHARP, 0, 2):
            for l in (SHARP, 1, 3):
                image_k = SHARP if k == SHARP else f(k)
                image_l = SHARP if l == SHARP else f(l)
                got = alpha(f, bs.matrix_unit(k, l), out_space)
                assert got.allclose(out_space.matrix_unit(image_k, image_l))


def test_alpha_morphism_on_random_triples(rng):
    base = BooleanSpace((-3, 3))
    for _ in range(200):
        f = random_increasing_map(rng, (-2, 2), 3, (-6, 6))
        g = random_increasing_map(rng, (-2, 2), 3, (-6, 6))
        x = random_element(base, rng)
        mid, final = chain_windows(f, g, base.window)
        lhs = alpha(compose(f, g), x, BooleanSpace(final))
        rhs = alpha(f, alpha(g, x, BooleanSpace(mid)), BooleanSpace(final))
        assert lhs.allclose(rhs, 1e-12)


def test_alpha_star_endomorphism(rng):
    base = BooleanSpace((-3, 3))
    for _ in range(60):
        f = random_increasing_map(rng, (-2, 2), 3, (-6, 6))
        x, y = random_element(base, rng), random_element(base, rng)
        out_space = BooleanSpace(image_window(f, base.window))
        fx = alpha(f, x, out_space)
        fy = alpha(f, y, out_space)
        assert alpha(f, x * y, out_space).allclose(fx * fy, 1e-10)
        assert alpha(f, x.adjoint(), out_space).allclose(fx.adjoint(), 1e-12)


def test_alpha_permutation_is_automorphism(rng):
    base = BooleanSpace((-3, 3))
    for _ in range(30):
        p = random_permutation(rng, -3, 3)
        x, y = random_element(base, rng), random_element(base, rng)
        px, py = alpha(p, x), alpha(p, y)
        assert alpha(p, x * y).allclose(px * py, 1e-10)
        inv = alpha(p.inverse(), px)
        assert inv.allclose(x, 1e-12)


def test_alpha_permutation_support_must_fit():
    bs = BooleanSpace((0, 2))
    with pytest.raises(WindowOverflowError):
        alpha(FinitePermutation.from_cycle([2, 3]), bs.identity())


# ---------------------------------------------------------------------------
# Invariant states


def test_states_on_elements(bs):
    assert omega_sharp(bs.annihilator(0) * bs.creator(0)) == 1
    assert omega_infinity(bs.matrix_unit(1, 2)) == 0
    assert omega_sharp(bs.identity()) == 1
    assert omega_infinity(bs.identity()) == 1


def test_simplex_states_invariant(rng):
    base = BooleanSpace((-3, 3))
    maps = [random_increasing_map(rng, (-2, 2), 3, (-6, 6)) for _ in range(20)]
    maps += [tau_pow(1), tau_pow(-1)]
    perms = [random_permutation(rng, -3, 3) for _ in range(10)]
    for lam in (0.0, 0.3, 1.0):

        def state(el):
            return lam * omega_sharp(el) + (1 - lam) * omega_infinity(el)

        for _ in range(10):
            x = random_element(base, rng)
            before = state(x)
            for f in maps:
                assert abs(state(alpha(f, x)) - before) <= 1e-12
            for p in perms:
                assert abs(state(alpha(p, x)) - before) <= 1e-12


def test_vector_state_not_invariant(bs):
    x = bs.matrix_unit(0, 0)
    moved = alpha(theta(0), x, BooleanSpace((0, 4)))

    def vector_state(el, label):
        i = el.home.index(label)
        return el.total_matrix()[i, i]

    assert vector_state(x, 0) == 1
    assert vector_state(moved, 0) == 0
    assert moved.allclose(moved.home.matrix_unit(1, 1))


def test_word_level_states(bs):
    sharp = bs.sharp_state()
    infinity = bs.infinity_state()
    w = word(annihilator(0), creator(0))
    assert sharp(w) == 1
    assert infinity(w) == 0  # nonempty products have no scalar part
    assert infinity(word()) == 1
    assert sharp(word(creator(0), annihilator(0))) == 0  # eps_00 at the vacuum


def test_word_states_conjugate_symmetric(bs, rng):
    from spreadlab.operators import Word, Letter, Kind

    states = [bs.sharp_state(), bs.infinity_state(), bs.vector_state(1)]
    kinds = (Kind.CREATOR, Kind.ANNIHILATOR)
    for _ in range(30):
        letters = tuple(
            Letter(kinds[rng.integers(2)], int(rng.integers(0, 4)))
            for _ in range(int(rng.integers(0, 5)))
        )
        w = Word(letters)
        for phi in states:
            assert phi(w.adjoint()) == phi(w).conjugate()


# ---------------------------------------------------------------------------
# Serialization


def test_element_json_roundtrip(bs, rng):
    x = random_element(bs, rng)
    back = BooleanElement.from_json(x.to_json())
    assert back.home == bs
    assert back.allclose(x, 1e-15)
