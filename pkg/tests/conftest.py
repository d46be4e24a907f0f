"""Shared oracles: pointwise closures for the partial shifts, independent of
the canonical (offset, gaps) representation under test."""

import numpy as np
import pytest


def oracle_theta(h):
    return lambda k: k if k < h else k + 1


def oracle_psi(h):
    return lambda k: k if k > h else k - 1


def oracle_tau(n):
    return lambda k: k + n


def oracle_compose(*fns):
    def composed(k):
        for fn in reversed(fns):
            k = fn(k)
        return k

    return composed


def pointwise_equal(f, g, lo=-50, hi=50):
    return all(f(k) == g(k) for k in range(lo, hi + 1))


@pytest.fixture
def rng():
    return np.random.default_rng(20230526)
