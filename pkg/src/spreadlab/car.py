"""Canonical anticommutation relations on a finite window of sites.

Annihilators are realized on the 2^n occupation space by the standard chain
construction: a sign string over the sites before j and a lowering factor at
site j.  All entries are 0 or +-1, so every relation check below is exact
integer arithmetic.

The two-point function T implements the translation-invariant kernel
i * 3C / (pi^2 (m-n)^2) above the diagonal (Hermitian below, constant on the
diagonal).  Shifting both arguments preserves it, while a forward partial
shift that straddles the index pair changes the separation |m - n|, which is
the strict stationary-but-not-spreadable witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .monoid import IncreasingMap, theta
from .operators import Operator, TruncatedSpace

_LOWER = np.array([[0.0, 1.0], [0.0, 0.0]])  # |1> -> |0>
_SIGN = np.array([[1.0, 0.0], [0.0, -1.0]])
_EYE2 = np.eye(2)


@dataclass(frozen=True)
class FermionChain:
    window: tuple[int, int]

    def __post_init__(self) -> None:
        lo, hi = self.window
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")

    @property
    def n_sites(self) -> int:
        lo, hi = self.window
        return hi - lo + 1

    @property
    def dim(self) -> int:
        return 2**self.n_sites

    @cached_property
    def space(self) -> TruncatedSpace:
        labels = tuple(product((0, 1), repeat=self.n_sites))
        return TruncatedSpace(labels)

    def _site(self, j: int) -> int:
        lo, hi = self.window
        if not lo <= j <= hi:
            raise IndexError(f"index {j} outside window [{lo}, {hi}]")
        return j - lo

    def annihilator(self, j: int) -> Operator:
        site = self._site(j)
        m = np.array([[1.0]])
        for k in range(self.n_sites):
            factor = _SIGN if k < site else (_LOWER if k == site else _EYE2)
            m = np.kron(m, factor)
        return Operator(self.space, m)

    def creator(self, j: int) -> Operator:
        return Operator(self.space, self.annihilator(j).matrix.conj().T)

    def position(self, j: int) -> Operator:
        return self.creator(j) + self.annihilator(j)


def anticommutator(a: Operator, b: Operator) -> Operator:
    return a @ b + b @ a


@dataclass(frozen=True)
class TwoPointFunction:
    """Hermitian translation-invariant kernel with purely imaginary
    off-diagonal values decaying like the inverse square of the separation."""

    coupling: float = 1.0
    diagonal: float = 0.5

    def __post_init__(self) -> None:
        if self.coupling < 0:
            raise ValueError("coupling must be nonnegative")
        if not 0.0 <= self.diagonal <= 1.0:
            raise ValueError("diagonal value must lie in [0, 1]")

    def value(self, m: int, n: int) -> complex:
        if m == n:
            return complex(self.diagonal)
        if m > n:
            return 1j * 3.0 * self.coupling / (math.pi**2 * (m - n) ** 2)
        return self.value(n, m).conjugate()

    def section(self, lo: int, hi: int) -> np.ndarray:
        idx = range(lo, hi + 1)
        return np.array([[self.value(m, n) for n in idx] for m in idx])


def twopoint_stationarity(t: TwoPointFunction, lo: int, hi: int) -> float:
    """Max |T(m+1, n+1) - T(m, n)| over the index square; exactly 0 here."""
    dev = 0.0
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            dev = max(dev, abs(t.value(m + 1, n + 1) - t.value(m, n)))
    return dev


@dataclass(frozen=True)
class SpreadabilityWitness:
    map: IncreasingMap
    m: int
    n: int
    lhs: complex
    rhs: complex

    @property
    def deviation(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> dict:
        return {
            "map": self.map.to_text(),
            "m": self.m,
            "n": self.n,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "deviation": self.deviation,
        }


def spreadability_witness(t: TwoPointFunction) -> SpreadabilityWitness:
    """A spreading map and index pair on which the kernel is not invariant.

    The forward shift pivoted between the pair (1, -1) stretches the
    separation from 2 to 3, scaling the off-diagonal value by 4/9; this
    always witnesses non-spreadability when the coupling is positive.
    """
    f = theta(0)
    candidates = [(1, -1)] + [(m, n) for m, n in product(range(-3, 4), repeat=2) if m > n]
    for m, n in candidates:
        lhs = t.value(m, n)
        rhs = t.value(f(m), f(n))
        if lhs != rhs:
            return SpreadabilityWitness(f, m, n, lhs, rhs)
    raise ValueError("kernel is spreading invariant on the probed pairs (coupling 0?)")


@dataclass(frozen=True)
class PositivityReport:
    """Advisory spectrum probe of a finite kernel section against [0, 1]."""

    window: tuple[int, int]
    eigenvalues: tuple[float, ...]

    @property
    def in_unit_interval(self) -> bool:
        return self.eigenvalues[0] >= 0.0 and self.eigenvalues[-1] <= 1.0

    def to_dict(self) -> dict:
        return {
            "window": list(self.window),
            "min_eigenvalue": self.eigenvalues[0],
            "max_eigenvalue": self.eigenvalues[-1],
            "in_unit_interval": self.in_unit_interval,
        }


def positivity_probe(t: TwoPointFunction, lo: int, hi: int) -> PositivityReport:
    eigenvalues = np.linalg.eigvalsh(t.section(lo, hi))
    return PositivityReport((lo, hi), tuple(float(e) for e in eigenvalues))
