"""Discrete monotone Fock space at a finite truncation.

Basis labels are the strictly increasing integer tuples with entries in the
window and length at most ``depth``, plus the empty tuple for the vacuum,
enumerated in graded lexicographic order.  The creation operator prepends its
index when that keeps the tuple strictly increasing (and the tuple below the
depth cap); the annihilation operator strips a matching head.  Words applied
to a basis vector therefore stay supported on a single label, which the state
functionals exploit instead of building matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .operators import (
    Kind,
    Letter,
    Operator,
    StateFunctional,
    TruncatedSpace,
    Word,
    annihilator as annihilator_letter,
    creator as creator_letter,
)

Label = tuple[int, ...]
VACUUM: Label = ()


@dataclass(frozen=True)
class MonotoneBasis:
    window: tuple[int, int]
    depth: int

    def __post_init__(self) -> None:
        lo, hi = self.window
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")

    @cached_property
    def labels(self) -> tuple[Label, ...]:
        lo, hi = self.window
        out: list[Label] = []
        for k in range(self.depth + 1):
            out.extend(combinations(range(lo, hi + 1), k))
        return tuple(out)

    @cached_property
    def space(self) -> TruncatedSpace:
        return TruncatedSpace(self.labels)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def _check_index(self, i: int) -> None:
        lo, hi = self.window
        if not lo <= i <= hi:
            raise IndexError(f"index {i} outside window [{lo}, {hi}]")

    # -- single-label actions ------------------------------------------------

    def create(self, i: int, label: Label) -> Label | None:
        """Image of a basis label under the creator at i, None if annihilated."""
        self._check_index(i)
        if len(label) == self.depth:
            return None
        if label and i >= label[0]:
            return None
        return (i,) + label

    def annihilate(self, i: int, label: Label) -> Label | None:
        self._check_index(i)
        if label and label[0] == i:
            return label[1:]
        return None

    def apply_letter(self, letter: Letter, vec: dict[Label, complex]) -> dict[Label, complex]:
        """Push a superposition (label -> coefficient) through one letter."""
        if letter.kind is Kind.UNIT:
            return dict(vec)
        out: dict[Label, complex] = {}
        for label, coeff in vec.items():
            images: list[tuple[Label | None, complex]] = []
            if letter.kind in (Kind.CREATOR, Kind.POSITION):
                images.append((self.create(letter.index, label), coeff))
            if letter.kind in (Kind.ANNIHILATOR, Kind.POSITION):
                images.append((self.annihilate(letter.index, label), coeff))
            for image, c in images:
                if image is not None:
                    out[image] = out.get(image, 0.0) + c
        return out

    def apply_word(self, w: Word, vec: dict[Label, complex]) -> dict[Label, complex]:
        for letter in reversed(w.letters):
            vec = self.apply_letter(letter, vec)
        return vec

    # -- matrices -------------------------------------------------------------

    def _matrix_from_action(self, action) -> Operator:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        index = self.space.index
        for col, label in enumerate(self.labels):
            image = action(label)
            if image is not None:
                m[index(image), col] = 1.0
        return Operator(self.space, m)

    def creator(self, i: int) -> Operator:
        return self._matrix_from_action(lambda t: self.create(i, t))

    def annihilator(self, i: int) -> Operator:
        return self._matrix_from_action(lambda t: self.annihilate(i, t))

    def position(self, i: int) -> Operator:
        return self.creator(i) + self.annihilator(i)

    def truncation_columns(self, i: int) -> tuple[Label, ...]:
        """Labels where the creator at i is killed only by the depth cap."""
        return tuple(
            t
            for t in self.labels
            if len(t) == self.depth and (not t or i < t[0])
        )

    # -- states ----------------------------------------------------------------

    def vacuum_state(self) -> StateFunctional:
        """Vector state at the vacuum."""

        def rule(w: Word) -> complex:
            return self.apply_word(w, {VACUUM: 1.0}).get(VACUUM, 0.0)

        return StateFunctional("vector", self.window, rule, label="vacuum")

    def probe_value(self, w: Word, probe: int) -> complex:
        """Diagonal value of the word at the single-entry label (probe,)."""
        self._check_index(probe)
        if any(i >= probe for i in w.indices()):
            raise ValueError(f"probe {probe} is not above every word index")
        start: Label = (probe,)
        return self.apply_word(w, {start: 1.0}).get(start, 0.0)

    def state_at_infinity(self) -> StateFunctional:
        """Diagonal value at the probe label just above the admissible window.

        Words may only use indices strictly below the window top, which is
        reserved as the probe; the value does not depend on the probe choice
        as long as it stays above every index in the word.
        """
        lo, hi = self.window

        def rule(w: Word) -> complex:
            return self.probe_value(w, hi)

        return StateFunctional("at-infinity", (lo, hi - 1), rule, label="at-infinity")

    def vector_state(self, label: Label) -> StateFunctional:
        if label not in set(self.labels):
            raise ValueError(f"{label!r} is not a basis label")

        def rule(w: Word) -> complex:
            return self.apply_word(w, {label: 1.0}).get(label, 0.0)

        return StateFunctional("vector", self.window, rule, label=f"e{label}")


# ---------------------------------------------------------------------------
# Normally ordered words


@dataclass(frozen=True)
class LambdaForm:
    """Creators with strictly increasing indices followed by annihilators with
    strictly decreasing indices; both empty means the identity."""

    creators: tuple[int, ...] = ()
    annihilators: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.creators, self.creators[1:])):
            raise ValueError(f"creator indices must increase: {self.creators}")
        if any(a <= b for a, b in zip(self.annihilators, self.annihilators[1:])):
            raise ValueError(f"annihilator indices must decrease: {self.annihilators}")

    @property
    def length(self) -> int:
        return len(self.creators) + len(self.annihilators)

    def word(self) -> Word:
        letters = tuple(creator_letter(i) for i in self.creators) + tuple(
            annihilator_letter(j) for j in self.annihilators
        )
        return Word(letters)

    def to_text(self) -> str:
        return (
            f"D[{','.join(str(i) for i in self.creators)}]"
            f"A[{','.join(str(j) for j in self.annihilators)}]"
        )

    @classmethod
    def from_text(cls, text: str) -> "LambdaForm":
        m = re.fullmatch(r"D\[([-\d,\s]*)\]A\[([-\d,\s]*)\]", text.strip())
        if m is None:
            raise ValueError(f"not a normally-ordered word literal: {text!r}")

        def parse(body: str) -> tuple[int, ...]:
            body = body.strip()
            return tuple(int(x) for x in body.split(",")) if body else ()

        return cls(parse(m.group(1)), parse(m.group(2)))

    def __str__(self) -> str:
        return self.to_text()


def lambda_matrix(basis: MonotoneBasis, form: LambdaForm) -> Operator:
    """Matrix of the ordered product: creators first, then annihilators."""
    out = basis.space.identity()
    for i in form.creators:
        out = out @ basis.creator(i)
    for j in form.annihilators:
        out = out @ basis.annihilator(j)
    return out


def lambda_forms(
    indices: Sequence[int],
    max_creators: int,
    max_annihilators: int,
    max_length: int | None = None,
    include_identity: bool = False,
) -> Iterator[LambdaForm]:
    """All normally ordered words over the index set within the size bounds."""
    idx = sorted(indices)
    for m in range(max_creators + 1):
        for cs in combinations(idx, m):
            for n in range(max_annihilators + 1):
                if max_length is not None and m + n > max_length:
                    continue
                if m == n == 0 and not include_identity:
                    continue
                for asc in combinations(idx, n):
                    yield LambdaForm(cs, tuple(reversed(asc)))


def diagonal_number_words(indices: Iterable[int]) -> Iterator[Word]:
    """The words annihilator-then-creator at one index (not normally ordered)."""
    for i in indices:
        yield Word((annihilator_letter(i), creator_letter(i)))
