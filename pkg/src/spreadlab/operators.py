"""Truncated Hilbert-space scaffolding shared by all operator models.

A :class:`TruncatedSpace` is an ordered finite family of basis labels with an
optional Gram matrix (absent means orthonormal).  Operators are dense complex
matrices acting on such a space.  Generator words are sequences of abstract
letters (creator / annihilator / position / unit at an integer index) that a
concrete model turns into matrices; strings of letters multiply left to
right, leftmost factor applied last.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Hashable, Iterator

import numpy as np


class Kind(Enum):
    CREATOR = "c"
    ANNIHILATOR = "a"
    POSITION = "x"
    UNIT = "1"


_ADJOINT_KIND = {
    Kind.CREATOR: Kind.ANNIHILATOR,
    Kind.ANNIHILATOR: Kind.CREATOR,
    Kind.POSITION: Kind.POSITION,
    Kind.UNIT: Kind.UNIT,
}


@dataclass(frozen=True)
class Letter:
    kind: Kind
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.UNIT:
            if self.index is not None:
                raise ValueError("unit letters carry no index")
        elif self.index is None:
            raise ValueError(f"{self.kind.name} letter needs an index")

    def adjoint(self) -> "Letter":
        return Letter(_ADJOINT_KIND[self.kind], self.index)

    def __str__(self) -> str:
        if self.kind is Kind.UNIT:
            return "1"
        return f"{self.kind.value}({self.index})"


def creator(i: int) -> Letter:
    return Letter(Kind.CREATOR, i)


def annihilator(i: int) -> Letter:
    return Letter(Kind.ANNIHILATOR, i)


def position(i: int) -> Letter:
    return Letter(Kind.POSITION, i)


_WORD_TOKEN = re.compile(r"([cax])\((-?\d+)\)|1")


@dataclass(frozen=True)
class Word:
    """Finite string of letters; the empty word is the unit."""

    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def adjoint(self) -> "Word":
        """Reverse the string and swap creators with annihilators."""
        return Word(tuple(letter.adjoint() for letter in reversed(self.letters)))

    def indices(self) -> tuple[int, ...]:
        return tuple(l.index for l in self.letters if l.index is not None)

    def to_text(self) -> str:
        if not self.letters:
            return "1"
        return ".".join(str(letter) for letter in self.letters)

    @classmethod
    def from_text(cls, text: str) -> "Word":
        text = text.strip()
        if text == "1" or not text:
            return cls(())
        letters = []
        for token in text.split("."):
            m = _WORD_TOKEN.fullmatch(token.strip())
            if m is None:
                raise ValueError(f"bad word token {token!r}")
            if m.group(1) is None:
                letters.append(Letter(Kind.UNIT))
            else:
                letters.append(Letter(Kind(m.group(1)), int(m.group(2))))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return self.to_text()


def word(*letters: Letter) -> Word:
    return Word(tuple(letters))


def relabel(w: Word, g) -> Word:
    """Push every letter index through the map g (any int -> int callable)."""
    out = []
    for letter in w.letters:
        if letter.kind is Kind.UNIT:
            out.append(letter)
        else:
            out.append(Letter(letter.kind, int(g(letter.index))))
    return Word(tuple(out))


# ---------------------------------------------------------------------------
# Spaces and operators


class GramError(ValueError):
    """Raised for a singular or non-Hermitian Gram matrix."""


@dataclass(frozen=True, eq=False)
class TruncatedSpace:
    """Ordered basis labels plus an optional Hermitian positive Gram matrix."""

    labels: tuple[Hashable, ...]
    gram: np.ndarray | None = None

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        if self.gram is not None:
            g = np.asarray(self.gram, dtype=complex)
            if g.shape != (self.dim, self.dim):
                raise GramError(f"gram shape {g.shape} != dim {self.dim}")
            if not np.allclose(g, g.conj().T, atol=1e-12):
                raise GramError("gram matrix is not Hermitian")
            lowest = float(np.linalg.eigvalsh(g)[0])
            if lowest <= 0.0:
                raise GramError(f"gram matrix not positive definite (min eig {lowest})")
            object.__setattr__(self, "gram", g)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        return self._index[label]  # type: ignore[attr-defined]

    def basis_vector(self, label: Hashable) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[self.index(label)] = 1.0
        return v

    def identity(self) -> "Operator":
        return Operator(self, np.eye(self.dim, dtype=complex))


@dataclass(frozen=True, eq=False)
class Operator:
    space: TruncatedSpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.space.dim, self.space.dim):
            raise ValueError(f"matrix shape {m.shape} != space dim {self.space.dim}")
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other: "Operator") -> "Operator":
        if other.space is not self.space:
            raise ValueError("operators act on different spaces")
        return Operator(self.space, self.matrix @ other.matrix)

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.space, self.matrix - other.matrix)

    def __rmul__(self, scalar: complex) -> "Operator":
        return Operator(self.space, complex(scalar) * self.matrix)

    def is_zero(self) -> bool:
        return not self.matrix.any()

    def entry(self, row_label, col_label) -> complex:
        return complex(self.matrix[self.space.index(row_label), self.space.index(col_label)])


def metric_adjoint(a: Operator) -> Operator:
    """Adjoint with respect to the space's Gram metric: G^-1 A^H G."""
    g = a.space.gram
    if g is None:
        return Operator(a.space, a.matrix.conj().T)
    return Operator(a.space, np.linalg.solve(g, a.matrix.conj().T @ g))


def evaluate_word(model, w: Word) -> Operator:
    """Ordered matrix product of the model's letter operators.

    The leftmost letter is the leftmost factor, i.e. it acts last on vectors,
    matching the usual left-to-right operator strings.  The empty word is the
    identity.  Models expose ``space`` plus ``creator``/``annihilator``/
    ``position`` matrix builders and a ``window`` for index validation.
    """
    out = model.space.identity()
    for letter in w.letters:
        out = out @ letter_operator(model, letter)
    return out


def letter_operator(model, letter: Letter) -> Operator:
    if letter.kind is Kind.UNIT:
        return model.space.identity()
    lo, hi = model.window
    if not lo <= letter.index <= hi:
        raise IndexError(f"index {letter.index} outside model window [{lo}, {hi}]")
    # Models whose generators are not plain matrices expose word_operator.
    if hasattr(model, "word_operator"):
        return model.word_operator(letter)
    if letter.kind is Kind.CREATOR:
        return model.creator(letter.index)
    if letter.kind is Kind.ANNIHILATOR:
        return model.annihilator(letter.index)
    return model.position(letter.index)


# ---------------------------------------------------------------------------
# State functionals


@dataclass(frozen=True)
class StateFunctional:
    """Normalized linear functional on words.

    ``window`` is the inclusive index range a word may use; relabeled words
    escaping it are skipped by the symmetry checker rather than evaluated.
    """

    kind: str
    window: tuple[int, int]
    rule: Callable[[Word], complex]
    label: str = ""

    def __call__(self, w: Word) -> complex:
        lo, hi = self.window
        for i in w.indices():
            if not lo <= i <= hi:
                raise IndexError(f"index {i} outside state window [{lo}, {hi}]")
        return complex(self.rule(w))

    def admits(self, w: Word) -> bool:
        lo, hi = self.window
        return all(lo <= i <= hi for i in w.indices())


def mixture(phi1: StateFunctional, phi2: StateFunctional, x: float) -> StateFunctional:
    """Affine combination (1-x) phi1 + x phi2 for x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"mixture weight must lie in [0, 1], got {x}")
    lo = max(phi1.window[0], phi2.window[0])
    hi = min(phi1.window[1], phi2.window[1])
    return StateFunctional(
        kind="mixture",
        window=(lo, hi),
        rule=lambda w: (1.0 - x) * phi1.rule(w) + x * phi2.rule(w),
        label=f"(1-{x})*{phi1.label or phi1.kind} + {x}*{phi2.label or phi2.kind}",
    )
