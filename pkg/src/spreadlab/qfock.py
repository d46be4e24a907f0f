"""q-deformed Fock space at a finite truncation, -1 < q < 1.

Basis labels are all integer tuples over the window of length at most
``depth`` (repetitions allowed, any order), plus the empty tuple for the
vacuum.  The inner product is deformed by counting permutation inversions;
it is computed by explicit enumeration over the symmetric group, which is
the obviously-correct route at desk scale (tuple lengths stay small).  The
convention 0**0 = 1 makes q = 0 the free Fock inner product.

Deformation parameters may be floats or ``fractions.Fraction`` values; the
arithmetic is generic, so exact rational cross-checks cost nothing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterator

import numpy as np

from .operators import (
    Kind,
    Letter,
    Operator,
    StateFunctional,
    TruncatedSpace,
    Word,
)

Label = tuple[int, ...]
VACUUM: Label = ()


def inversions(pi: tuple[int, ...]) -> int:
    n = len(pi)
    return sum(1 for a in range(n) for b in range(a + 1, n) if pi[a] > pi[b])


def q_inner(u: Label, v: Label, q) -> complex | float:
    """Deformed inner product of two basis tuples.

    Sum of q**inversions(pi) over all permutations pi matching u against v
    entrywise; zero when the lengths differ.  Works for float or Fraction q.
    """
    if len(u) != len(v):
        return 0 * q**0
    n = len(u)
    total = 0 * q**0
    for pi in permutations(range(n)):
        if all(u[k] == v[pi[k]] for k in range(n)):
            total += q ** inversions(pi)
    return total


def q_inner_recursive(u: Label, v: Label, q) -> complex | float:
    """Same inner product by peeling the head of u through the annihilator
    slot weights instead of enumerating permutations; must agree with
    :func:`q_inner` exactly."""
    if len(u) != len(v):
        return 0 * q**0
    if not u:
        return q**0
    total = 0 * q**0
    for k, entry in enumerate(v):
        if entry == u[0]:
            total += q**k * q_inner_recursive(u[1:], v[:k] + v[k + 1 :], q)
    return total


@dataclass(frozen=True)
class QBasis:
    window: tuple[int, int]
    depth: int
    q: float

    def __post_init__(self) -> None:
        lo, hi = self.window
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        if not abs(self.q) < 1:
            raise ValueError(f"deformation must satisfy |q| < 1, got {self.q}")

    @cached_property
    def labels(self) -> tuple[Label, ...]:
        lo, hi = self.window
        out: list[Label] = []
        for k in range(self.depth + 1):
            out.extend(product(range(lo, hi + 1), repeat=k))
        return tuple(out)

    @cached_property
    def gram(self) -> np.ndarray:
        """Blockwise-by-length Gram matrix; positive definite for |q| < 1."""
        labels = self.labels
        dim = len(labels)
        g = np.zeros((dim, dim))
        by_len: dict[int, list[int]] = {}
        for pos, lab in enumerate(labels):
            by_len.setdefault(len(lab), []).append(pos)
        for block in by_len.values():
            for a in block:
                for b in block:
                    if b < a:
                        continue
                    val = float(q_inner(labels[a], labels[b], self.q))
                    g[a, b] = val
                    g[b, a] = val
        return g

    @cached_property
    def space(self) -> TruncatedSpace:
        return TruncatedSpace(self.labels, self.gram)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def _check_index(self, j: int) -> None:
        lo, hi = self.window
        if not lo <= j <= hi:
            raise IndexError(f"index {j} outside window [{lo}, {hi}]")

    # -- single-label actions --------------------------------------------------

    def create(self, j: int, label: Label) -> Label | None:
        self._check_index(j)
        if len(label) == self.depth:
            return None
        return (j,) + label

    def annihilate(self, j: int, label: Label) -> list[tuple[Label, float]]:
        """Images of one label under the annihilator: slot k removed with
        weight q**k (0-based k, i.e. q**(k-1) in 1-based slot counting)."""
        self._check_index(j)
        out = []
        for k, entry in enumerate(label):
            if entry == j:
                out.append((label[:k] + label[k + 1 :], float(self.q) ** k))
        return out

    def apply_letter(self, letter: Letter, vec: dict[Label, complex]) -> dict[Label, complex]:
        if letter.kind is Kind.UNIT:
            return dict(vec)
        out: dict[Label, complex] = {}

        def add(label: Label | None, coeff: complex) -> None:
            if label is not None and coeff != 0:
                out[label] = out.get(label, 0.0) + coeff

        for label, coeff in vec.items():
            if letter.kind in (Kind.CREATOR, Kind.POSITION):
                add(self.create(letter.index, label), coeff)
            if letter.kind in (Kind.ANNIHILATOR, Kind.POSITION):
                for image, weight in self.annihilate(letter.index, label):
                    add(image, weight * coeff)
        return out

    def apply_word(self, w: Word, vec: dict[Label, complex]) -> dict[Label, complex]:
        for letter in reversed(w.letters):
            vec = self.apply_letter(letter, vec)
        return vec

    # -- matrices ----------------------------------------------------------------

    def creator(self, j: int) -> Operator:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        index = self.space.index
        for col, label in enumerate(self.labels):
            image = self.create(j, label)
            if image is not None:
                m[index(image), col] = 1.0
        return Operator(self.space, m)

    def annihilator(self, j: int) -> Operator:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        index = self.space.index
        for col, label in enumerate(self.labels):
            for image, weight in self.annihilate(j, label):
                m[index(image), col] += weight
        return Operator(self.space, m)

    def position(self, j: int) -> Operator:
        return self.creator(j) + self.annihilator(j)

    # -- states --------------------------------------------------------------------

    def inner(self, vec: dict[Label, complex], base: Label) -> complex:
        """Deformed inner product of a superposition against one basis label."""
        total = 0.0 + 0.0j
        n = len(base)
        for label, coeff in vec.items():
            if len(label) == n:
                total += coeff * float(q_inner(label, base, self.q))
        return total

    def vacuum_state(self) -> StateFunctional:
        def rule(w: Word) -> complex:
            return self.apply_word(w, {VACUUM: 1.0}).get(VACUUM, 0.0)

        return StateFunctional("vector", self.window, rule, label="vacuum")

    def vector_state(self, label: Label | int) -> StateFunctional:
        base: Label = (label,) if isinstance(label, int) else tuple(label)
        if base not in set(self.labels):
            raise ValueError(f"{base!r} is not a basis label")

        def rule(w: Word) -> complex:
            return self.inner(self.apply_word(w, {base: 1.0}), base)

        return StateFunctional("vector", self.window, rule, label=f"e{base}")


# ---------------------------------------------------------------------------
# Word tokens: ldag(j) creator, l(j) annihilator, s(j) position


_Q_TOKEN = re.compile(r"(ldag|l|s)\((-?\d+)\)")

_Q_KIND = {"ldag": Kind.CREATOR, "l": Kind.ANNIHILATOR, "s": Kind.POSITION}
_Q_NAME = {Kind.CREATOR: "ldag", Kind.ANNIHILATOR: "l", Kind.POSITION: "s"}


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text or text == "1":
        return Word(())
    letters = []
    for token in text.split("."):
        m = _Q_TOKEN.fullmatch(token.strip())
        if m is None:
            raise ValueError(f"bad token {token!r}; expected l/ldag/s(index)")
        letters.append(Letter(_Q_KIND[m.group(1)], int(m.group(2))))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    for letter in w.letters:
        if letter.kind is Kind.UNIT:
            parts.append("1")
        else:
            parts.append(f"{_Q_NAME[letter.kind]}({letter.index})")
    return ".".join(parts)


def words_over(
    indices: list[int], max_length: int, kinds: tuple[Kind, ...]
) -> Iterator[Word]:
    """All words up to the length bound with letters of the given kinds."""
    alphabet = [Letter(kind, i) for kind in kinds for i in indices]
    for n in range(max_length + 1):
        for combo in product(alphabet, repeat=n):
            yield Word(tuple(combo))
