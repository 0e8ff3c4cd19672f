"""Weyl group elements acting on the weight lattice, Bruhat order and beta sequences.

An element is stored as its integer matrix on weight coordinates (faithful, so
it is the identity of the element) together with a canonical reduced word.
Descents use the pairing trick ``<w^-1 alpha_i, rho> = d_i (w rho)_i``: the
index ``i`` is a left descent of ``w`` iff the i-th row sum of its matrix is
negative.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import Matrix, identity, mat_mul, mat_vec
from .rootdata import Root, RootSystem, reflect_root, reflection_matrix

DEFAULT_CAP = 16


class WeylError(ValueError):
    pass


class CapExceeded(WeylError):
    """Raised when an interval would be enumerated past the configured length cap."""


@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem
    matrix: Matrix
    word: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs == other.rs and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.rs.name, self.matrix))

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {word_label(self.word)})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        _same_system(self, other)
        return from_matrix(self.rs, mat_mul(self.matrix, other.matrix))

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def inverse(self) -> "WeylElement":
        return element_from_word(self.rs, self.word[::-1])

    def left_descents(self) -> list[int]:
        return [i + 1 for i, row in enumerate(self.matrix) if sum(row) < 0]

    def act(self, lam: Sequence[int]) -> tuple[int, ...]:
        return mat_vec(self.matrix, lam)


def word_label(word: Sequence[int]) -> str:
    """``()`` -> ``"e"``; ``(1, 2, 1)`` -> ``"121"``; ranks above 9 get comma separators."""
    if not word:
        return "e"
    if max(word) > 9:
        return ",".join(map(str, word))
    return "".join(map(str, word))


def _same_system(a: WeylElement, b: WeylElement) -> None:
    if a.rs != b.rs:
        raise WeylError(f"mixed root systems {a.rs.name} and {b.rs.name}")


def _reflections(rs: RootSystem) -> list[Matrix]:
    return [reflection_matrix(rs, i) for i in range(1, rs.rank + 1)]


@lru_cache(maxsize=None)
def _canonical_word(rs: RootSystem, matrix: Matrix) -> tuple[int, ...]:
    refl = _reflections(rs)
    word = []
    m = matrix
    ident = identity(rs.rank)
    while m != ident:
        i = next(k for k, row in enumerate(m) if sum(row) < 0)
        word.append(i + 1)
        m = mat_mul(refl[i], m)
    return tuple(word)


def from_matrix(rs: RootSystem, matrix: Matrix) -> WeylElement:
    matrix = tuple(tuple(row) for row in matrix)
    return WeylElement(rs, matrix, _canonical_word(rs, matrix))


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, identity(rs.rank), ())


def element_from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    m = identity(rs.rank)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise WeylError(f"index {i} exceeds rank {rs.rank}" if i > rs.rank
                            else f"index {i} out of range 1..{rs.rank}")
        m = mat_mul(m, reflection_matrix(rs, i))
    return from_matrix(rs, m)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return element_from_word(rs, [i])


def length(w: WeylElement) -> int:
    """Number of positive roots sent negative by ``w^-1``."""
    w_rho = [sum(row) for row in w.matrix]
    d = w.rs.symmetrizers
    # sign of <w^-1 beta, rho> = sum_j beta_j d_j (w rho)_j
    return sum(
        1 for beta in w.rs.positive_roots
        if sum(b * dj * x for b, dj, x in zip(beta, d, w_rho)) < 0
    )


def canonical_reduced_word(w: WeylElement) -> tuple[int, ...]:
    return w.word


def longest_element(rs: RootSystem) -> WeylElement:
    w = identity_element(rs)
    while True:
        desc = set(w.left_descents())
        free = [i for i in range(1, rs.rank + 1) if i not in desc]
        if not free:
            return w
        w = simple_reflection(rs, free[0]) * w


@lru_cache(maxsize=None)
def bruhat_leq(y: WeylElement, w: WeylElement) -> bool:
    _same_system(y, w)
    while True:
        if y.length > w.length:
            return False
        if w.is_identity:
            return y.is_identity
        i = w.word[0]  # canonical words start with the smallest left descent
        s = simple_reflection(w.rs, i)
        if i in y.left_descents():
            y = s * y
        w = s * w


@dataclass(frozen=True)
class BruhatInterval:
    top: WeylElement
    elements: tuple[WeylElement, ...]
    covers: tuple[tuple[int, int], ...]  # index pairs (lower, upper) into elements

    def __len__(self):
        return len(self.elements)


def _sort_key(x: WeylElement):
    return (x.length, x.word)


def lower_set(w: WeylElement, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """All ``y <= w``, as products of subwords of the canonical word of ``w``."""
    if w.length > cap:
        raise CapExceeded(f"length {w.length} exceeds interval cap {cap}")
    rs = w.rs
    refl = _reflections(rs)
    mats = {identity(rs.rank)}
    for i in w.word:
        mats |= {mat_mul(m, refl[i - 1]) for m in mats}
    return sorted((from_matrix(rs, m) for m in mats), key=_sort_key)


def bruhat_interval(w: WeylElement, cap: int = DEFAULT_CAP) -> BruhatInterval:
    elements = lower_set(w, cap)
    by_length: dict[int, list[int]] = {}
    for k, x in enumerate(elements):
        by_length.setdefault(x.length, []).append(k)
    covers = []
    for a, x in enumerate(elements):
        for b in by_length.get(x.length + 1, []):
            if bruhat_leq(x, elements[b]):
                covers.append((a, b))
    return BruhatInterval(w, tuple(elements), tuple(covers))


def all_elements(rs: RootSystem) -> list[WeylElement]:
    w0 = longest_element(rs)
    return lower_set(w0, cap=w0.length)


def reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``, lexicographically sorted."""
    return sorted(_reduced_words(w))


@lru_cache(maxsize=None)
def _reduced_words(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    if w.is_identity:
        return ((),)
    out = []
    for i in w.left_descents():
        rest = simple_reflection(w.rs, i) * w
        out.extend((i,) + tail for tail in _reduced_words(rest))
    return tuple(out)


def beta_sequence(rs: RootSystem, word: Sequence[int]) -> list[Root]:
    """``beta_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}`` in simple-root coordinates."""
    word = tuple(word)
    if element_from_word(rs, word).length != len(word):
        raise WeylError(f"word {word_label(word)} is not reduced")
    betas = []
    for j, i in enumerate(word):
        beta = tuple(int(k == i - 1) for k in range(rs.rank))
        for prev in reversed(word[:j]):
            beta = reflect_root(rs, prev - 1, beta)
        betas.append(beta)
    return betas


def inversion_set(w: WeylElement) -> set[Root]:
    """``{beta > 0 : w^-1 beta < 0}``, computed by acting with the inverse matrix."""
    rs = w.rs
    winv = w.inverse()
    out = set()
    for beta in rs.positive_roots:
        image = rs.weight_to_root(winv.act(rs.root_to_weight(beta)))
        if all(x <= 0 for x in image):
            out.add(beta)
    return out
