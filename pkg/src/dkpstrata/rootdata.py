"""Cartan data for the simple types A-G.

Conventions (Bourbaki node numbering throughout):

* ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so ``K_i X_j K_i^-1 = q_i^{c_ij} X_j``.
* The invariant form is normalised so that short roots have square length 2;
  ``d_i = <alpha_i, alpha_i> / 2`` and ``(d_i c_ij)`` is the symmetric matrix
  of simple-root inner products.
* Weights are integer vectors in the fundamental-weight basis, roots are
  integer vectors in the simple-root basis.  The weight coordinates of
  ``alpha_j`` form the j-th column of the Cartan matrix.

=========  ======================================  ==============
series     nodes                                   long / short
=========  ======================================  ==============
A_n        1 - 2 - ... - n                         simply laced
B_n        1 - ... - (n-1) => n                    alpha_n short
C_n        1 - ... - (n-1) <= n                    alpha_n long
D_n        1 - ... - (n-2) - (n-1), (n-2) - n      simply laced
E_n        1 - 3 - 4 - ... - n, 2 - 4              simply laced
F_4        1 - 2 => 3 - 4                          alpha_3, alpha_4 short
G_2        1 <= 2                                  alpha_1 short
=========  ======================================  ==============
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .linalg import Matrix, bareiss_det, mat_mul, rational_inverse, transpose

MAX_RANK = 8

# Weight: coordinates in the fundamental-weight basis.
# Root: coordinates in the simple-root basis.
Weight = tuple[int, ...]
Root = tuple[int, ...]

RANK_RANGE = {
    "A": (1, MAX_RANK),
    "B": (2, MAX_RANK),
    "C": (3, MAX_RANK),
    "D": (4, MAX_RANK),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootDataError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: Matrix
    symmetrizers: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    @cached_property
    def det_cartan(self) -> int:
        return bareiss_det(self.cartan)

    @cached_property
    def cartan_adjugate(self) -> Matrix:
        """``det(C) * C^-1``; integral, used to read off root signs."""
        inv = rational_inverse(self.cartan)
        return tuple(tuple(int(x * self.det_cartan) for x in row) for row in inv)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(_positive_roots(self))

    def simple_root_weight(self, i: int) -> Weight:
        """Weight coordinates of ``alpha_i`` (0-based ``i``)."""
        return tuple(row[i] for row in self.cartan)

    def root_to_weight(self, beta: Sequence[int]) -> Weight:
        return tuple(sum(c * b for c, b in zip(row, beta)) for row in self.cartan)

    def weight_to_root(self, lam: Sequence[int]) -> Root:
        """Inverse of :meth:`root_to_weight`; raises if ``lam`` is not in the root lattice."""
        out = []
        for row in self.cartan_adjugate:
            s = sum(a * x for a, x in zip(row, lam))
            if s % self.det_cartan:
                raise RootDataError(f"{tuple(lam)} is not in the root lattice")
            out.append(s // self.det_cartan)
        return tuple(out)


def _symmetrized_form(series: str, n: int) -> list[list[int]]:
    """Simple-root inner products ``<alpha_i, alpha_j>`` with short roots of length 2."""
    b = [[0] * n for _ in range(n)]

    def link(i, j, v):
        b[i - 1][j - 1] = b[j - 1][i - 1] = v

    if series == "A":
        lengths = [2] * n
        for i in range(1, n):
            link(i, i + 1, -1)
    elif series == "B":
        lengths = [4] * (n - 1) + [2]
        for i in range(1, n):
            link(i, i + 1, -2)
    elif series == "C":
        lengths = [2] * (n - 1) + [4]
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif series == "D":
        lengths = [2] * n
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif series == "E":
        lengths = [2] * n
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif series == "F":
        lengths = [4, 4, 2, 2]
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    else:  # G
        lengths = [2, 6]
        link(1, 2, -3)
    for i in range(n):
        b[i][i] = lengths[i]
    return b


@lru_cache(maxsize=None)
def root_system(series: str, rank: int) -> RootSystem:
    series = series.upper()
    if series not in RANK_RANGE:
        raise RootDataError(f"unknown series {series!r}")
    lo, hi = RANK_RANGE[series]
    if not lo <= rank <= hi:
        raise RootDataError(f"rank {rank} out of range for series {series} ({lo}..{hi})")
    b = _symmetrized_form(series, rank)
    d = tuple(b[i][i] // 2 for i in range(rank))
    cartan = tuple(tuple(b[i][j] // d[i] for j in range(rank)) for i in range(rank))
    # G = C^-T B C^-1 is the Gram matrix of the fundamental weights.
    cinv = rational_inverse(cartan)
    gram = mat_mul(mat_mul(transpose(cinv), b), cinv)
    gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
    return RootSystem(series, rank, cartan, d, gram)


def parse_type(text: str) -> RootSystem:
    """``"A2"`` -> ``root_system("A", 2)``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise RootDataError(f"cannot parse type {text!r}")
    return root_system(text[0].upper(), int(text[1:]))


def pair(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """Invariant form ``<lam, mu>`` of two weights given in the fundamental-weight basis."""
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise RootDataError(f"expected vectors of length {rs.rank}")
    return sum(
        (Fraction(lam[i]) * rs.gram[i][j] * mu[j]
         for i in range(rs.rank) for j in range(rs.rank) if lam[i] and mu[j]),
        Fraction(0),
    )


def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of ``s_i`` on weight coordinates (1-based ``i``); columns are images of ``omega_j``."""
    if not 1 <= i <= rs.rank:
        raise RootDataError(f"index {i} out of range 1..{rs.rank}")
    k = i - 1
    rows = []
    for a in range(rs.rank):
        row = [int(a == b) for b in range(rs.rank)]
        row[k] -= rs.cartan[a][k]
        rows.append(tuple(row))
    return tuple(rows)


def reflect_root(rs: RootSystem, i: int, beta: Sequence[int]) -> Root:
    """``s_i beta = beta - <beta, alpha_i^vee> alpha_i`` in simple-root coordinates (0-based ``i``)."""
    coroot_pairing = sum(rs.cartan[i][j] * beta[j] for j in range(rs.rank))
    out = list(beta)
    out[i] -= coroot_pairing
    return tuple(out)


def is_positive_root(beta: Sequence[int]) -> bool:
    return all(x >= 0 for x in beta) and any(beta)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def height(beta: Sequence[int]) -> int:
    return sum(beta)


def _positive_roots(rs: RootSystem) -> list[Root]:
    n = rs.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = reflect_root(rs, i, beta)
                if is_positive_root(gamma) and gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    # height first, then alpha_1-heavy roots first
    return sorted(seen, key=lambda b: (height(b), tuple(-x for x in b)))


def positive_roots(rs: RootSystem) -> tuple[Root, ...]:
    return rs.positive_roots
