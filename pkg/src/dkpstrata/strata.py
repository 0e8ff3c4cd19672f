"""Torus-invariant prime strata of the algebras ``U^w_-``, as Weyl group data.

For ``y <= w`` the torus-invariant prime of ``U^w_-`` indexed by ``y`` has a
stratum homeomorphic to the spectrum of a Laurent polynomial ring in
``dim E_{-1}(w^-1 y)`` variables.  The central Laurent generators are indexed
by the lattice ``P_{y,w} = {lam in P : (y + w) lam = 0}``, whose rank is that
same number.  Everything here is computed with exact integer/rational
arithmetic on the weight-lattice matrices of ``y`` and ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import bareiss_rank, integer_kernel_basis, mat_add, mat_vec
from .rootdata import RootSystem, Weight, pair
from .weyl import DEFAULT_CAP, WeylElement, WeylError, bruhat_leq, lower_set


class StrataError(ValueError):
    pass


@dataclass(frozen=True)
class StratumRecord:
    y: WeylElement
    length_y: int
    stratum_dim: int
    richardson_dim: int
    leaf_dim: int
    lattice_basis: tuple[Weight, ...]
    e1_dim: int | None = field(default=None)

    @property
    def y_word(self) -> tuple[int, ...]:
        return self.y.word


def _check(rs: RootSystem, *elements: WeylElement) -> None:
    for x in elements:
        if x.rs != rs:
            raise WeylError(f"element of {x.rs.name} used with {rs.name}")


def eigenspace_dim(x: WeylElement, sign: int) -> int:
    """``dim ker(M(x) - sign * I)`` by rank-nullity over Q."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    r = x.rs.rank
    shifted = [[x.matrix[i][j] - sign * int(i == j) for j in range(r)] for i in range(r)]
    return r - bareiss_rank(shifted)


def stratum_dimension(rs: RootSystem, w: WeylElement, y: WeylElement) -> int:
    """Dimension of the stratum over the prime ``I_w(y)``, i.e. ``dim E_{-1}(w^-1 y)``."""
    _check(rs, w, y)
    if not bruhat_leq(y, w):
        raise StrataError(f"y={y.word} is not below w={w.word} in Bruhat order")
    return eigenspace_dim(w.inverse() * y, -1)


def kernel_lattice_basis(rs: RootSystem, y: WeylElement, w: WeylElement) -> list[Weight]:
    """HNF basis of ``P_{y,w} = ker(M(y) + M(w)) ∩ Z^r``."""
    _check(rs, y, w)
    return integer_kernel_basis(mat_add(y.matrix, w.matrix))


def commutation_exponent(
    rs: RootSystem,
    y: WeylElement,
    w: WeylElement,
    lam: Sequence[int],
    mu: Sequence[int],
    nu: Sequence[int],
) -> Fraction:
    """Exponent ``-<(y + w) lam, nu + w mu>`` of the q-commutation of ``a_lam``
    past ``c_w^-mu c^mu_{xi, v_mu}`` with ``xi`` of weight ``nu``."""
    _check(rs, y, w)
    for v in (lam, mu, nu):
        if len(v) != rs.rank:
            raise StrataError(f"expected vectors of length {rs.rank}")
    left = mat_vec(mat_add(y.matrix, w.matrix), lam)
    right = tuple(a + b for a, b in zip(nu, w.act(mu)))
    return -pair(rs, left, right)


def normal_element_weight(rs: RootSystem, y: WeylElement, lam: Sequence[int]) -> Weight:
    """Weight ``2 y lam`` of ``a_lam`` under the right H-action (for lam in P_{y,w})."""
    _check(rs, y)
    return tuple(2 * x for x in y.act(lam))


def double_bruhat_stratum_dim(rs: RootSystem, y: WeylElement, w: WeylElement) -> int:
    """``dim E_{+1}(w^-1 y)``, the stratum dimension for the pair ``(y, w)`` in O_q(G)."""
    _check(rs, y, w)
    return eigenspace_dim(w.inverse() * y, 1)


def stratum_record(rs: RootSystem, w: WeylElement, y: WeylElement, double: bool = False) -> StratumRecord:
    dim = stratum_dimension(rs, w, y)
    basis = tuple(kernel_lattice_basis(rs, y, w))
    if len(basis) != dim:
        raise AssertionError(f"lattice rank {len(basis)} != eigenspace dimension {dim} at y={y.word}")
    rich = w.length - y.length
    return StratumRecord(
        y=y,
        length_y=y.length,
        stratum_dim=dim,
        richardson_dim=rich,
        leaf_dim=rich - dim,
        lattice_basis=basis,
        e1_dim=double_bruhat_stratum_dim(rs, y, w) if double else None,
    )


def stratification_report(
    rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP, double: bool = False
) -> list[StratumRecord]:
    """One record per ``y`` in the Bruhat interval below ``w``, sorted by (length, word)."""
    _check(rs, w)
    return [stratum_record(rs, w, y, double) for y in lower_set(w, cap)]
