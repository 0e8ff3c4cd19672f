"""Desk-scale checks of U_q(g) at rank <= 2 with exact q-fraction matrices.

Representations are given in a weight basis: ``uqsl2_rep(n)`` is V(n omega)
with basis ``v_0 (highest) .. v_n (lowest)`` and ``uqsl3_vector_rep()`` is
V(omega_1) of type A2.  Matrices act on column vectors, so entry ``[a][b]`` is
the coefficient of basis vector ``a`` in the image of basis vector ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .qarith import ONE, LaurentPoly, QFraction, exp_q_coefficients, q_binomial, q_int, specialize
from .rootdata import RootSystem, Weight, root_system

MAX_SL2 = 12
MAX_TENSOR = 8

QMatrix = list[list[QFraction]]


class QCheckError(ValueError):
    pass


# -- matrix helpers ---------------------------------------------------------

def zeros(rows: int, cols: int | None = None) -> QMatrix:
    cols = rows if cols is None else cols
    return [[QFraction(0) for _ in range(cols)] for _ in range(rows)]


def eye(n: int) -> QMatrix:
    m = zeros(n)
    for i in range(n):
        m[i][i] = QFraction(1)
    return m


def diag(entries: Sequence) -> QMatrix:
    m = zeros(len(entries))
    for i, x in enumerate(entries):
        m[i][i] = QFraction.coerce(x)
    return m


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    if len(a[0]) != len(b):
        raise QCheckError("shape mismatch in matrix product")
    out = zeros(len(a), len(b[0]))
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if not x:
                continue
            brow = b[k]
            orow = out[i]
            for j, y in enumerate(brow):
                if y:
                    orow[j] = orow[j] + x * y
    return out


def matadd(a: QMatrix, b: QMatrix) -> QMatrix:
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        raise QCheckError("shape mismatch in matrix sum")
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a: QMatrix, b: QMatrix) -> QMatrix:
    return matadd(a, scale(-1, b))


def scale(c, a: QMatrix) -> QMatrix:
    c = QFraction.coerce(c)
    return [[c * x for x in row] for row in a]


def matpow(a: QMatrix, k: int) -> QMatrix:
    out = eye(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def kron(a: QMatrix, b: QMatrix) -> QMatrix:
    """Kronecker product; basis ``(i, j)`` of the tensor sits at index ``i * dim(b) + j``."""
    n, m = len(a), len(b)
    out = zeros(n * m)
    for i in range(n):
        for k in range(n):
            x = a[i][k]
            if not x:
                continue
            for j in range(m):
                for l in range(m):
                    y = b[j][l]
                    if y:
                        out[i * m + j][k * m + l] = x * y
    return out


def is_zero(a: QMatrix) -> bool:
    return not any(x for row in a for x in row)


def determinant(a: QMatrix) -> QFraction:
    m = [list(row) for row in a]
    n = len(m)
    det = QFraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return QFraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det = det * p
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def proportional_scalar(a: QMatrix, b: QMatrix) -> QFraction | None:
    """The scalar ``s`` with ``a == s * b`` (``b`` nonzero), or ``None`` if there is none."""
    s = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if y:
                s = x / y
                break
        if s is not None:
            break
    if s is None:
        return None
    return s if scale(s, b) == a else None


def specialize_matrix(a: QMatrix) -> list[list[Fraction]]:
    return [[specialize(x) for x in row] for row in a]


# -- representations --------------------------------------------------------

@dataclass
class RepData:
    rs: RootSystem
    dimension: int
    matrices: dict[tuple[str, int], QMatrix]
    weights: list[Weight]
    labels: list[str] = field(default_factory=list)

    def xp(self, i: int) -> QMatrix:
        return self.matrices["X+", i]

    def xm(self, i: int) -> QMatrix:
        return self.matrices["X-", i]

    def k(self, i: int) -> QMatrix:
        return self.matrices["K", i]

    def kinv(self, i: int) -> QMatrix:
        return self.matrices["K^-1", i]

    def copy(self) -> "RepData":
        mats = {key: [list(row) for row in m] for key, m in self.matrices.items()}
        return RepData(self.rs, self.dimension, mats, list(self.weights), list(self.labels))


def _qpow(e: int) -> QFraction:
    return QFraction(LaurentPoly.monomial(e))


def uqsl2_rep(n: int) -> RepData:
    """V(n): ``K v_m = q^{n-2m} v_m``, ``X+ v_m = [n-m+1] v_{m-1}``, ``X- v_m = [m+1] v_{m+1}``."""
    if not 0 <= n <= MAX_SL2:
        raise QCheckError(f"n must lie in 0..{MAX_SL2}")
    dim = n + 1
    xp, xm = zeros(dim), zeros(dim)
    for m in range(1, dim):
        xp[m - 1][m] = QFraction(q_int(n - m + 1))
    for m in range(dim - 1):
        xm[m + 1][m] = QFraction(q_int(m + 1))
    k = diag([_qpow(n - 2 * m) for m in range(dim)])
    kinv = diag([_qpow(2 * m - n) for m in range(dim)])
    mats = {("X+", 1): xp, ("X-", 1): xm, ("K", 1): k, ("K^-1", 1): kinv}
    weights = [(n - 2 * m,) for m in range(dim)]
    return RepData(root_system("A", 1), dim, mats, weights, [f"v{m}" for m in range(dim)])


def uqsl3_vector_rep() -> RepData:
    """V(omega_1) of type A2 on ``u_1, u_2, u_3``."""
    rs = root_system("A", 2)
    x1m, x2m = zeros(3), zeros(3)
    x1m[1][0] = QFraction(1)  # X-_1 u_1 = u_2
    x2m[2][1] = QFraction(1)  # X-_2 u_2 = u_3
    x1p = [list(col) for col in zip(*x1m)]
    x2p = [list(col) for col in zip(*x2m)]
    q, qi = _qpow(1), _qpow(-1)
    mats = {
        ("X+", 1): x1p, ("X-", 1): x1m,
        ("X+", 2): x2p, ("X-", 2): x2m,
        ("K", 1): diag([q, qi, 1]), ("K^-1", 1): diag([qi, q, 1]),
        ("K", 2): diag([1, q, qi]), ("K^-1", 2): diag([1, qi, q]),
    }
    weights = [(1, 0), (-1, 1), (0, -1)]
    return RepData(rs, 3, mats, weights, ["u1", "u2", "u3"])


def uqsl3_symmetric_rep(k: int) -> RepData:
    """V(k omega_1) of type A2 on monomials ``x^m``, ``m_1 + m_2 + m_3 = k``.

    ``X+_i x^m = [m_{i+1}] x^{m + e_i - e_{i+1}}``, ``X-_i x^m = [m_i] x^{m - e_i + e_{i+1}}``,
    ``K_i x^m = q^{m_i - m_{i+1}} x^m``.  ``k = 1`` recovers the vector representation.
    """
    if not 0 <= k <= MAX_TENSOR:
        raise QCheckError(f"k must lie in 0..{MAX_TENSOR}")
    rs = root_system("A", 2)
    basis = [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]
    index = {m: n for n, m in enumerate(basis)}
    dim = len(basis)
    mats: dict[tuple[str, int], QMatrix] = {}
    for i in (1, 2):
        xp, xm = zeros(dim), zeros(dim)
        kd, kinvd = [], []
        for col, m in enumerate(basis):
            a, b = m[i - 1], m[i]
            if b:
                up = list(m)
                up[i - 1] += 1
                up[i] -= 1
                xp[index[tuple(up)]][col] = QFraction(q_int(b))
            if a:
                down = list(m)
                down[i - 1] -= 1
                down[i] += 1
                xm[index[tuple(down)]][col] = QFraction(q_int(a))
            kd.append(_qpow(a - b))
            kinvd.append(_qpow(b - a))
        mats["X+", i], mats["X-", i] = xp, xm
        mats["K", i], mats["K^-1", i] = diag(kd), diag(kinvd)
    weights = [(m[0] - m[1], m[1] - m[2]) for m in basis]
    labels = ["x" + "".join(str(c) for c in m) for m in basis]
    return RepData(rs, dim, mats, weights, labels)


# -- relation checks --------------------------------------------------------

@dataclass
class RelationReport:
    results: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def lines(self) -> list[str]:
        return [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in self.results.items()]


RELATION_FAMILIES = ("K_inverse", "K_commute", "K_conjugation", "commutator", "serre")


def verify_relations(rep: RepData, rs: RootSystem | None = None) -> RelationReport:
    """Check the defining relations of U_q(g) on ``rep`` exactly.

    The commutator relation is checked in the cleared form
    ``(q_i - q_i^-1)(X+_i X-_j - X-_j X+_i) = delta_ij (K_i - K_i^-1)`` and the
    Serre relations carry the usual alternating signs.
    """
    rs = rep.rs if rs is None else rs
    r = rs.rank
    dim = rep.dimension
    for key, m in rep.matrices.items():
        if len(m) != dim or any(len(row) != dim for row in m):
            raise QCheckError(f"matrix {key} is not {dim}x{dim}")
    for i in range(1, r + 1):
        for name in ("X+", "X-", "K", "K^-1"):
            if (name, i) not in rep.matrices:
                raise QCheckError(f"missing generator {name}_{i}")
    ident = eye(dim)
    res = {name: True for name in RELATION_FAMILIES}
    for i in range(1, r + 1):
        di = rs.symmetrizers[i - 1]
        qi = _qpow(di)
        qi_inv = _qpow(-di)
        k, kinv = rep.k(i), rep.kinv(i)
        if matmul(k, kinv) != ident or matmul(kinv, k) != ident:
            res["K_inverse"] = False
        for j in range(1, r + 1):
            cij = rs.cartan[i - 1][j - 1]
            if matmul(k, rep.k(j)) != matmul(rep.k(j), k):
                res["K_commute"] = False
            for sign, x in ((1, rep.xp(j)), (-1, rep.xm(j))):
                if matmul(matmul(k, x), kinv) != scale(_qpow(sign * di * cij), x):
                    res["K_conjugation"] = False
            bracket = matsub(matmul(rep.xp(i), rep.xm(j)), matmul(rep.xm(j), rep.xp(i)))
            lhs = scale(qi - qi_inv, bracket)
            rhs = matsub(k, kinv) if i == j else zeros(dim)
            if lhs != rhs:
                res["commutator"] = False
            if i != j:
                top = 1 - cij
                for xi, xj in ((rep.xp(i), rep.xp(j)), (rep.xm(i), rep.xm(j))):
                    total = zeros(dim)
                    for kk in range(top + 1):
                        coeff = QFraction((-1) ** kk * q_binomial(top, kk, di))
                        term = matmul(matmul(matpow(xi, kk), xj), matpow(xi, top - kk))
                        total = matadd(total, scale(coeff, term))
                    if not is_zero(total):
                        res["serre"] = False
    return RelationReport(res)


def check_weight_grading(rep: RepData, rs: RootSystem | None = None) -> bool:
    """``X+-_i`` shift weights by ``+-alpha_i`` and ``K_i`` acts by ``q^{<lam, alpha_i>}``."""
    rs = rep.rs if rs is None else rs
    for i in range(1, rs.rank + 1):
        alpha = rs.simple_root_weight(i - 1)
        di = rs.symmetrizers[i - 1]
        for sign, x in ((1, rep.xp(i)), (-1, rep.xm(i))):
            for a in range(rep.dimension):
                for b in range(rep.dimension):
                    if x[a][b]:
                        shifted = tuple(w + sign * s for w, s in zip(rep.weights[b], alpha))
                        if tuple(rep.weights[a]) != shifted:
                            return False
        k = rep.k(i)
        for a in range(rep.dimension):
            # <lam, alpha_i> = d_i lam_i
            if k[a][a] != _qpow(di * rep.weights[a][i - 1]):
                return False
            if any(k[a][b] for b in range(rep.dimension) if b != a):
                return False
    return True


def classical_limit_ok(n: int) -> bool:
    """At ``q = 1`` the matrices of V(n) satisfy ``[e, f] = h`` with ``h = diag(n - 2m)``."""
    rep = uqsl2_rep(n)
    e = specialize_matrix(rep.xp(1))
    f = specialize_matrix(rep.xm(1))
    dim = n + 1

    def mm(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(dim)) for j in range(dim)] for i in range(dim)]

    ef, fe = mm(e, f), mm(f, e)
    h = [[Fraction(n - 2 * i) if i == j else Fraction(0) for j in range(dim)] for i in range(dim)]
    bracket = [[ef[i][j] - fe[i][j] for j in range(dim)] for i in range(dim)]
    k = specialize_matrix(rep.k(1))
    return bracket == h and all(k[i][i] == 1 for i in range(dim))


# -- R-matrix of a simple reflection on V(n) (x) V(m) ------------------------

def _guard(n: int, m: int) -> None:
    if not (0 <= n <= MAX_TENSOR and 0 <= m <= MAX_TENSOR):
        raise QCheckError(f"n and m must lie in 0..{MAX_TENSOR}")


def rmatrix_on_tensor(n: int, m: int) -> QMatrix:
    """``R^s = exp_q((1 - q^-2) X+ (x) X-)`` acting on ``V(n) (x) V(m)``.

    With ``exp_q(y) = sum_k q^{k(k+1)/2} y^k / [k]!`` the series stops at
    ``k = min(n, m)`` since ``X+`` and ``X-`` are nilpotent.
    """
    _guard(n, m)
    xp = uqsl2_rep(n).xp(1)
    xm = uqsl2_rep(m).xm(1)
    top = min(n, m)
    coeffs = exp_q_coefficients(top, 1)
    t = QFraction(1 - LaurentPoly.monomial(-2))
    out = eye((n + 1) * (m + 1))
    for k in range(1, top + 1):
        term = kron(matpow(xp, k), matpow(xm, k))
        out = matadd(out, scale(coeffs[k] * t ** k, term))
    return out


def rmatrix_inverse(n: int, m: int) -> QMatrix:
    """Inverse of :func:`rmatrix_on_tensor` via the finite geometric series in ``I - R``."""
    r = rmatrix_on_tensor(n, m)
    size = len(r)
    nil = matsub(eye(size), r)
    out = eye(size)
    power = eye(size)
    for _ in range(min(n, m)):
        power = matmul(power, nil)
        out = matadd(out, power)
    return out


def phi_slice(n: int, m: int) -> list[QMatrix]:
    """Contractions ``(v_j^* (x) id)(R^s (v_n (x) .))`` for ``j = n, n-1, ..., 0``.

    ``v_n`` is the lowest weight vector of V(n), a nonzero multiple of
    ``T_s v_lambda``; each output is an operator on V(m).
    """
    _guard(n, m)
    r = rmatrix_on_tensor(n, m)
    dm = m + 1
    out = []
    for j in range(n, -1, -1):
        op = [[r[j * dm + a][n * dm + b] for b in range(dm)] for a in range(dm)]
        out.append(op)
    return out


def phi_scalar(n: int, j: int) -> QFraction:
    """The coefficient ``s_j`` with ``phi_slice(n, m)[n - j] == s_j * (X-)^{n-j}``."""
    k = n - j
    xp = uqsl2_rep(n).xp(1)
    coeff = exp_q_coefficients(k, 1)[k]
    t = QFraction(1 - LaurentPoly.monomial(-2))
    return coeff * t ** k * matpow(xp, k)[j][n]


def rmatrix_is_unipotent(n: int, m: int) -> bool:
    """``R - I`` is strictly upper triangular in the lexicographic tensor basis."""
    r = rmatrix_on_tensor(n, m)
    size = len(r)
    for a in range(size):
        for b in range(a + 1):
            expected = ONE if a == b else 0
            if r[a][b] != expected:
                return False
    return True


@dataclass
class QCheckSummary:
    results: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.results.values())


def run_qcheck(n: int = 2, m: int = 2) -> QCheckSummary:
    """The suite behind the ``qcheck`` CLI subcommand."""
    res: dict[str, bool] = {}
    for k in range(0, n + 1):
        rep = uqsl2_rep(k)
        rel = verify_relations(rep)
        for name, ok in rel.results.items():
            res[f"sl2 V({k}) {name}"] = ok
        res[f"sl2 V({k}) weights"] = check_weight_grading(rep)
    rep3 = uqsl3_vector_rep()
    for name, ok in verify_relations(rep3).results.items():
        res[f"sl3 V(w1) {name}"] = ok
    res["sl3 V(w1) weights"] = check_weight_grading(rep3)
    r = rmatrix_on_tensor(n, m)
    size = len(r)
    res[f"R({n},{m}) unipotent"] = rmatrix_is_unipotent(n, m)
    res[f"R({n},{m}) nilpotent"] = is_zero(matpow(matsub(r, eye(size)), min(n, m) + 1))
    res[f"R({n},{m}) det 1"] = determinant(r) == QFraction(1)
    xm = uqsl2_rep(m).xm(1)
    ok = True
    for idx, op in enumerate(phi_slice(n, m)):
        j = n - idx
        s = phi_scalar(n, j)
        ok = ok and bool(s) and op == scale(s, matpow(xm, n - j))
    res[f"phi_slice({n},{m}) spans X- powers"] = ok
    return QCheckSummary(res)
