"""Adjacency spectra and closed-form spectral-radius bounds.

The symmetric eigensolver is Householder reduction to tridiagonal form
followed by implicit-shift QL, eigenvalues only.  Small non-symmetric
matrices (quotients of equitable partitions) go through an exact
characteristic polynomial and Sturm-sequence bisection instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, EmptyGraphError, NumericalError
from .graph import Graph

QL_TOL = 1e-14
QL_MAX_SWEEPS = 50


# -- symmetric eigensolver -----------------------------------------------

def tridiagonalize(a) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix.

    Returns ``(d, e)``: the diagonal and the sub-diagonal (length n-1) of a
    tridiagonal matrix orthogonally similar to ``a``.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    e = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = a[k + 1:, k]
        tail = float(np.dot(x[1:], x[1:]))
        if tail == 0.0:
            e[k] = x[0]
            continue
        norm = math.sqrt(x[0] * x[0] + tail)
        alpha = -norm if x[0] >= 0 else norm
        v = x.copy()
        v[0] -= alpha
        v /= math.sqrt(float(np.dot(v, v)))
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = 2.0 * (p - float(np.dot(v, p)) * v)
        sub -= np.outer(v, w) + np.outer(w, v)
        e[k] = alpha
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    return a.diagonal().copy(), e


def tridiagonal_eigenvalues(d, e) -> list[float]:
    """Implicit QL iteration on a symmetric tridiagonal matrix.

    ``e[i]`` couples ``d[i]`` and ``d[i+1]``.  Raises NumericalError if an
    eigenvalue needs more than QL_MAX_SWEEPS sweeps.
    """
    d = [float(x) for x in d]
    n = len(d)
    e = [float(x) for x in e] + [0.0]
    if n == 0:
        return []
    anorm = max(abs(d[i]) + abs(e[i]) + (abs(e[i - 1]) if i else 0.0) for i in range(n))
    floor = 1e-30 * anorm
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                em = abs(e[m])
                if em <= QL_TOL * (abs(d[m]) + abs(d[m + 1])) or em <= floor:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > QL_MAX_SWEEPS:
                raise NumericalError(f"QL iteration did not converge for eigenvalue {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def symmetric_eigenvalues(a) -> list[float]:
    """All eigenvalues of a real symmetric matrix, descending."""
    d, e = tridiagonalize(a)
    return sorted(tridiagonal_eigenvalues(d, e), reverse=True)


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: tuple[float, ...]

    @property
    def rho(self) -> float:
        return self.eigenvalues[0]

    @property
    def lambda2(self) -> float:
        return self.eigenvalues[1] if len(self.eigenvalues) > 1 else math.nan

    @property
    def lambda_n(self) -> float:
        return self.eigenvalues[-1]

    @property
    def lambda_abs(self) -> float:
        """Second largest absolute eigenvalue, max(|lambda_2|, |lambda_n|)."""
        if len(self.eigenvalues) < 2:
            return math.nan
        return max(abs(self.eigenvalues[1]), abs(self.eigenvalues[-1]))


def eigen_report(g: Graph) -> SpectralReport:
    if g.n == 0:
        raise EmptyGraphError("spectrum of the empty graph is undefined")
    return SpectralReport(tuple(symmetric_eigenvalues(g.adj)))


def spectral_radius(g: Graph) -> float:
    return eigen_report(g).rho


def is_positive_definite(a) -> bool:
    """Symmetric Gaussian elimination; positive definite iff every pivot > 0."""
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    # a tiny pivot may overflow the update; the resulting inf/nan pivots read as "not PD"
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(n):
            piv = a[k, k]
            if not piv > 0.0:
                return False
            if k + 1 < n:
                col = a[k + 1:, k] / piv
                a[k + 1:, k + 1:] -= np.outer(col, a[k, k + 1:])
    return True


def radius_exceeds(g: Graph, theta: float) -> bool:
    """True iff rho(g) > theta, decided from the inertia of theta*I - A.

    Reliable unless rho lies within about 1e-12 * n of ``theta``; callers
    that need an equality band test ``theta +/- tol`` separately.
    """
    return not is_positive_definite(theta * np.eye(g.n) - g.adj)


def batch_radius_exceeds(adj: np.ndarray, theta: float) -> np.ndarray:
    """Vectorised ``radius_exceeds`` over a (B, n, n) adjacency batch."""
    b, n, _ = adj.shape
    a = theta * np.eye(n) - adj.astype(float)
    ok = np.ones(b, dtype=bool)
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(n):
            piv = a[:, k, k]
            ok &= piv > 0.0
            if k + 1 < n:
                safe = np.where(ok, piv, 1.0)
                col = a[:, k + 1:, k] / safe[:, None]
                a[:, k + 1:, k + 1:] -= col[:, :, None] * a[:, None, k, k + 1:]
    return ~ok


# -- small (possibly non-symmetric) matrices -------------------------------

def _as_float_matrix(m) -> np.ndarray:
    a = np.array([[float(x) for x in row] for row in m], dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    return a


def _cofactor_det(a) -> float:
    k = len(a)
    if k == 0:
        return 1.0
    if k == 1:
        return a[0][0]
    if k == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0.0
    for j in range(k):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        total += (-1) ** j * a[0][j] * _cofactor_det(minor)
    return total


def _lu_det(a: np.ndarray) -> float:
    a = a.copy()
    k = a.shape[0]
    det = 1.0
    for col in range(k):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0.0:
            return 0.0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        a[col + 1:, col:] -= np.outer(a[col + 1:, col] / a[col, col], a[col, col:])
    return float(det)


def char_poly_eval(m, x: float) -> float:
    """det(xI - M): cofactor expansion for order <= 4, pivoted LU beyond."""
    a = _as_float_matrix(m)
    k = a.shape[0]
    b = x * np.eye(k) - a
    if k <= 4:
        return float(_cofactor_det(b.tolist()))
    return _lu_det(b)


def char_poly_exact(m) -> list[Fraction]:
    """Coefficients of det(xI - M), highest degree first, in exact arithmetic.

    Float entries are converted exactly, so the result is the polynomial
    of the binary matrix actually stored.
    """
    a = [[Fraction(x) for x in row] for row in m]
    k = len(a)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * k for _ in range(k)]
    c = Fraction(1)
    for i in range(1, k + 1):
        # Faddeev-LeVerrier: M_i = A M_{i-1} + c_{i-1} I, c_i = -tr(A M_i) / i
        prod = [[sum(a[r][t] * mk[t][s] for t in range(k)) for s in range(k)] for r in range(k)]
        for r in range(k):
            prod[r][r] += c
        mk = prod
        am = sum(sum(a[r][t] * mk[t][r] for t in range(k)) for r in range(k))
        c = -am / i
        coeffs.append(c)
    return coeffs


def _poly_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    while len(num) >= len(den):
        q = num[0] / den[0]
        for i in range(len(den)):
            num[i] -= q * den[i]
        num.pop(0)
    while num and num[0] == 0:
        num.pop(0)
    return num


def _poly_quo(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    out = []
    while len(num) >= len(den):
        q = num[0] / den[0]
        out.append(q)
        for i in range(len(den)):
            num[i] -= q * den[i]
        num.pop(0)
    return out


def _derivative(p: list[Fraction]) -> list[Fraction]:
    deg = len(p) - 1
    return [c * (deg - i) for i, c in enumerate(p[:-1])]


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    """Sturm chain of the square-free part of ``p``.

    Dividing out gcd(p, p') keeps the sign-change count exact even when the
    bisection lands on a repeated root.
    """
    if len(p) > 2:
        a, b = p, _derivative(p)
        while b:
            a, b = b, _poly_rem(a, b)
        if len(a) > 1:
            p = _poly_quo(p, a)
    chain = [p, _derivative(p)]
    while len(chain[-1]) > 1:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    changes = 0
    last = 0
    for poly in chain:
        v = Fraction(0)
        for c in poly:
            v = v * x + c
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                changes += 1
            last = s
    return changes


def eig_max_small(m, *, rtol: float = 1e-14) -> float:
    """Largest real eigenvalue of a small square matrix.

    Bisection on the Sturm sequence of the exact characteristic polynomial;
    every real eigenvalue lies in [-R, R] with R the largest absolute row sum.
    """
    a = [[Fraction(x) for x in row] for row in m]
    k = len(a)
    if k == 0:
        raise ValueError("empty matrix")
    if k == 1:
        return float(a[0][0])
    chain = _sturm_chain(char_poly_exact(a))
    bound = max(sum(abs(x) for x in row) for row in a) + 1
    lo, hi = -bound, bound
    v_hi = _sign_changes(chain, hi)
    if _sign_changes(chain, lo) - v_hi == 0:
        raise NumericalError("matrix has no real eigenvalue")
    # invariant: the largest real root lies in (lo, hi]
    while hi - lo > rtol * max(1, abs(hi)):
        mid = (lo + hi) / 2
        if _sign_changes(chain, mid) - v_hi > 0:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


# -- closed-form bounds ----------------------------------------------------

def hong_bound(n: int, m: int) -> float:
    """sqrt(2m - n + 1); an upper bound on rho for graphs without isolated vertices."""
    rad = 2 * m - n + 1
    if rad < 0:
        raise DomainError(f"2m - n + 1 = {rad} is negative")
    return math.sqrt(rad)


def nikiforov_bound(n: int, m: int, delta: int) -> float:
    """(delta - 1)/2 + sqrt(2m - n*delta + (delta + 1)^2 / 4)."""
    rad = 2 * m - n * delta + (delta + 1) ** 2 / 4
    if rad < 0:
        raise DomainError(f"radicand {rad} is negative")
    return (delta - 1) / 2 + math.sqrt(rad)


def nikiforov_profile(p: int, q: int, x: float) -> float:
    """The min-degree bound viewed as a function of a real degree ``x``.

    Defined for nonnegative integers with 2q <= p(p-1) and 0 <= x <= p-1,
    where it is nonincreasing in ``x``.
    """
    if p < 0 or q < 0 or 2 * q > p * (p - 1):
        raise DomainError(f"need 0 <= 2q <= p(p-1); got p={p}, q={q}")
    if not 0 <= x <= p - 1:
        raise DomainError(f"need 0 <= x <= p-1; got x={x}, p={p}")
    rad = 2 * q - p * x + (1 + x) ** 2 / 4
    if rad < 0:
        # possible when q is small relative to p
        raise DomainError(f"radicand {rad} is negative")
    return (x - 1) / 2 + math.sqrt(rad)


def trace_checks(report: SpectralReport, m: int) -> tuple[float, float]:
    """(sum of eigenvalues, sum of squares - 2m); both should vanish."""
    ev = np.asarray(report.eigenvalues)
    return float(ev.sum()), float((ev ** 2).sum() - 2 * m)


def matrix_from_rows(rows: Sequence[Sequence]) -> np.ndarray:
    return _as_float_matrix(rows)
