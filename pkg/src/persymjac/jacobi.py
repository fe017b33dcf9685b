"""Jacobi (symmetric tridiagonal) matrices and the forward spectral problem.

A matrix of size ``N+1`` is held either in symmetric form -- diagonal
``b_0..b_N`` and off-diagonal ``a_1..a_N`` -- or in the monic recurrence
form with ``u_n = a_n**2 > 0``.  The associated monic polynomials obey

    P_{n+1}(x) = (x - b_n) P_n(x) - u_n P_{n-1}(x),   P_0 = 1,

``P_{N+1}`` is the characteristic polynomial, and the norms are
``h_n = u_1 ... u_n``.  A matrix is *persymmetric* (mirror-symmetric)
when it equals its reflection through the anti-diagonal:
``a_{N+1-i} = a_i`` and ``b_{N-i} = b_i``.

Eigenvalues are computed without forming a dense matrix: a Sturm-count
bisection on the recurrence followed by a short Newton polish.  Node
weights come from the classical formulas

    w_s = h_N / (P_N(x_s) P'_{N+1}(x_s))                 (general)
    w_s proportional to (-1)^{N+s} / P'_{N+1}(x_s)       (persymmetric)

with the persymmetric variant normalized to unit total mass; the scale
factor it implies is returned as ``h_N``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .polynomials import Polynomial

# Bisection brackets are narrowed to this absolute width before Newton.
_BISECT_ABS = 1e-13
# Relative gap below which two spectral points count as duplicates.
_DUP_REL = 1e-12


def _asarray1d(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float, ndmin=1)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must contain only finite values")
    return arr


class Spectrum:
    """A strictly increasing, finite sequence of eigenvalues."""

    __slots__ = ("values",)

    def __init__(self, values):
        arr = _asarray1d(values, "spectrum")
        if arr.size == 0:
            raise ValueError("a spectrum must contain at least one point")
        if arr.size > 1 and not np.all(np.diff(arr) > 0):
            raise ValueError("spectrum must be strictly increasing")
        arr = arr.copy()
        arr.flags.writeable = False
        self.values = arr

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        """Sort raw values and reject (near-)duplicates.

        Two points closer than ``1e-12 * max|x|`` are treated as one and
        rejected, since no Jacobi matrix with positive couplings can
        carry a repeated eigenvalue.
        """
        arr = np.sort(_asarray1d(values, "spectrum"))
        if arr.size == 0:
            raise ValueError("a spectrum must contain at least one point")
        if arr.size > 1:
            tol = _DUP_REL * float(np.max(np.abs(arr)))
            if np.any(np.diff(arr) <= tol):
                raise ValueError("duplicate spectral points")
        return cls(arr)

    @classmethod
    def coerce(cls, obj) -> "Spectrum":
        return obj if isinstance(obj, Spectrum) else cls.from_values(obj)

    @property
    def n(self) -> int:
        """Matrix index N (one less than the number of points)."""
        return self.values.size - 1

    @property
    def radius(self) -> float:
        return float(np.max(np.abs(self.values)))

    def __len__(self) -> int:
        return self.values.size

    def __iter__(self):
        return iter(self.values)

    def __repr__(self) -> str:
        return f"Spectrum({list(self.values)!r})"


class MonicJacobi:
    """Monic recurrence data: diagonal ``b_0..b_N``, weights ``u_1..u_N > 0``."""

    __slots__ = ("b", "u")

    def __init__(self, b, u=()):
        bb = _asarray1d(b, "b")
        uu = _asarray1d(u, "u")
        if bb.size == 0:
            raise ValueError("b must contain at least one entry")
        if uu.size != bb.size - 1:
            raise ValueError("u must contain exactly one entry fewer than b")
        if uu.size and np.any(uu <= 0):
            raise NumericalError("recurrence weights u_n must be positive")
        bb, uu = bb.copy(), uu.copy()
        bb.flags.writeable = False
        uu.flags.writeable = False
        self.b, self.u = bb, uu

    @property
    def n(self) -> int:
        return self.b.size - 1

    def norms(self) -> np.ndarray:
        """The sequence ``h_0 = 1, h_n = u_1 ... u_n``."""
        return np.concatenate(([1.0], np.cumprod(self.u)))

    def __repr__(self) -> str:
        return f"MonicJacobi(b={list(self.b)!r}, u={list(self.u)!r})"


class SymmetricJacobi:
    """Symmetric tridiagonal matrix: diagonal ``b``, off-diagonal ``a``.

    Couplings ``a_n`` may carry either sign (isospectral deformations
    produce negative and, on a measure-zero angle set, zero couplings);
    conversion to monic form requires them all nonzero.
    """

    __slots__ = ("b", "a")

    def __init__(self, b, a=()):
        bb = _asarray1d(b, "b")
        aa = _asarray1d(a, "a")
        if bb.size == 0:
            raise ValueError("b must contain at least one entry")
        if aa.size != bb.size - 1:
            raise ValueError("a must contain exactly one entry fewer than b")
        bb, aa = bb.copy(), aa.copy()
        bb.flags.writeable = False
        aa.flags.writeable = False
        self.b, self.a = bb, aa

    @classmethod
    def from_monic(cls, K: MonicJacobi) -> "SymmetricJacobi":
        """Canonical symmetric form with ``a_n = +sqrt(u_n)``."""
        return cls(K.b, np.sqrt(K.u))

    def to_monic(self) -> MonicJacobi:
        if self.a.size and np.any(self.a == 0):
            raise NumericalError("matrix has a zero coupling; monic form undefined")
        return MonicJacobi(self.b, self.a * self.a)

    @property
    def n(self) -> int:
        return self.b.size - 1

    def dense(self) -> np.ndarray:
        m = np.diag(self.b)
        if self.a.size:
            idx = np.arange(self.a.size)
            m[idx, idx + 1] = self.a
            m[idx + 1, idx] = self.a
        return m

    def __repr__(self) -> str:
        return f"SymmetricJacobi(b={list(self.b)!r}, a={list(self.a)!r})"


class WeightTable:
    """Discrete orthogonality measure: points plus nonnegative unit-mass weights."""

    __slots__ = ("points", "w")

    def __init__(self, points, w):
        pts = Spectrum.coerce(points)
        ww = _asarray1d(w, "weights")
        if ww.size != len(pts):
            raise ValueError("weights and points must have equal length")
        if np.any(ww < -1e-12):
            raise ValueError("weights must be nonnegative")
        ww = np.maximum(ww, 0.0)
        if abs(float(np.sum(ww)) - 1.0) > 1e-12:
            raise ValueError("weights must sum to one")
        ww.flags.writeable = False
        self.points = pts
        self.w = ww

    def __len__(self) -> int:
        return self.w.size

    def __repr__(self) -> str:
        return f"WeightTable(points={list(self.points.values)!r}, w={list(self.w)!r})"


@dataclass(frozen=True)
class OrthoPolySystem:
    """Monic orthogonal polynomials ``P_0..P_{N+1}`` with norms ``h_0..h_N``."""

    polys: tuple[Polynomial, ...]
    h: np.ndarray

    @property
    def n(self) -> int:
        return len(self.polys) - 2

    def orthonormal(self, k: int) -> Polynomial:
        """The orthonormal polynomial ``chi_k = P_k / sqrt(h_k)``."""
        return self.polys[k] * (1.0 / np.sqrt(self.h[k]))


# ----------------------------------------------------------------------
# forward problem
# ----------------------------------------------------------------------


def recurrence_polynomials(K: MonicJacobi) -> OrthoPolySystem:
    """Run the three-term recurrence in coefficient space.

    Returns ``P_0 .. P_{N+1}`` (the last being the characteristic
    polynomial of ``K``) together with the norms ``h_n``.
    """
    b, u = K.b, K.u
    polys = [Polynomial([1.0]), Polynomial([-b[0], 1.0])]
    for n in range(1, b.size):
        step = Polynomial([-b[n], 1.0])
        polys.append(step * polys[n] - u[n - 1] * polys[n - 1])
    return OrthoPolySystem(tuple(polys), K.norms())


def _sturm_count(b: np.ndarray, u: np.ndarray, xs: np.ndarray, pivmin: float) -> np.ndarray:
    """Number of eigenvalues strictly below each entry of ``xs``.

    Runs the Sturm chain of the recurrence in ratio (pivot) form
    ``d_i = (b_i - x) - u_i / d_{i-1}``; the sign changes of the monic
    chain ``P_0(x)..P_{N+1}(x)`` are exactly the negative pivots.
    """
    d = b[0] - xs
    d = np.where(np.abs(d) < pivmin, -pivmin, d)
    cnt = (d < 0).astype(np.int64)
    for i in range(1, b.size):
        d = (b[i] - xs) - u[i - 1] / d
        d = np.where(np.abs(d) < pivmin, -pivmin, d)
        cnt += d < 0
    return cnt


def _char_eval(b: np.ndarray, u: np.ndarray, xs: np.ndarray):
    """Evaluate ``P_N``, ``P_{N+1}`` and ``P'_{N+1}`` at each point.

    All four recurrence carriers are rescaled jointly per point whenever
    their magnitude leaves a safe window, so only a common positive
    factor is lost; the accumulated log-scale is returned alongside.
    """
    xs = np.asarray(xs, dtype=float)
    p_prev = np.ones_like(xs)
    p = xs - b[0]
    dp_prev = np.zeros_like(xs)
    dp = np.ones_like(xs)
    logscale = np.zeros_like(xs)
    for i in range(1, b.size):
        t = xs - b[i]
        p_next = t * p - u[i - 1] * p_prev
        dp_next = p + t * dp - u[i - 1] * dp_prev
        p_prev, p, dp_prev, dp = p, p_next, dp, dp_next
        m = np.maximum(np.maximum(np.abs(p), np.abs(p_prev)),
                       np.maximum(np.abs(dp), np.abs(dp_prev)))
        stretch = (m > 1e120) | ((m > 0) & (m < 1e-120))
        if np.any(stretch):
            s = np.where(stretch, 1.0 / m, 1.0)
            p_prev, p, dp_prev, dp = p_prev * s, p * s, dp_prev * s, dp * s
            logscale = logscale - np.log(s)
    return p_prev, p, dp, logscale


def eigenvalues(K: MonicJacobi) -> Spectrum:
    """All eigenvalues of ``K``, strictly increasing.

    Sturm-count bisection on the interval
    ``[min b - 2 sum|a|, max b + 2 sum|a|]`` down to absolute width
    1e-13, then at most five Newton steps on the characteristic
    polynomial, clamped to the certified bracket.  No dense matrix is
    formed.  Positive ``u_n`` guarantee the eigenvalues are simple.
    """
    b, u = K.b, K.u
    n1 = b.size
    if n1 == 1:
        return Spectrum(b)
    reach = 2.0 * float(np.sum(np.sqrt(u)))
    lo0 = float(np.min(b)) - reach
    hi0 = float(np.max(b)) + reach
    pivmin = 1e-292 * max(1.0, float(np.max(u)))
    ks = np.arange(n1)
    lo = np.full(n1, lo0)
    hi = np.full(n1, hi0)
    iters = int(np.ceil(np.log2(max((hi0 - lo0) / _BISECT_ABS, 2.0)))) + 1
    for _ in range(min(iters, 200)):
        mid = 0.5 * (lo + hi)
        cnt = _sturm_count(b, u, mid, pivmin)
        low_side = cnt <= ks
        lo = np.where(low_side, mid, lo)
        hi = np.where(low_side, hi, mid)
    lam = 0.5 * (lo + hi)
    for _ in range(5):
        _, val, dval, _ = _char_eval(b, u, lam)
        safe = dval != 0.0
        step = np.where(safe, val / np.where(safe, dval, 1.0), 0.0)
        new = np.clip(lam - step, lo, hi)
        moved = float(np.max(np.abs(new - lam)))
        lam = new
        if moved == 0.0:
            break
    try:
        return Spectrum(lam)
    except ValueError as exc:
        raise NumericalError(f"eigenvalues failed to separate: {exc}") from exc


def weights_general(K: MonicJacobi, spectrum) -> WeightTable:
    """Node weights ``w_s = h_N / (P_N(x_s) P'_{N+1}(x_s))``, renormalized.

    ``spectrum`` must be the eigenvalue set of ``K``.  Logarithmic
    bookkeeping keeps the quotient representable even when ``h_N`` or
    the polynomial values leave double range.
    """
    spec = Spectrum.coerce(spectrum)
    if len(spec) != K.b.size:
        raise ValueError("spectrum size does not match the matrix")
    pN, _, dpN1, logscale = _char_eval(K.b, K.u, spec.values)
    prod = pN * dpN1
    if np.any(prod <= 0) or not np.all(np.isfinite(prod)):
        raise NumericalError("weight formula produced a nonpositive node value; "
                             "spectrum likely does not belong to this matrix")
    logh = float(np.sum(np.log(K.u))) if K.u.size else 0.0
    logw = logh - (np.log(prod) + 2.0 * logscale)
    logw -= _logsumexp(logw)
    w = np.exp(logw)
    w /= np.sum(w)
    return WeightTable(spec, w)


def weights_persymmetric(spectrum) -> tuple[WeightTable, float]:
    """Weights of the persymmetric matrix with the given spectrum.

    Raw weights are ``r_s = (-1)^{N+s} / P'_{N+1}(x_s)`` with
    ``P_{N+1}(x) = prod (x - x_s)``; for a strictly increasing spectrum
    the sign prefactor cancels the sign of the derivative, so every
    ``r_s`` is positive.  The table is normalized to total mass one and
    the implied norm ``h_N = (sum r_s)**-2`` is returned with it.
    """
    spec = Spectrum.coerce(spectrum)
    x = spec.values
    n1 = x.size
    if n1 == 1:
        return WeightTable(spec, np.ones(1)), 1.0
    diff = x[:, None] - x[None, :]
    neg = np.sum(diff < 0, axis=1)
    if np.any(neg != n1 - 1 - np.arange(n1)):
        raise NumericalError("raw persymmetric weight has a nonpositive sign; "
                             "spectrum points are not distinct and ordered")
    np.fill_diagonal(diff, 1.0)
    logr = -np.sum(np.log(np.abs(diff)), axis=1)
    lse = _logsumexp(logr)
    w = np.exp(logr - lse)
    w /= np.sum(w)
    return WeightTable(spec, w), float(np.exp(-2.0 * lse))


def _logsumexp(a: np.ndarray) -> float:
    m = float(np.max(a))
    return m + float(np.log(np.sum(np.exp(a - m))))


def is_persymmetric(J: SymmetricJacobi, tol: float = 1e-10) -> bool:
    """Whether ``J`` equals its anti-diagonal reflection within ``tol``."""
    if float(np.max(np.abs(J.b - J.b[::-1]), initial=0.0)) > tol:
        return False
    if J.a.size and float(np.max(np.abs(J.a - J.a[::-1]))) > tol:
        return False
    return True


def mirror_residual(K: MonicJacobi, spectrum) -> float:
    """Deviation from the mirror relation of the orthonormal polynomials.

    For a persymmetric matrix the orthonormal values at the nodes obey
    ``chi_{N-n}(x_s) = (-1)^{N+s} chi_n(x_s)``; the returned residual is
    the maximum absolute violation over all ``n, s``.  Non-persymmetric
    input yields an O(1) value, which makes this usable as a negative
    control as well as a verification metric.
    """
    spec = Spectrum.coerce(spectrum)
    b, u = K.b, K.u
    if len(spec) != b.size:
        raise ValueError("spectrum size does not match the matrix")
    x = spec.values
    n1 = b.size
    vals = np.empty((n1, n1))
    vals[0] = 1.0
    if n1 > 1:
        vals[1] = x - b[0]
        for n in range(1, n1 - 1):
            vals[n + 1] = (x - b[n]) * vals[n] - u[n - 1] * vals[n - 1]
    chi = vals / np.sqrt(K.norms())[:, None]
    signs = np.where((n1 - 1 + np.arange(n1)) % 2 == 0, 1.0, -1.0)
    return float(np.max(np.abs(chi[::-1, :] - signs[None, :] * chi)))
