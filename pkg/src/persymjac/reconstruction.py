"""Inverse spectral reconstruction of persymmetric Jacobi matrices.

Given a strictly increasing spectrum ``x_0 < ... < x_N``, there is a
unique persymmetric Jacobi matrix with that spectrum; this module
implements four independent routes to it:

``gs``  full Gram-Schmidt: the Stieltjes procedure (iterated discrete
        inner products) over the persymmetric node weights;
``le``  Lagrange-Euclid: build the characteristic polynomial from its
        roots and the top orthonormal polynomial by interpolation of
        its alternating node values, then run the Euclidean descent;
``mf``  mirror-fold: assemble the two midpoint polynomials from the
        even/odd spectral sublattices, descend the lower half, and
        mirror;
``hl``  half-lattice: run the Stieltjes procedure on one sublattice
        only, close the middle coefficients with the midpoint data, and
        mirror.

All four accept the spectrum unsorted (it is sorted on entry, with an
error on duplicates) and return the monic form with ``u_n > 0``.  The
spectrum is affinely mapped onto ``[-1, 1]`` internally and the
coefficients are mapped back exactly (``b -> rho*b + mu``,
``u -> rho^2 * u``), which keeps the coefficient representations well
scaled regardless of the input's units.

Everything degrades gracefully rather than silently: descent weights or
orthogonalization norms that come out nonpositive raise
``NumericalError``.  The coefficient-space routes (``le``, ``mf``)
break down first as ``N`` grows -- representing high-degree polynomials
by monomial coefficients is exponentially ill-conditioned -- while the
inner-product routes survive to a few hundred points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .jacobi import MonicJacobi, Spectrum, WeightTable, weights_persymmetric
from .polynomials import (TRIM_REL, Polynomial, lagrange_interpolate, poly_divrem,
                          poly_from_roots)

#: Default consistency tolerance for the module's internal assertions;
#: every check scales it by the magnitude of the data it inspects.
CONSISTENCY_TOL = 1e-8


@dataclass(frozen=True)
class MidpointData:
    """Sublattice characteristic polynomials and their root sums.

    ``omega0``/``omega1`` are the monic polynomials whose roots are the
    even-/odd-indexed spectral points; ``sigma0``/``sigma1`` are the
    corresponding root sums.
    """

    omega0: Polynomial
    omega1: Polynomial
    sigma0: float
    sigma1: float


@dataclass(frozen=True)
class MomentSequence:
    """Power moments ``c_n = sum_s w_s x_s^n`` of a discrete measure."""

    c: np.ndarray

    def __len__(self) -> int:
        return self.c.size

    def __getitem__(self, k: int) -> float:
        return float(self.c[k])


# ----------------------------------------------------------------------
# measure-side helpers
# ----------------------------------------------------------------------


def divided_difference(points, values) -> float:
    """Divided difference of tabulated data over distinct points.

    Computed in the symmetric form ``sum_s f(x_s) / prod_{t != s}(x_s - x_t)``;
    for ``n+1`` points this is the ``n``-th order difference, which
    vanishes whenever the data comes from a polynomial of degree < n.
    """
    x = np.asarray(points, dtype=float).ravel()
    v = np.asarray(values, dtype=float).ravel()
    if x.size != v.size:
        raise ValueError("points and values must have equal length")
    if x.size == 0:
        raise ValueError("at least one point is required")
    if np.unique(x).size != x.size:
        raise ValueError("divided differences require distinct points")
    if x.size == 1:
        return float(v[0])
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    return float(np.sum(v / np.prod(diff, axis=1)))


def moments(spectrum, upto: int) -> MomentSequence:
    """Moments ``c_0..c_upto`` of the persymmetric weight table.

    ``c_0`` is exactly one by normalization.  Orders above ``2N`` are
    refused: the table has only ``N+1`` points, so higher moments carry
    no new information and the callers here never need them.
    """
    spec = Spectrum.coerce(spectrum)
    if not 0 <= upto <= 2 * spec.n:
        raise ValueError("moment order must lie in [0, 2N]")
    table, _ = weights_persymmetric(spec)
    x, w = table.points.values, table.w
    c = np.empty(upto + 1)
    c[0] = 1.0
    p = np.ones_like(x)
    for k in range(1, upto + 1):
        p = p * x
        c[k] = float(np.sum(w * p))
    return MomentSequence(c)


def sublattice_weights(spectrum) -> tuple[WeightTable | None, WeightTable]:
    """Restrict the persymmetric weights to the even/odd sublattices.

    Each restriction is rescaled by two, which gives it unit mass.  For
    odd ``N`` both sublattices are returned (the low polynomials are
    orthogonal on either); for even ``N`` only the odd sublattice
    carries the orthogonality, so the even slot is ``None``.
    """
    spec = Spectrum.coerce(spectrum)
    if spec.n == 0:
        raise ValueError("sublattices require at least two spectral points")
    full, _ = weights_persymmetric(spec)
    x, w = spec.values, full.w
    odd = WeightTable(Spectrum(x[1::2]), 2.0 * w[1::2])
    if spec.n % 2 == 1:
        even = WeightTable(Spectrum(x[0::2]), 2.0 * w[0::2])
        return even, odd
    return None, odd


def midpoint_data(spectrum) -> MidpointData:
    """Characteristic polynomials and root sums of the two sublattices."""
    spec = Spectrum.coerce(spectrum)
    if spec.n < 1:
        raise ValueError("midpoint data requires at least two spectral points")
    ev = spec.values[0::2]
    od = spec.values[1::2]
    return MidpointData(
        omega0=poly_from_roots(ev),
        omega1=poly_from_roots(od),
        sigma0=float(np.sum(ev)),
        sigma1=float(np.sum(od)),
    )


def midpoint_polys(md: MidpointData, n: int) -> tuple[Polynomial, Polynomial, float]:
    """The two middle orthogonal polynomials and the closing coefficient.

    For odd ``n = 2L+1``::

        P_{L+1} = (omega0 + omega1) / 2
        P_L     = (omega0 - omega1) / (sigma1 - sigma0)
        coeff   = u_{L+1} = (sigma1 - sigma0)**2 / 4

    For even ``n = 2L``::

        P_{L+1} = (omega0 + (x + sigma1 - sigma0) * omega1) / 2
        P_L     = omega1
        coeff   = b_L = sigma0 - sigma1

    The even-``n`` sign is the one that keeps ``P_{L+1}`` monic of full
    degree; flipping it cancels the two leading terms and drops the
    degree to ``L-1`` or lower.
    """
    if n < 1:
        raise ValueError("midpoint polynomials require n >= 1")
    if n % 2:
        half = (n + 1) // 2
        if md.omega0.degree != half or md.omega1.degree != half:
            raise ValueError("midpoint data does not match an odd-n spectrum of this size")
        delta = md.sigma1 - md.sigma0
        if delta <= 0:
            raise ValueError("odd-n midpoint requires sigma1 > sigma0; input is corrupted")
        p_hi = 0.5 * (md.omega0 + md.omega1)
        diff = md.omega0 - md.omega1
        if diff.degree != half - 1 or diff.lead <= 0:
            raise NumericalError("midpoint difference polynomial lost its leading term")
        p_lo = diff.monic()
        coeff = 0.25 * delta * delta
    else:
        half = n // 2
        if md.omega0.degree != half + 1 or md.omega1.degree != half:
            raise ValueError("midpoint data does not match an even-n spectrum of this size")
        delta = md.sigma1 - md.sigma0
        p_hi = 0.5 * (md.omega0 + Polynomial([delta, 1.0]) * md.omega1)
        p_lo = md.omega1
        coeff = md.sigma0 - md.sigma1
    if p_hi.degree != p_lo.degree + 1:
        raise NumericalError("midpoint polynomials lost a degree; spectrum too degenerate")
    return p_hi, p_lo, float(coeff)


# ----------------------------------------------------------------------
# Euclidean descent
# ----------------------------------------------------------------------


def euclid_descend(p_hi: Polynomial, p_lo: Polynomial, tol: float = CONSISTENCY_TOL
                   ) -> tuple[Polynomial, float, float]:
    """One step down the three-term recurrence.

    From ``x P_n - P_{n+1} = b_n P_n + u_n P_{n-1}``, dividing
    ``x*p_lo - p_hi`` by ``p_lo`` must give a constant quotient (that is
    ``b_n``) and a remainder ``u_n P_{n-1}``.  Returns
    ``(P_{n-1}, b_n, u_n)``.

    A quotient with nonconstant terms above ``tol * max|coeff|``, a
    remainder of the wrong degree, or ``u_n <= 0`` all mean the pair did
    not come from a positive three-term recurrence at working precision,
    and raise ``NumericalError``.
    """
    if p_lo.is_zero or p_hi.is_zero:
        raise ValueError("descent requires nonzero polynomials")
    n = p_lo.degree
    if n < 1 or p_hi.degree != n + 1:
        raise ValueError("descent requires monic polynomials of consecutive degrees, n >= 1")
    if abs(p_hi.lead - 1.0) > 1e-6 or abs(p_lo.lead - 1.0) > 1e-6:
        raise ValueError("descent requires monic polynomials")
    shifted = Polynomial(np.concatenate(([0.0], p_lo.coeffs)))
    t = shifted - p_hi
    q, rem = poly_divrem(t, p_lo)
    scale = max(1.0, float(np.max(np.abs(t.coeffs), initial=0.0)))
    if q.is_zero:
        b = 0.0
    else:
        b = float(q.coeffs[0])
        if q.degree > 0 and float(np.max(np.abs(q.coeffs[1:]))) > tol * scale:
            raise NumericalError("descent quotient is not constant; "
                                 "polynomials do not satisfy a three-term recurrence")
    if rem.degree != n - 1:
        raise NumericalError("descent remainder has the wrong degree; "
                             "recurrence breakdown at working precision")
    u = rem.lead
    if not np.isfinite(u) or u <= 0:
        raise NumericalError("descent produced a nonpositive weight u; "
                             "spectrum is not realizable at working precision")
    return rem.monic(), b, float(u)


def _chain_arrays(hi: np.ndarray, lo: np.ndarray, checked: bool
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Full Euclidean descent on raw ascending coefficient arrays.

    ``hi``/``lo`` are *exactly* monic of consecutive degrees ``m+1, m``
    (their top entries are the float 1.0, which the constructions in
    this module guarantee).  Then ``x*lo - hi`` has degree <= m with no
    cancellation checks needed, and each step costs a handful of vector
    operations -- this is the hot path behind ``le`` and ``mf``.

    ``checked=False`` suspends the breakdown guards so the full
    operation sequence runs even on coefficients that have degraded to
    garbage; the caller uses that mode to measure algorithmic work, and
    must discard the returned values.
    """
    if hi.size != lo.size + 1:
        raise ValueError("descent chain requires consecutive degrees")
    m = lo.size - 1
    b = np.empty(m + 1)
    u = np.empty(m)
    for k in range(m, 0, -1):
        t = np.empty(k + 1)
        t[0] = -hi[0]
        t[1:] = lo[:-1] - hi[1:-1]
        bk = t[k]
        rem = t[:-1] - bk * lo[:-1]
        uk = rem[k - 1]
        if checked:
            scale = float(np.max(np.abs(rem), initial=0.0))
            if not np.isfinite(uk) or uk <= 0.0 or uk <= TRIM_REL * scale:
                raise NumericalError(
                    "descent produced a degenerate weight u at degree "
                    f"{k}; spectrum is not realizable at working precision")
        b[k] = bk
        u[k - 1] = uk
        hi = lo
        lo = rem / uk
        lo[k - 1] = 1.0
    b[0] = -hi[0]
    return b, u


def _descend_chain(p_hi: Polynomial, p_lo: Polynomial, checked: bool = True
                   ) -> tuple[np.ndarray, np.ndarray]:
    """Descend from ``(P_{m+1}, P_m)`` to ``P_0``: returns ``b_0..b_m, u_1..u_m``.

    Step-for-step the same arithmetic as iterating
    :func:`euclid_descend`, specialized to exactly monic inputs.
    """
    m = p_lo.degree
    if m == float("-inf") or p_hi.degree != m + 1:
        raise ValueError("descent chain requires consecutive degrees")
    return _chain_arrays(p_hi.coeffs, p_lo.coeffs.copy(), checked)


# ----------------------------------------------------------------------
# the Stieltjes procedure
# ----------------------------------------------------------------------


def _stieltjes(x: np.ndarray, w: np.ndarray, nb: int, nu: int, checked: bool = True
               ) -> tuple[np.ndarray, np.ndarray]:
    """Recurrence coefficients of the discrete measure ``sum w_s delta(x_s)``.

    Iterates the orthonormal three-term recurrence, reading off
    ``b_n = <x chi_n, chi_n>`` and ``u_{n+1} = ||(x - b_n) chi_n - a_n chi_{n-1}||^2``
    (the same inner-product ratios as the monic formulation, carried in
    normalized form so the iterates stay representable).  Produces
    ``b_0..b_{nb-1}`` and ``u_1..u_nu``; ``nu`` must be ``nb`` or ``nb - 1``.
    """
    b = np.empty(nb)
    u = np.empty(nu)
    q_prev = np.zeros_like(x)
    q = np.ones_like(x)
    a_prev = 0.0
    for k in range(max(nb, nu)):
        bk = float(np.sum(w * x * q * q))
        if k < nb:
            b[k] = bk
        if k < nu:
            r = (x - bk) * q - a_prev * q_prev
            uk = float(np.sum(w * r * r))
            if checked and (not np.isfinite(uk) or uk <= 0.0):
                raise NumericalError("orthogonalization broke down: vanishing norm at "
                                     f"degree {k + 1}")
            a = np.sqrt(uk)
            u[k] = uk
            q_prev, q, a_prev = q, r / a, a
    return b, u


# ----------------------------------------------------------------------
# affine scaling
# ----------------------------------------------------------------------


def _affine_pullback(spec: Spectrum) -> tuple[np.ndarray, float, float]:
    """Map the spectrum onto [-1, 1]; returns (mapped points, center, half-span)."""
    x = spec.values
    mu = 0.5 * (x[0] + x[-1])
    rho = 0.5 * (x[-1] - x[0])
    return (x - mu) / rho, mu, rho


def _affine_pushforward(b: np.ndarray, u: np.ndarray, mu: float, rho: float) -> MonicJacobi:
    """Undo the spectral rescaling on recurrence data: exact covariance."""
    return MonicJacobi(rho * b + mu, (rho * rho) * u)


# ----------------------------------------------------------------------
# algorithm cores (normalized coordinates)
# ----------------------------------------------------------------------


def _padded(coeffs: np.ndarray, size: int) -> np.ndarray:
    """Coefficients as a writable array of exactly ``size`` entries.

    The trim rule drops a monic polynomial's leading 1.0 once lower
    coefficients exceed ~1e13 in magnitude; the unguarded work paths
    restore the structural shape so the operation sequence can proceed.
    """
    out = np.zeros(size)
    c = coeffs[:size]
    out[:c.size] = c
    return out


def _gs_core(xh: np.ndarray, checked: bool = True) -> tuple[np.ndarray, np.ndarray]:
    table, _ = weights_persymmetric(Spectrum(xh))
    n = xh.size - 1
    return _stieltjes(xh, table.w, n + 1, n, checked)


def _le_core(xh: np.ndarray, checked: bool = True) -> tuple[np.ndarray, np.ndarray]:
    n = xh.size - 1
    p_char = poly_from_roots(xh)
    signs = np.where((n + np.arange(n + 1)) % 2 == 0, 1.0, -1.0)
    chi_top = lagrange_interpolate(zip(xh, signs))
    if checked:
        if p_char.degree != n + 1:
            raise NumericalError("characteristic polynomial lost its degree; "
                                 "coefficient range exceeds working precision")
        if chi_top.degree != n or chi_top.lead <= 0:
            raise NumericalError("interpolated top polynomial is degenerate; "
                                 "spectrum is not realizable at working precision")
        return _chain_arrays(p_char.coeffs, chi_top.monic().coeffs, checked)
    hi = _padded(p_char.coeffs, n + 2)
    hi[n + 1] = 1.0
    lo = _padded(chi_top.coeffs, n + 1)
    if lo[n] != 0.0:
        lo /= lo[n]
    lo[n] = 1.0
    return _chain_arrays(hi, lo, checked)


def _mf_core(xh: np.ndarray, checked: bool = True) -> tuple[np.ndarray, np.ndarray]:
    n = xh.size - 1
    if checked:
        md = midpoint_data(Spectrum(xh))
        p_hi, p_lo, coeff = midpoint_polys(md, n)
        hi, lo = p_hi.coeffs, p_lo.coeffs
    else:
        # same construction on raw arrays, shapes forced, no guards
        ev, od = xh[0::2], xh[1::2]
        omega0, omega1 = poly_from_roots(ev), poly_from_roots(od)
        delta = float(np.sum(od) - np.sum(ev))
        half = (n + 1) // 2 if n % 2 else n // 2
        if n % 2:
            w0 = _padded(omega0.coeffs, half + 1)
            w1 = _padded(omega1.coeffs, half + 1)
            hi = 0.5 * (w0 + w1)
            lo = (w0 - w1)[:half]
            if delta != 0.0:
                lo /= delta
            coeff = 0.25 * delta * delta
        else:
            w0 = _padded(omega0.coeffs, half + 2)
            w1 = _padded(omega1.coeffs, half + 1)
            hi = 0.5 * (w0 + np.concatenate(([0.0], w1)))
            hi[:half + 1] += (0.5 * delta) * w1
            lo = w1
            coeff = -delta
        hi[-1] = 1.0
        lo[-1] = 1.0
    b_half, u_half = _chain_arrays(hi, lo, checked)
    if n % 2:
        if checked and coeff <= 0:
            raise NumericalError("midpoint closing weight is nonpositive")
        b = np.concatenate((b_half, b_half[::-1]))
        u = np.concatenate((u_half, [coeff], u_half[::-1]))
    else:
        half_n = n // 2
        b_half[half_n] = coeff
        b = np.concatenate((b_half, b_half[:half_n][::-1]))
        u = np.concatenate((u_half, u_half[::-1]))
    return b, u


def _hl_core(xh: np.ndarray, checked: bool = True) -> tuple[np.ndarray, np.ndarray]:
    n = xh.size - 1
    ev, od = xh[0::2], xh[1::2]
    sigma0, sigma1 = float(np.sum(ev)), float(np.sum(od))
    even_table, odd_table = sublattice_weights(Spectrum(xh))
    if n % 2:
        half_n = (n - 1) // 2
        if half_n:
            b_half, u_half = _stieltjes(even_table.points.values, even_table.w,
                                        half_n, half_n, checked)
        else:
            b_half, u_half = np.empty(0), np.empty(0)
        b_mid = 0.5 * (sigma0 + sigma1) - float(np.sum(b_half))
        u_mid = 0.25 * (sigma1 - sigma0) ** 2
        if checked and u_mid <= 0:
            raise NumericalError("half-lattice closing weight is nonpositive")
        b_low = np.concatenate((b_half, [b_mid]))
        b = np.concatenate((b_low, b_low[::-1]))
        u = np.concatenate((u_half, [u_mid], u_half[::-1]))
    else:
        half_n = n // 2
        b_half, u_half = _stieltjes(odd_table.points.values, odd_table.w,
                                    half_n, half_n - 1, checked)
        b_mid = sigma0 - sigma1
        # u_L is pinned by the midpoint polynomial identity
        # (x - b_L) * omega1 - P_{L+1} = u_L * P_{L-1}: matching the
        # coefficient of x^(L-1) reduces it to sublattice power sums
        q0, q1 = float(np.sum(ev * ev)), float(np.sum(od * od))
        u_mid = 0.25 * (q0 - q1 - (sigma1 - sigma0) ** 2)
        if checked and u_mid <= 0:
            raise NumericalError("half-lattice closing weight is nonpositive; "
                                 "spectrum is not realizable at working precision")
        b = np.concatenate((b_half, [b_mid], b_half[::-1]))
        u_low = np.concatenate((u_half, [u_mid]))
        u = np.concatenate((u_low, u_low[::-1]))
    return b, u


_CORES = {"gs": _gs_core, "le": _le_core, "mf": _mf_core, "hl": _hl_core}


def _run_unchecked(algorithm: str, spectrum) -> None:
    """Execute an algorithm's full operation sequence without guards.

    Timing support for the benchmark harness: the breakdown checks that
    would normally abort a run mid-course are suspended, so wall time
    measures the work the algorithm prescribes at this size rather than
    the time to the first guard.  Results are discarded -- on spectra
    where the strict run breaks down they are garbage by construction.
    """
    spec = Spectrum.coerce(spectrum)
    if spec.n == 0:
        return
    xh, _, _ = _affine_pullback(spec)
    with np.errstate(all="ignore"):
        _CORES[algorithm](xh, checked=False)


# ----------------------------------------------------------------------
# the four reconstruction algorithms
# ----------------------------------------------------------------------


def reconstruct_gram_schmidt_full(spectrum) -> MonicJacobi:
    """Reconstruct via the Stieltjes procedure over the full weight table.

    Computes the persymmetric node weights, then orthogonalizes the
    monomial ladder against the discrete inner product
    ``<f, g> = sum_s w_s f(x_s) g(x_s)``, reading off all ``N+1``
    diagonal and ``N`` off-diagonal coefficients directly.
    """
    spec = Spectrum.coerce(spectrum)
    if spec.n == 0:
        return MonicJacobi(spec.values, ())
    xh, mu, rho = _affine_pullback(spec)
    b, u = _gs_core(xh)
    return _affine_pushforward(b, u, mu, rho)


def reconstruct_lagrange_euclid(spectrum) -> MonicJacobi:
    """Reconstruct from the top of the polynomial ladder downward.

    ``P_{N+1}`` is built from its roots (the spectrum); the orthonormal
    ``chi_N`` is the Lagrange interpolant of the alternating values
    ``(-1)^{N+s}`` at the nodes.  The full Euclidean descent then yields
    every coefficient.
    """
    spec = Spectrum.coerce(spectrum)
    if spec.n == 0:
        return MonicJacobi(spec.values, ())
    xh, mu, rho = _affine_pullback(spec)
    b, u = _le_core(xh)
    return _affine_pushforward(b, u, mu, rho)


def reconstruct_mirror_fold(spectrum) -> MonicJacobi:
    """Reconstruct the lower half from midpoint data, then mirror.

    The midpoint polynomials ``P_{L+1}, P_L`` come from the sublattice
    characteristic polynomials alone; the Euclidean descent recovers the
    lower-half coefficients, and persymmetry supplies the upper half.
    Roughly a quarter of the Lagrange-Euclid work, since every
    polynomial involved has half the degree.
    """
    spec = Spectrum.coerce(spectrum)
    if spec.n == 0:
        return MonicJacobi(spec.values, ())
    xh, mu, rho = _affine_pullback(spec)
    b, u = _mf_core(xh)
    return _affine_pushforward(b, u, mu, rho)


def reconstruct_half_lattice(spectrum) -> MonicJacobi:
    """Reconstruct from one spectral sublattice plus midpoint closure.

    Runs the Stieltjes procedure on the even (odd ``N``) or odd (even
    ``N``) sublattice weights up to degree ``L-1`` -- the range on which
    sublattice and full-lattice moments provably agree -- then closes
    the middle coefficients: for odd ``N``, ``u_{L+1}`` from the root
    sums and ``b_L`` from the trace; for even ``N``, ``b_L`` from the
    root sums and ``u_L`` by matching the midpoint polynomial
    ``P_{L+1}``.  Mirror symmetry fills in the rest.
    """
    spec = Spectrum.coerce(spectrum)
    if spec.n == 0:
        return MonicJacobi(spec.values, ())
    xh, mu, rho = _affine_pullback(spec)
    b, u = _hl_core(xh)
    return _affine_pushforward(b, u, mu, rho)


#: Registry of the reconstruction algorithms by their short ids.
ALGORITHMS = {
    "gs": reconstruct_gram_schmidt_full,
    "le": reconstruct_lagrange_euclid,
    "mf": reconstruct_mirror_fold,
    "hl": reconstruct_half_lattice,
}


# ----------------------------------------------------------------------
# moment-determinant oracle
# ----------------------------------------------------------------------


def poly_from_moments_hankel(moms, n: int) -> Polynomial:
    """Monic orthogonal ``P_n`` straight from the moment determinants.

    Expands the bordered Hankel determinant along its last row
    ``(1, x, ..., x^n)`` and divides by the leading Hankel minor.
    Exponentially ill-conditioned in ``n``; intended as an independent
    cross-check for small degrees (``n <= 6``), not for production use.
    """
    c = moms.c if isinstance(moms, MomentSequence) else np.asarray(moms, dtype=float)
    if not 1 <= n <= 6:
        raise ValueError("moment-determinant construction is supported for 1 <= n <= 6")
    if c.size < 2 * n:
        raise ValueError("need moments up to order 2n - 1")
    hankel = np.array([[c[i + j] for j in range(n)] for i in range(n)])
    delta = float(np.linalg.det(hankel))
    if abs(delta) < 1e-10:
        raise NumericalError("Hankel determinant is numerically singular")
    bordered = np.array([[c[i + j] for j in range(n + 1)] for i in range(n)])
    coeffs = np.empty(n + 1)
    for k in range(n + 1):
        minor = np.delete(bordered, k, axis=1)
        coeffs[k] = (-1.0) ** (n + k) * float(np.linalg.det(minor)) / delta
    coeffs[n] = 1.0
    return Polynomial(coeffs)
