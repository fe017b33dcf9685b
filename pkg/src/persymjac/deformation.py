"""Isospectral one-parameter deformations of persymmetric Jacobi matrices.

A persymmetric Jacobi matrix commutes with the exchange matrix, which
splits its eigenvectors into even and odd mirror classes.  Rotating the
two classes against each other by an angle ``theta`` produces a family
of matrices with the *same* spectrum that are still tridiagonal -- but
no longer persymmetric -- differing from the original only in a bounded
block around the center.

Two constructions of the deformed matrix are provided and must agree:

* :func:`deform_conjugate` conjugates the dense matrix by an explicit
  involution built from ``theta``;
* :func:`deform_closed_form` edits the central entries directly.

For an even number of points the deformed measure and orthonormal
polynomial family also have closed forms (:func:`deformed_weights`,
:func:`deformed_polynomials`).  The polynomial family degenerates on
the singular set ``cos(2 theta) = 0``, where the top polynomial loses
its degree; we refuse angles within ``SINGULAR_TOL`` of it.
"""

from __future__ import annotations

import numpy as np

from .errors import NumericalError
from .jacobi import OrthoPolySystem, SymmetricJacobi, WeightTable, is_persymmetric
from .polynomials import Polynomial

#: Angles with |cos 2*theta| below this are treated as singular for the
#: deformed polynomial family.
SINGULAR_TOL = 1e-10

#: Default tolerance for the persymmetry precondition and for the
#: tridiagonality of the conjugated matrix.
DEFORM_TOL = 1e-10


def build_involution(n_points: int, theta: float) -> np.ndarray:
    """Symmetric involution mixing the mirror-even and mirror-odd classes.

    Diagonal entries ``sin(theta)`` on the first half and
    ``-sin(theta)`` on the second, ``cos(theta)`` on the anti-diagonal,
    and (for an odd number of points) an untouched ``1`` at the center.
    Satisfies ``V = V.T`` and ``V @ V = I`` for every ``theta``.
    """
    if n_points < 1:
        raise ValueError("involution requires at least one point")
    s, c = np.sin(theta), np.cos(theta)
    v = np.zeros((n_points, n_points))
    half = n_points // 2
    for i in range(half):
        v[i, i] = s
        v[n_points - 1 - i, n_points - 1 - i] = -s
        v[i, n_points - 1 - i] = c
        v[n_points - 1 - i, i] = c
    if n_points % 2:
        v[half, half] = 1.0
    return v


def deform_conjugate(jac: SymmetricJacobi, theta: float,
                     tol: float = DEFORM_TOL) -> SymmetricJacobi:
    """Deform by explicit conjugation: ``V J V`` with the involution ``V``.

    The input must be persymmetric (within ``tol``); the conjugated
    matrix is then exactly tridiagonal in exact arithmetic, and we
    verify that the off-tridiagonal residue is at rounding level before
    discarding it.
    """
    if not is_persymmetric(jac, tol=tol):
        raise ValueError("deformation requires a persymmetric matrix")
    dense = jac.dense()
    v = build_involution(jac.n + 1, theta)
    rotated = v @ dense @ v
    n1 = jac.n + 1
    scale = max(1.0, float(np.max(np.abs(dense))))
    stripped = rotated.copy()
    idx = np.arange(n1)
    stripped[idx, idx] = 0.0
    stripped[idx[:-1], idx[:-1] + 1] = 0.0
    stripped[idx[:-1] + 1, idx[:-1]] = 0.0
    if float(np.max(np.abs(stripped), initial=0.0)) > 1e-10 * scale:
        raise NumericalError("conjugated matrix is not tridiagonal; "
                             "input violates persymmetry beyond rounding")
    off = 0.5 * (rotated[idx[:-1], idx[:-1] + 1] + rotated[idx[:-1] + 1, idx[:-1]])
    return SymmetricJacobi(np.diag(rotated).copy(), off)


def deform_closed_form(jac: SymmetricJacobi, theta: float,
                       tol: float = DEFORM_TOL) -> SymmetricJacobi:
    """Deform by editing the central entries in place.

    Only a bounded block around the center changes.  With ``N + 1``
    points and ``L`` the half size:

    * odd ``N``: the central off-diagonal entry is scaled by
      ``cos(2 theta)`` and the two central diagonal entries are shifted
      by ``+/- a * sin(2 theta)``;
    * even ``N``: the two off-diagonal entries flanking the center
      become ``a * (cos theta + sin theta)`` and
      ``a * (cos theta - sin theta)``; the diagonal is untouched.
    """
    if not is_persymmetric(jac, tol=tol):
        raise ValueError("deformation requires a persymmetric matrix")
    b = jac.b.copy()
    a = jac.a.copy()
    n = jac.n
    if n == 0:
        return SymmetricJacobi(b, a)
    if n % 2:
        mid = (n - 1) // 2
        a_c = a[mid]
        shift = a_c * np.sin(2.0 * theta)
        b[mid] += shift
        b[mid + 1] -= shift
        a[mid] = a_c * np.cos(2.0 * theta)
    else:
        mid = n // 2
        a_c = a[mid - 1]
        # persymmetry guarantees a[mid] == a[mid - 1] up to tol
        a[mid - 1] = a_c * (np.cos(theta) + np.sin(theta))
        a[mid] = a_c * (np.cos(theta) - np.sin(theta))
    return SymmetricJacobi(b, a)


def deformed_weights(table: WeightTable, theta: float) -> WeightTable:
    """Weight table of the deformed matrix (odd ``N`` only).

    The deformed weights tilt the even and odd sublattices against each
    other: ``w_even * (1 - sin 2*theta)`` and ``w_odd * (1 + sin 2*theta)``.
    Total mass is conserved because the two sublattices carry equal
    mass.  For an even ``N`` the deformed weights have no closed form of
    this kind, so we refuse.
    """
    n_points = len(table.w)
    if n_points % 2:
        raise ValueError("closed-form deformed weights exist only for odd N "
                         "(an even number of spectral points)")
    tilt = np.sin(2.0 * theta)
    w = table.w.copy()
    w[0::2] *= 1.0 - tilt
    w[1::2] *= 1.0 + tilt
    return WeightTable(table.points, w)


def deformed_polynomials(system: OrthoPolySystem, theta: float) -> tuple[Polynomial, ...]:
    """Orthonormal family of the deformed measure (odd ``N`` only).

    The lower half of the family is untouched; each upper-half member
    mixes with its mirror partner:

        q_n = (chi_n - sin(2 theta) * chi_{N-n}) / cos(2 theta),   n > (N-1)/2.

    On the singular set ``cos(2 theta) = 0`` the construction breaks
    down (the deformed measure loses support on one sublattice and the
    family truncates), which raises ``NumericalError``.
    """
    n = system.n
    if n < 1 or n % 2 == 0:
        raise ValueError("closed-form deformed polynomials exist only for odd N")
    c2 = float(np.cos(2.0 * theta))
    if abs(c2) < SINGULAR_TOL:
        raise NumericalError("deformation angle is singular: cos(2 theta) vanishes "
                             "and the deformed family truncates")
    s2 = float(np.sin(2.0 * theta))
    chi = [system.orthonormal(k) for k in range(n + 1)]
    out = list(chi)
    for k in range((n - 1) // 2 + 1, n + 1):
        out[k] = (1.0 / c2) * chi[k] - (s2 / c2) * chi[n - k]
    return tuple(out)
