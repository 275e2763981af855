"""In-house symmetric eigensolvers.

Two kernels shared by the quadrature construction and the numerical
cross-check pipeline:

* an implicit-shift QL iteration for symmetric tridiagonal matrices
  that also carries the first eigenvector component along (all that
  Golub-Welsch needs for quadrature weights);
* a cyclic-sweep Jacobi diagonalization for small dense symmetric
  matrices.

The matrices here are tiny (a few hundred rows at the very most), so
both kernels favour verifiability over speed.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["tridiagonal_eigen", "jacobi_eigenvalues"]

_MAX_QL_ITER = 60


def tridiagonal_eigen(diag, offdiag):
    """Eigenvalues and first eigenvector components of a symmetric
    tridiagonal matrix.

    ``diag`` has length n, ``offdiag`` length n-1.  Returns
    ``(values, first_components)`` sorted by ascending eigenvalue; the
    components belong to orthonormal eigenvectors, so for a Jacobi
    matrix of orthonormal polynomials ``mu0 * first**2`` are the
    Gauss weights.
    """
    d = np.asarray(diag, dtype=float).copy()
    n = d.size
    e = np.zeros(n)
    e[: n - 1] = np.asarray(offdiag, dtype=float)
    z = np.zeros(n)
    z[0] = 1.0
    eps = np.finfo(float).eps

    for l in range(n):
        iters = 0
        while True:
            for m in range(l, n - 1):
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
            else:
                m = n - 1
            if m == l:
                break
            iters += 1
            if iters > _MAX_QL_ITER:
                raise RuntimeError("tridiagonal QL failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
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
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = np.argsort(d, kind="stable")
    return d[order], z[order]


def jacobi_eigenvalues(matrix, tol: float = 1e-14, max_sweeps: int = 60):
    """Eigenvalues of a dense real symmetric matrix, ascending.

    Cyclic Jacobi sweeps of Givens rotations; iteration stops once the
    off-diagonal Frobenius norm falls below ``tol`` times the matrix
    norm.  Unconditionally convergent for symmetric input, which keeps
    the verification chain free of library dependencies.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > 256:
        raise ValueError(f"dense Jacobi solver is limited to 256x256, got {n}")
    asym = np.max(np.abs(a - a.T))
    scale = np.max(np.abs(a)) if n else 0.0
    if asym > 1e-12 * max(scale, 1.0):
        raise ValueError(f"matrix is not symmetric: max |A - A^T| = {asym:.3e}")
    a = 0.5 * (a + a.T)
    if n == 0:
        return np.zeros(0)

    norm = math.sqrt(np.sum(a * a))
    if norm == 0.0:
        return np.zeros(n)

    def offnorm():
        off = a - np.diag(np.diag(a))
        return math.sqrt(np.sum(off * off))

    for _ in range(max_sweeps):
        if offnorm() <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                if abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                a[p, q] = a[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration failed to converge")

    return np.sort(np.diag(a))
