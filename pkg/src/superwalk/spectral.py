"""Heat kernels exp(-t L) for the even and odd Laplacians.

The kernel is the degree-N Taylor polynomial of exp(-t L).  N is the smallest
order whose a priori remainder bound

    e^{tB} (tB)^{N+1} / (N+1)!,    B = max_i sum_j |L_ij|

is at most the requested tolerance.  The polynomial itself is summed exactly:
``t`` is a binary float, hence an exact fraction p/q, and every power of the
integer matrix L is exact, so the whole partial sum is one integer matrix over
one integer denominator.  Each entry is rounded to float once, which removes
the cancellation that plain floating-point Taylor sums suffer for large tB and
makes the output bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NotSquare, ToleranceUnreachable
from .exact import IntMatrix, identity, mat_mul, max_abs_row_sum
from .graph import Graph, even_laplacian, odd_laplacian

DEFAULT_MAX_ORDER = 200


@dataclass(frozen=True)
class HeatKernel:
    matrix: np.ndarray
    t: float
    truncation_order: int
    remainder_bound: float

    def metadata(self) -> dict:
        return {
            "t": self.t,
            "truncation_order": self.truncation_order,
            "remainder_bound": self.remainder_bound,
        }


def _log_remainder(x: float, order: int) -> float:
    return x + (order + 1) * math.log(x) - math.lgamma(order + 2)


def truncation_order(norm_bound: float, t: float, tol: float, max_order: int = DEFAULT_MAX_ORDER) -> tuple[int, float]:
    """Smallest order N and its remainder bound with bound <= tol."""
    x = t * norm_bound
    if x == 0:
        return 0, 0.0
    log_tol = math.log(tol)
    for order in range(max_order + 1):
        log_bound = _log_remainder(x, order)
        if log_bound <= log_tol:
            return order, math.exp(log_bound)
    raise ToleranceUnreachable(
        f"remainder bound for t*B={x:g} needs order > {max_order} to reach tolerance {tol:g}"
    )


def matrix_exponential(
    m: IntMatrix, t: float, tol: float, max_order: int = DEFAULT_MAX_ORDER
) -> HeatKernel:
    """Truncated Taylor approximation of exp(-t m) for a symmetric integer matrix."""
    if not m.is_square:
        raise NotSquare(f"heat kernel of a non-square {m.rows}x{m.cols} matrix")
    if not m.is_symmetric():
        raise ValueError("heat kernel requires a symmetric matrix")
    if not (t >= 0 and math.isfinite(t)):
        raise ValueError(f"time must be finite and nonnegative, got {t!r}")
    if not (tol > 0):
        raise ValueError(f"tolerance must be positive, got {tol!r}")

    order, bound = truncation_order(max_abs_row_sum(m), t, tol, max_order)
    n = m.rows
    if order == 0:
        return HeatKernel(np.eye(n), float(t), 0, bound)

    # sum_{k<=N} (-p/q)^k m^k / k!  ==  numer / (q^N N!)  with
    # numer = sum_k (-p)^k q^(N-k) (N!/k!) m^k
    frac = Fraction(t)
    p, q = frac.numerator, frac.denominator
    coeff = [0] * (order + 1)
    falling = 1  # N! / k!, built from k = N downwards
    for k in range(order, -1, -1):
        coeff[k] = (-p) ** k * q ** (order - k) * falling
        falling *= k if k else 1
    denom = q**order * math.factorial(order)

    numer = [[coeff[0] if i == j else 0 for j in range(n)] for i in range(n)]
    power = identity(n)
    for k in range(1, order + 1):
        power = mat_mul(power, m)
        c = coeff[k]
        for i, row in enumerate(power.entries):
            acc = numer[i]
            for j, x in enumerate(row):
                if x:
                    acc[j] += c * x
    out = np.array([[x / denom for x in row] for row in numer], dtype=float).reshape(n, n)
    out = 0.5 * (out + out.T)
    return HeatKernel(out, float(t), order, bound)


def heat_kernels(
    g: Graph, t: float, tol: float, max_order: int = DEFAULT_MAX_ORDER
) -> tuple[HeatKernel, HeatKernel]:
    """Vertex-block and edge-block kernels of the super-Laplacian."""
    return (
        matrix_exponential(even_laplacian(g), t, tol, max_order),
        matrix_exponential(odd_laplacian(g), t, tol, max_order),
    )


def supertrace(g: Graph, t: float, tol: float = 1e-12, max_order: int = DEFAULT_MAX_ORDER) -> float:
    """trace exp(-t L+) - trace exp(-t L-)."""
    even, odd = heat_kernels(g, t, tol, max_order)
    return float(np.trace(even.matrix)) - float(np.trace(odd.matrix))


def evolve_state(
    g: Graph, psi: Sequence[float], t: float, tol: float = 1e-12, max_order: int = DEFAULT_MAX_ORDER
) -> np.ndarray:
    """Apply exp(-t L) blockwise to a state on vertices (first) then edges."""
    psi = np.asarray(psi, dtype=float)
    nv, ne = g.n_vertices, g.n_edges
    if psi.shape != (nv + ne,):
        raise DimensionMismatch(f"state must have length |V|+|E| = {nv + ne}, got shape {psi.shape}")
    even, odd = heat_kernels(g, t, tol, max_order)
    return np.concatenate([even.matrix @ psi[:nv], odd.matrix @ psi[nv:]])
