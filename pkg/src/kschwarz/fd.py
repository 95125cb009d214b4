"""Finite-difference machinery for complex charts.

Two flavours are needed:

* mixed Wirtinger partials d/dz^a, d/dzbar^b of smooth non-holomorphic
  functions (metric potentials), built from central differences on the real
  and imaginary parts and Richardson-extrapolated as a composite operator;
* plain holomorphic difference quotients for holomorphic maps, where a real
  step already differentiates in z.

All stencils are symmetric, so the composite error expansions contain only
even powers of the step and Richardson levels gain two orders each.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

Op = tuple[int, bool]  # (coordinate index, conjugate flag): False -> d/dz, True -> d/dzbar


def richardson_extrapolate(values: Sequence, ratio: float = 4.0):
    """Neville table for a sequence D(h), D(h/2), ... of order-2 estimates."""
    table = list(values)
    n = len(table)
    factor = ratio
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0)
        factor *= ratio
    return table[-1]


def _unit(m: int, k: int) -> np.ndarray:
    e = np.zeros(m, dtype=complex)
    e[k] = 1.0
    return e


def _apply_ops(func: Callable, z: np.ndarray, ops: Sequence[Op], h: float):
    if not ops:
        return func(z)
    (k, conj), rest = ops[0], ops[1:]
    e = _unit(len(z), k)
    dx = (_apply_ops(func, z + h * e, rest, h) - _apply_ops(func, z - h * e, rest, h)) / (2 * h)
    dy = (_apply_ops(func, z + 1j * h * e, rest, h) - _apply_ops(func, z - 1j * h * e, rest, h)) / (2 * h)
    sign = 1.0 if conj else -1.0
    return 0.5 * (dx + sign * 1j * dy)


def wirtinger_derivative(func: Callable, z: np.ndarray, ops: Sequence[Op],
                         h: float, levels: int = 2):
    """Mixed Wirtinger partial of ``func`` at z, one op per derivative.

    ``levels`` extra Richardson levels on the composite central-difference
    operator (0 means the raw O(h^2) stencil).  Cost grows as 4^len(ops) per
    level, so keep the order at four or below.
    """
    z = np.asarray(z, dtype=complex)
    estimates = [_apply_ops(func, z, list(ops), h / (2 ** lev)) for lev in range(levels + 1)]
    return richardson_extrapolate(estimates)


def line_quarter_laplacian(func: Callable[[complex], float], h: float,
                           levels: int = 1) -> float:
    """(1/4) * Laplacian at t=0 of a real function of one complex parameter.

    Equals the complex Hessian <sqrt(-1) d dbar F, (1/sqrt(-1)) v ^ vbar>
    when func(t) = F(x0 + t v).  Four-point stencil, optional Richardson.
    """
    f0 = func(0.0)

    def stencil(step: float) -> float:
        total = func(step) + func(-step) + func(1j * step) + func(-1j * step)
        return (total - 4.0 * f0) / (4.0 * step * step)

    estimates = [stencil(h / (2 ** lev)) for lev in range(levels + 1)]
    return float(richardson_extrapolate(estimates))


def holomorphic_jacobian(func: Callable, z: np.ndarray, h: float = 1e-5,
                         levels: int = 1) -> np.ndarray:
    """Jacobian of a holomorphic map by real-step central differences.

    For holomorphic components df/dz equals the derivative along the real
    axis, so no imaginary-direction evaluations are required.
    """
    z = np.asarray(z, dtype=complex)
    m = len(z)
    cols = []
    for k in range(m):
        e = _unit(m, k)

        def diff(step: float) -> np.ndarray:
            return (np.asarray(func(z + step * e)) - np.asarray(func(z - step * e))) / (2 * step)

        cols.append(richardson_extrapolate([diff(h / (2 ** lev)) for lev in range(levels + 1)]))
    return np.stack(cols, axis=-1)


def holomorphic_hessian(func: Callable, z: np.ndarray, h: float = 1e-4,
                        levels: int = 1) -> np.ndarray:
    """Second holomorphic derivatives H[i, a, b] = d^2 f^i / dz^a dz^b."""
    z = np.asarray(z, dtype=complex)
    m = len(z)
    f0 = np.asarray(func(z))
    n = f0.shape[0]
    hess = np.zeros((n, m, m), dtype=complex)
    for a in range(m):
        ea = _unit(m, a)

        def diag(step: float, ea=ea) -> np.ndarray:
            return (np.asarray(func(z + step * ea)) - 2 * f0 + np.asarray(func(z - step * ea))) / (step * step)

        hess[:, a, a] = richardson_extrapolate([diag(h / (2 ** lev)) for lev in range(levels + 1)])
        for b in range(a + 1, m):
            eb = _unit(m, b)

            def mixed(step: float, ea=ea, eb=eb) -> np.ndarray:
                pp = np.asarray(func(z + step * (ea + eb)))
                pm = np.asarray(func(z + step * (ea - eb)))
                mp = np.asarray(func(z - step * (ea - eb)))
                mm = np.asarray(func(z - step * (ea + eb)))
                return (pp - pm - mp + mm) / (4 * step * step)

            val = richardson_extrapolate([mixed(h / (2 ** lev)) for lev in range(levels + 1)])
            hess[:, a, b] = val
            hess[:, b, a] = val
    return hess


def cauchy_riemann_residual(func: Callable, z: np.ndarray, h: float = 1e-5) -> float:
    """Max |df/dzbar| over components and coordinates; ~0 for holomorphic maps."""
    z = np.asarray(z, dtype=complex)
    worst = 0.0
    for k in range(len(z)):
        e = _unit(len(z), k)
        dx = (np.asarray(func(z + h * e)) - np.asarray(func(z - h * e))) / (2 * h)
        dy = (np.asarray(func(z + 1j * h * e)) - np.asarray(func(z - 1j * h * e))) / (2 * h)
        worst = max(worst, float(np.max(np.abs(0.5 * (dx + 1j * dy)))))
    return worst
