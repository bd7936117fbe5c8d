"""Entanglement quantities: interference term, normalization, residual tangle.

The interference term of a two-product-term state (1/sqrt2)(a t1 + b t2) is
Re(conj(a) b k) with k the product of cross-term local overlaps; the
normalization is (|a|^2+|b|^2)/2.  For unit-norm states N + I = 1.  The
residual tangle of a GHZ-class state is bounded, at fixed interference I,
by (1-a^2)^3 / (1+a^3)^2 with a the real cube root of I/(1-I); a direct
numerical search over the five-angle family serves as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import (
    DomainError,
    GhzClassForm,
    PureState,
    ShapeMismatchError,
    TwoTermDecomposition,
    ghz_form_to_state,
)


class InfeasibleConstraintError(DomainError):
    """No sampled angle tuple satisfied the interference constraint."""


def interference_term(d: TwoTermDecomposition) -> float:
    return float((np.conj(d.coeff_a) * d.coeff_b * d.overlap_k).real)


def normalization(d: TwoTermDecomposition) -> float:
    return 0.5 * (abs(d.coeff_a) ** 2 + abs(d.coeff_b) ** 2)


# 2x2x2 hyperdeterminant, Cayley form: d1 - 2 d2 + 4 d3 over amplitude quadruples.
_HDET_COEFF = np.array([1, 1, 1, 1, -2, -2, -2, -2, -2, -2, 4, 4], dtype=np.float64)
_HDET_INDEX = np.array([
    [0, 1, 2, 4, 0, 0, 0, 3, 3, 5, 0, 7],
    [0, 1, 2, 4, 7, 7, 7, 4, 4, 2, 6, 1],
    [7, 6, 5, 3, 3, 5, 6, 5, 6, 6, 5, 2],
    [7, 6, 5, 3, 4, 2, 1, 2, 1, 1, 3, 4],
])


def hyperdeterminant(amplitudes) -> complex:
    a = np.asarray(amplitudes, dtype=np.complex128).ravel()
    if a.size != 8:
        raise ShapeMismatchError("hyperdeterminant needs 8 amplitudes")
    return complex((a[_HDET_INDEX[0]] * a[_HDET_INDEX[1]]
                    * a[_HDET_INDEX[2]] * a[_HDET_INDEX[3]]) @ _HDET_COEFF)


def three_tangle(state: PureState) -> float:
    """Residual tangle 4|Hdet| of a 3-qubit pure state; in [0, 1]."""
    if state.dims != (2, 2, 2):
        raise ShapeMismatchError("three_tangle is defined for 3-qubit states")
    return 4.0 * abs(hyperdeterminant(state.amplitudes))


def interference_ghz_form(form: GhzClassForm) -> float:
    """Closed form t/(1+t) with t = 2 c_d s_d c_a c_b c_g cos(phi)."""
    t = form.cross_weight
    return t / (1.0 + t)


def three_tangle_ghz_form(form: GhzClassForm) -> float:
    """Closed form 4 s_a^2 s_b^2 s_g^2 s_d^2 c_d^2 / (1+t)^2."""
    sa, sb, sg = math.sin(form.alpha), math.sin(form.beta), math.sin(form.gamma)
    sd, cd = math.sin(form.delta), math.cos(form.delta)
    return 4.0 * (sa * sb * sg * sd * cd) ** 2 / (1.0 + form.cross_weight) ** 2


@dataclass(frozen=True)
class TangleBudget:
    """Largest residual tangle compatible with a given interference value."""

    interference: float
    max_tangle: float
    a_param: float


def max_tangle_given_interference(i_value: float) -> TangleBudget:
    """Maximum of the tangle over GHZ-class states with interference ``i_value``.

    Defined for i_value < 1/2 (no GHZ-class state reaches 1/2).  Uses the
    sign-preserving real cube root a = cbrt(I/(1-I)), which covers both the
    positive and negative interference branches with one expression.
    """
    if i_value >= 0.5:
        raise DomainError(f"interference {i_value} >= 1/2 is not attainable")
    a = float(np.cbrt(i_value / (1.0 - i_value)))
    mt = (1.0 - a * a) ** 3 / (1.0 + a ** 3) ** 2
    return TangleBudget(i_value, float(np.clip(mt, 0.0, 1.0)), a)


def _tangle_at_angles(delta, alpha, beta, gamma, i_value):
    """Vectorized tangle at fixed interference, with infeasible points masked.

    cos(phi) is solved from the interference constraint; samples with
    |cos(phi)| > 1 are discarded (returned as -inf).
    """
    t = i_value / (1.0 - i_value)
    sdcd = np.sin(delta) * np.cos(delta)
    prodc = np.cos(alpha) * np.cos(beta) * np.cos(gamma)
    denom = 2.0 * sdcd * prodc
    with np.errstate(divide="ignore", invalid="ignore"):
        cphi = np.where(np.abs(denom) > 1e-300, t / denom, np.inf)
    feasible = np.abs(cphi) <= 1.0
    if t == 0.0:
        feasible = np.ones_like(cphi, dtype=bool)
    s2 = (np.sin(alpha) * np.sin(beta) * np.sin(gamma) * sdcd) ** 2
    tau = 4.0 * s2 * (1.0 - i_value) ** 2
    return np.where(feasible, tau, -np.inf)


def brute_force_max_tangle(i_value: float, budget: int = 1_000_000,
                           seed: int = 0, chunks: int = 16) -> float:
    """Direct search for the maximal tangle at fixed interference.

    Stage one evaluates a stratified grid over the four angles; stage two
    spends the rest of the budget on seeded Gaussian refinement around the
    incumbent, shrinking the proposal width each chunk.  The chunk schedule
    is fixed, so results are reproducible for a given seed.
    """
    if i_value >= 0.5:
        raise DomainError(f"interference {i_value} >= 1/2 is not attainable")
    if budget < 10_000:
        raise DomainError("budget below 1e4 samples is not meaningful")
    lo = 1e-6
    bounds = np.array([[lo, math.pi / 4], [lo, math.pi / 2],
                       [lo, math.pi / 2], [lo, math.pi / 2]])
    side = max(int((budget // 2) ** 0.25), 4)
    axes = [np.linspace(b[0], b[1], side) for b in bounds]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 4)
    vals = _tangle_at_angles(grid[:, 0], grid[:, 1], grid[:, 2], grid[:, 3], i_value)
    order = np.argsort(vals)[::-1]
    if not np.isfinite(vals[order[0]]):
        raise InfeasibleConstraintError(
            f"no grid point satisfies the interference constraint I={i_value}")
    best_val = float(vals[order[0]])
    best_pt = grid[order[0]]

    remaining = budget - grid.shape[0]
    per_chunk = max(remaining // chunks, 1)
    rng = np.random.default_rng(seed)
    width = (bounds[:, 1] - bounds[:, 0]) / side
    for c in range(chunks):
        scale = width * (0.5 ** c + 0.02)
        pts = rng.normal(loc=best_pt, scale=scale, size=(per_chunk, 4))
        pts = np.clip(pts, bounds[:, 0], bounds[:, 1])
        vals = _tangle_at_angles(pts[:, 0], pts[:, 1], pts[:, 2], pts[:, 3], i_value)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best_pt = pts[i]
    return best_val


def verify_tangle_identity(form: GhzClassForm, tol: float = 1e-9) -> float:
    """|closed-form tangle - tensor-level tangle| for one form."""
    return abs(three_tangle_ghz_form(form) - three_tangle(ghz_form_to_state(form)))
