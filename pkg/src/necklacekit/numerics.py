"""Floating-point verification layer for the complex moment map.

Solves sum_a [V_a, V_a*] = lambda on representation spaces of the double
quiver by damped Gauss-Newton least squares, then measures the Jacobian rank
at solutions so fiber dimensions can be compared against the exact formulas.
The target space is always the trace-zero block tuple; residuals and
Jacobians are projected accordingly.

This module never feeds back into the exact classification: a failure here
flags a numerical issue, not a verdict change.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .quiver import DoubleQuiver, Quiver, as_dim_vector, double, weight_pairing

RepPoint = dict[str, np.ndarray]


def _double_of(q: Quiver) -> DoubleQuiver:
    return q if isinstance(q, DoubleQuiver) else double(q)


def rep_dimension(q: Quiver, alpha: Sequence[int]) -> int:
    """Complex dimension of the representation space of the double quiver."""
    dq = _double_of(q)
    alpha = as_dim_vector(dq, alpha)
    return sum(alpha[a.source - 1] * alpha[a.target - 1] for a in dq.arrows)


def random_rep(q: Quiver, alpha: Sequence[int], seed: int) -> RepPoint:
    """Deterministic random representation: complex Gaussian entries, 1/sqrt(n) scale."""
    dq = _double_of(q)
    alpha = as_dim_vector(dq, alpha)
    rng = np.random.default_rng(seed)
    scale = 1.0 / math.sqrt(max(1, sum(alpha)))
    point: RepPoint = {}
    for arr in dq.arrows:
        shape = (alpha[arr.target - 1], alpha[arr.source - 1])
        point[arr.label] = scale * (
            rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        )
    return point


def _check_shapes(dq: DoubleQuiver, alpha: tuple[int, ...], point: Mapping[str, np.ndarray]) -> None:
    for arr in dq.arrows:
        expected = (alpha[arr.target - 1], alpha[arr.source - 1])
        matrix = point.get(arr.label)
        if matrix is None:
            raise ValueError(f"missing matrix for arrow {arr.label!r}")
        if matrix.shape != expected:
            raise ValueError(
                f"matrix for {arr.label!r} has shape {matrix.shape}, expected {expected}"
            )


def moment_eval(q: Quiver, alpha: Sequence[int], point: Mapping[str, np.ndarray]) -> list[np.ndarray]:
    """Vertex blocks of sum_a [V_a, V_a*]; the total trace vanishes up to rounding."""
    dq = _double_of(q)
    alpha = as_dim_vector(dq, alpha)
    _check_shapes(dq, alpha, point)
    blocks = [np.zeros((n, n), dtype=complex) for n in alpha]
    for arr in dq.base_arrows:
        va = point[arr.label]
        vs = point[dq.star(arr.label)]
        blocks[arr.target - 1] += va @ vs
        blocks[arr.source - 1] -= vs @ va
    return blocks


def _project_trace(blocks: list[np.ndarray], alpha: tuple[int, ...]) -> list[np.ndarray]:
    n_total = sum(alpha)
    if n_total == 0:
        return blocks
    mean = sum(np.trace(b) for b in blocks) / n_total
    return [b - mean * np.eye(len(b)) for b in blocks]


def _residual_vector(
    dq: DoubleQuiver,
    alpha: tuple[int, ...],
    lam_values: list[complex],
    point: Mapping[str, np.ndarray],
) -> np.ndarray:
    blocks = moment_eval(dq, alpha, point)
    blocks = [b - lam_values[i] * np.eye(alpha[i]) for i, b in enumerate(blocks)]
    blocks = _project_trace(blocks, alpha)
    if not blocks:
        return np.zeros(0, dtype=complex)
    return np.concatenate([b.reshape(-1) for b in blocks])


def _jacobian(
    dq: DoubleQuiver, alpha: tuple[int, ...], point: Mapping[str, np.ndarray]
) -> np.ndarray:
    """Complex Jacobian of the projected residual; the moment map is holomorphic."""
    rows = sum(n * n for n in alpha)
    order = [arr.label for arr in dq.arrows]
    columns = []
    for label in order:
        arr = dq.arrow(label)
        nt, ns = alpha[arr.target - 1], alpha[arr.source - 1]
        partner = dq.star(label)
        base_label = partner if dq.is_starred(label) else label
        base = dq.arrow(base_label)
        for r in range(nt):
            for c in range(ns):
                blocks = [np.zeros((n, n), dtype=complex) for n in alpha]
                h = np.zeros((nt, ns), dtype=complex)
                h[r, c] = 1.0
                if dq.is_starred(label):
                    va = point[base_label]
                    blocks[base.target - 1] += va @ h
                    blocks[base.source - 1] -= h @ va
                else:
                    vs = point[partner]
                    blocks[base.target - 1] += h @ vs
                    blocks[base.source - 1] -= vs @ h
                blocks = _project_trace(blocks, alpha)
                if blocks:
                    columns.append(np.concatenate([b.reshape(-1) for b in blocks]))
                else:
                    columns.append(np.zeros(0, dtype=complex))
    if not columns:
        return np.zeros((rows, 0), dtype=complex)
    return np.stack(columns, axis=1)


def _unpack(dq: DoubleQuiver, alpha: tuple[int, ...], flat: np.ndarray) -> RepPoint:
    point: RepPoint = {}
    offset = 0
    for arr in dq.arrows:
        nt, ns = alpha[arr.target - 1], alpha[arr.source - 1]
        point[arr.label] = flat[offset : offset + nt * ns].reshape((nt, ns))
        offset += nt * ns
    return point


def _pack(dq: DoubleQuiver, point: Mapping[str, np.ndarray]) -> np.ndarray:
    pieces = [np.asarray(point[arr.label], dtype=complex).reshape(-1) for arr in dq.arrows]
    if not pieces:
        return np.zeros(0, dtype=complex)
    return np.concatenate(pieces)


@dataclass
class MomentSolveResult:
    point: RepPoint
    residual_norm: float
    converged: bool
    iterations: int
    seed: int


@dataclass
class RankReport:
    jacobian_rank: int
    fiber_dim_estimate: int
    singular_values: list[float]


def solve(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    seed: int,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> MomentSolveResult:
    """Damped Gauss-Newton solve of the moment equation from a seeded start.

    Weights must pair to zero with alpha (the trace obstruction); otherwise
    the fiber is empty and the input is rejected.  Non-convergence is
    reported in the result, not raised.
    """
    dq = _double_of(q)
    alpha = as_dim_vector(dq, alpha)
    pairing = weight_pairing([Fraction(x) for x in lam], alpha)
    if pairing != 0:
        raise ValueError(f"weight pairs to {pairing} with {alpha}; the fiber is empty")
    lam_values = [float(Fraction(x)) + 0j for x in lam]
    point = random_rep(dq, alpha, seed)
    flat = _pack(dq, point)
    damping = 1e-3
    residual = _residual_vector(dq, alpha, lam_values, _unpack(dq, alpha, flat))
    norm = float(np.linalg.norm(residual))
    iterations = 0
    while iterations < max_iter and norm > tol:
        iterations += 1
        jac = _jacobian(dq, alpha, _unpack(dq, alpha, flat))
        gram = jac.conj().T @ jac
        rhs = jac.conj().T @ residual
        accepted = False
        for _ in range(25):
            step = np.linalg.solve(gram + damping * np.eye(gram.shape[0]), -rhs)
            trial = flat + step
            trial_residual = _residual_vector(dq, alpha, lam_values, _unpack(dq, alpha, trial))
            trial_norm = float(np.linalg.norm(trial_residual))
            if trial_norm < norm:
                flat, residual, norm = trial, trial_residual, trial_norm
                damping = max(damping / 3.0, 1e-14)
                accepted = True
                break
            damping = min(damping * 10.0, 1e10)
        if not accepted:
            break
    converged = norm <= tol
    return MomentSolveResult(_unpack(dq, alpha, flat), norm, converged, iterations, seed)


def rank_report(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    point: Mapping[str, np.ndarray],
    svd_tol: float = 1e-7,
    residual_tol: float = 1e-8,
) -> RankReport:
    """Numerical rank of the moment differential at a solved point.

    The fiber dimension estimate is the complex dimension of the
    representation space minus the rank; the full singular value list is
    returned so borderline thresholding stays auditable.
    """
    dq = _double_of(q)
    alpha = as_dim_vector(dq, alpha)
    lam_values = [float(Fraction(x)) + 0j for x in lam]
    residual = _residual_vector(dq, alpha, lam_values, point)
    norm = float(np.linalg.norm(residual))
    if norm > residual_tol:
        raise ValueError(f"point is not solved: residual {norm:.3e} > {residual_tol:.1e}")
    jac = _jacobian(dq, alpha, point)
    if jac.size == 0:
        return RankReport(0, rep_dimension(dq, alpha), [])
    singular = np.linalg.svd(jac, compute_uv=False)
    values = [float(s) for s in singular]
    if not values or values[0] == 0.0:
        rank = 0
    else:
        rank = sum(1 for s in values if s > svd_tol * values[0])
    return RankReport(rank, rep_dimension(dq, alpha) - rank, values)
