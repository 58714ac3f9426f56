"""Limits of subspaces in the Grassmannian along one-parameter subgroups of A.

For X in a the operator ad(X) is diagonal in the Chevalley basis, with the
root values as eigenvalues.  The limit of Ad(exp(tX))E for t -> infinity is
computed exactly by the filtered intersection formula

    E_X = sum over eigenvalues (ascending) of p_i( E cap V_{<= lambda_i} ),

and a floating-point flow with re-orthonormalization serves as an independent
numerical check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .lie import LieAlgebraData
from .linalg import Subspace, Vec, dot, rank, vec


@dataclass(frozen=True)
class GradedDirection:
    """Eigenvalue data of ad(X) for X in a: sorted eigenvalues and the basis
    indices of the corresponding eigenspaces.  The eigenspace projections are
    coordinate projections; ad(X) = sum of eigenvalue * projection."""

    x: Vec
    eigenvalues: tuple[Fraction, ...]
    eigenspace_indices: tuple[tuple[int, ...], ...]

    @property
    def levels(self) -> int:
        return len(self.eigenvalues)

    def projection(self, i: int):
        n = sum(len(idx) for idx in self.eigenspace_indices)
        level = set(self.eigenspace_indices[i])
        return tuple(
            tuple(
                Fraction(1) if r == c and r in level else Fraction(0)
                for c in range(n)
            )
            for r in range(n)
        )


def graded_direction(lie: LieAlgebraData, x: Sequence) -> GradedDirection:
    x = vec(x)
    if len(x) != lie.dim_a:
        raise ValueError("direction must be an a-vector")
    buckets: dict[Fraction, list[int]] = {}
    for k, w in enumerate(lie.weights):
        buckets.setdefault(dot(w, x), []).append(k)
    eigenvalues = tuple(sorted(buckets))
    indices = tuple(tuple(buckets[lam]) for lam in eigenvalues)
    return GradedDirection(x, eigenvalues, indices)


def limit_subspace(lie: LieAlgebraData, e: Subspace, x: Sequence) -> Subspace:
    """lim_{t->oo} Ad(exp(tX)) E in the Grassmannian, exactly."""
    gd = graded_direction(lie, x)
    rows: list[Vec] = []
    allowed: list[int] = []
    for i in range(gd.levels):
        allowed += list(gd.eigenspace_indices[i])
        w = e.restrict_to_coordinates(allowed)
        level = set(gd.eigenspace_indices[i])
        for row in w.basis_matrix:
            proj = tuple(c if k in level else Fraction(0) for k, c in enumerate(row))
            rows.append(proj)
    out = Subspace.from_spanning(lie.dim, rows)
    assert out.dim == e.dim, "limit changed the dimension"
    return out


def is_order_regular(lie: LieAlgebraData, x: Sequence) -> bool:
    """alpha(X) != beta(X) for all distinct roots alpha, beta."""
    x = vec(x)
    values = [dot(lie.root_functional(r), x) for r in lie.roots()]
    return len(set(values)) == len(values)


def order_regular_hyperplanes(lie: LieAlgebraData) -> list[Vec]:
    """Functionals alpha - beta over distinct root pairs, deduplicated."""
    from .linalg import primitive_signed

    roots = lie.roots()
    out = {}
    for i, a in enumerate(roots):
        fa = lie.root_functional(a)
        for b in roots[i + 1 :]:
            fb = lie.root_functional(b)
            diff = tuple(p - q for p, q in zip(fa, fb))
            if any(c != 0 for c in diff):
                out[primitive_signed(diff)] = None
    return list(out)


@dataclass(frozen=True)
class FlowReport:
    distance: float
    eigenvalue_gap: float
    converged: bool
    reason: str
    frame: tuple[tuple[float, ...], ...]


def filtration_degenerate(lie: LieAlgebraData, e: Subspace, x: Sequence) -> bool:
    """True when E meets the ad(X) eigenvalue filtration non-generically.

    At such E the flowed frame needs an exact cancellation between rows to
    keep the limit, and any rounding of that cancellation gets amplified
    toward the generic limit instead.  A single row is never affected: the
    flow only rescales its coordinates, so the zero pattern survives exactly.
    The test only inspects ranks of E against the filtration coordinates.
    """
    if e.dim <= 1:
        return False
    gd = graded_direction(lie, x)
    allowed: list[int] = []
    for i in range(gd.levels - 1):
        allowed += list(gd.eigenspace_indices[i])
        complement = [k for k in range(lie.dim) if k not in set(allowed)]
        outside = rank([tuple(row[k] for k in complement) for row in e.basis_matrix])
        meet = e.dim - outside
        generic = max(0, e.dim - len(complement))
        if meet > generic:
            return True
    return False


def float_flow_oracle(
    lie: LieAlgebraData,
    e: Subspace,
    x: Sequence,
    t_max: float = 40.0,
    tol: float = 1e-9,
) -> FlowReport:
    """Flow an orthonormal frame of E under Ad(exp(tX)) numerically.

    The frame is renormalized after unit time steps to avoid overflow, and the
    result is compared to the exact limit by principal angles.  The report is
    flagged as not converged when two distinct ad(X) eigenvalues are closer
    than tol, or when E meets the filtration non-generically so that the limit
    is unstable under perturbations of the frame.
    """
    if e.dim == 0:
        return FlowReport(0.0, float("inf"), True, "", ())
    lam = np.array([float(dot(w, vec(x))) for w in lie.weights])
    distinct = sorted(set(lam))
    gap = min(
        (b - a for a, b in zip(distinct, distinct[1:])), default=float("inf")
    )
    frame = np.array([[float(c) for c in row] for row in e.basis_matrix])
    q, _ = np.linalg.qr(frame.T)
    frame = q.T
    t = 0.0
    while t < t_max:
        dt = min(1.0, t_max - t)
        frame = frame * np.exp(lam * dt)[None, :]
        q, _ = np.linalg.qr(frame.T)
        frame = q.T
        t += dt
    exact = limit_subspace(lie, e, x)
    target = np.array([[float(c) for c in row] for row in exact.basis_matrix])
    q2, _ = np.linalg.qr(target.T)
    sigma = np.linalg.svd(frame @ q2, compute_uv=False)
    sigma = np.clip(sigma, -1.0, 1.0)
    distance = float(np.sqrt(max(0.0, np.sum(1.0 - sigma**2))))
    reason = ""
    if gap != float("inf") and gap < tol:
        reason = "eigenvalue gap below tolerance"
    elif filtration_degenerate(lie, e, x):
        reason = "filtration-degenerate input; the limit is unstable"
    return FlowReport(distance, float(gap), reason == "", reason, tuple(map(tuple, frame)))
