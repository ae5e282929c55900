"""Exact-diagonalization verification path.

Dense symmetric eigensolve of the truncated Hamiltonian at each cavity
frequency, dressed-state matching, and sudden-switch overlaps.  The initial
state and both couplings are permutation symmetric, so everything reachable
from the ground state lives in the permutation-symmetric sector; dressed
states are matched there, which keeps the assignment deterministic inside
otherwise-degenerate excitation classes.  Sudden overlaps are divided by
sqrt(multiplicity) of the target class so they are quoted per target
configuration, matching the closed-form convention.

Defaults diagonalize H0 + V only (the counter-rotating coupling that drives
the switch transitions); include_rwa=True adds the rotating part.  Both are
reported by the validation layer: the rotating sidebands are required for
the (2,0) and (0,2) channels to be reachable at all, while channel (1,1)
agrees with the closed form under either Hamiltonian.

Caveat established by this oracle (see compare_with_closed_forms): the
closed-form table isolates the Lamb-modulation part of each amplitude, which
for the lambda^2-order channels differs at that same order from the full
quench overlap (second-order dressing paths contribute equally there).  The
(1,1) channel is the one whose full overlap converges to the closed form as
lambda -> 0, and it is the gated channel.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .amplitudes import CLASS_REPRESENTATIVE, DLE_CHANNELS, amplitude_closed_form
from .errors import (DegeneracyAmbiguityError, SolverDiagnosticsError,
                     TruncationHeadroomError)
from .hilbert import (BasisState, StateVector, build_basis, dimension,
                      hamiltonian_total, index_of)
from .params import SystemParams

#: Size of each excitation class, binom(3, m).
CLASS_MULTIPLICITY = (1, 3, 3, 1)

#: Minimum photon headroom between a dressed label and the cutoff.
HEADROOM = 4

#: Dominant-character acceptance threshold for dressed matching.
MIN_LABEL_OVERLAP = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class DressedState:
    """Eigenstate continuously connected to an unperturbed product label."""

    label: BasisState
    omega: float
    eigenvalue: float
    vector: np.ndarray  # full-basis coefficients, unit norm, label component > 0
    overlap_with_label: float

    def state_vector(self, tol: float = 0.0) -> StateVector:
        return StateVector.from_array(self.vector, tol=tol)


def symmetrizer(nmax: int) -> np.ndarray:
    """Isometry from the (n, m) symmetric-sector basis into the full basis.

    Column 4*n + m is the normalized uniform superposition of the
    binom(3, m) product states with n photons and m excited qubits.
    """
    cols = np.zeros((dimension(nmax), 4 * (nmax + 1)))
    for s in build_basis(nmax):
        m = s.excitation_count
        cols[index_of(s), 4 * s.photons + m] = 1.0 / math.sqrt(CLASS_MULTIPLICITY[m])
    return cols


def diagonalize_total(p: SystemParams, omega: float,
                      include_rwa: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of H(omega), with accuracy checks.

    Returns (eigenvalues ascending, eigenvectors as columns).  Raises
    SolverDiagnosticsError if the solver fails or the orthonormality /
    reconstruction residuals exceed their bounds.
    """
    if dimension(p.nmax) > 10_000:
        raise SolverDiagnosticsError(f"dimension {dimension(p.nmax)} exceeds the 1e4 limit")
    h = hamiltonian_total(p, omega, include_rwa=include_rwa)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise SolverDiagnosticsError(f"eigensolver failed: {exc}") from exc
    gram = np.abs(v.T @ v - np.eye(v.shape[1])).max()
    if gram > 1e-10:
        raise SolverDiagnosticsError(f"eigenvector Gram residual {gram:.3e} > 1e-10")
    norm_h = float(np.abs(w).max()) if np.abs(w).max() > 0 else 1.0
    recon = np.linalg.norm(h @ v - v * w, axis=0).max()
    if recon > 1e-9 * norm_h:
        raise SolverDiagnosticsError(f"reconstruction residual {recon:.3e} > 1e-9*|H|")
    return w, v


@lru_cache(maxsize=64)
def _symmetric_eig(p: SystemParams, omega: float, include_rwa: bool):
    """Eigendecomposition of H projected onto the symmetric sector."""
    s = symmetrizer(p.nmax)
    h_sym = s.T @ hamiltonian_total(p, omega, include_rwa=include_rwa) @ s
    try:
        w, v = np.linalg.eigh(h_sym)
    except np.linalg.LinAlgError as exc:
        raise SolverDiagnosticsError(f"eigensolver failed: {exc}") from exc
    w.setflags(write=False)
    v.setflags(write=False)
    s.setflags(write=False)
    return w, v, s


def dressed_state(label: BasisState, p: SystemParams, omega: float,
                  include_rwa: bool = False) -> DressedState:
    """Symmetric-sector eigenvector dominated by the label's excitation class.

    The match maximizes |overlap| with the symmetrized representative of the
    label's class; it must be dominant (> 1/sqrt(2)) and separated from the
    runner-up by at least 1e-6, otherwise a DegeneracyAmbiguityError is
    raised.  The phase is fixed so the label-class component is positive.
    """
    if label.photons > p.nmax - HEADROOM:
        raise TruncationHeadroomError(
            f"label |{label.label}> needs photon headroom: n <= nmax - {HEADROOM} "
            f"= {p.nmax - HEADROOM}")
    w, v, s = _symmetric_eig(p, omega, include_rwa)
    target = 4 * label.photons + label.excitation_count
    overlaps = np.abs(v[target, :])
    order = np.argsort(overlaps)[::-1]
    best, runner_up = order[0], order[1]
    if overlaps[best] - overlaps[runner_up] < 1e-6:
        raise DegeneracyAmbiguityError(
            f"two eigenvectors match |{label.label}> equally well "
            f"({overlaps[best]:.6f} vs {overlaps[runner_up]:.6f}); near-crossing")
    if overlaps[best] <= MIN_LABEL_OVERLAP:
        raise DegeneracyAmbiguityError(
            f"best overlap {overlaps[best]:.4f} with |{label.label}> is not dominant "
            f"(needs > {MIN_LABEL_OVERLAP:.4f}); state has lost its label character")
    vec_sym = v[:, best] * np.sign(v[target, best])
    return DressedState(
        label=label,
        omega=omega,
        eigenvalue=float(w[best]),
        vector=s @ vec_sym,
        overlap_with_label=float(overlaps[best]),
    )


def sudden_overlap(n: int, m: int, p: SystemParams, include_rwa: bool = False) -> float:
    """Exact quench amplitude per target configuration for channel (n, m).

    Overlap of the dressed (n, m)-class state at omega2 with the dressed
    ground state at omega1, divided by sqrt(binom(3, m)) so that it is
    quoted per product target like the closed forms.
    """
    ground = dressed_state(BasisState(0, (0, 0, 0)), p, p.omega1, include_rwa)
    target = dressed_state(BasisState(n, CLASS_REPRESENTATIVE[m]), p, p.omega2, include_rwa)
    raw = float(target.vector @ ground.vector)
    return raw / math.sqrt(CLASS_MULTIPLICITY[m])


def symmetric_class_shift(m: int, omega: float, p: SystemParams,
                          include_rwa: bool = False) -> float:
    """Degenerate second-order correction to the symmetric-combination energy.

    The m = 1 and m = 2 classes are threefold degenerate, and second-order
    cross terms through shared intermediates shift the symmetric combination
    by 2*W_ab relative to the per-label closed form, with

        W_ab = -lam^2/(omega + E0)                      (H0 + V)
        W_ab = -lam^2/(omega + E0) - lam^2/(omega - E0)  (H0 + V + V_RWA)

    independent of n.  Zero for the nondegenerate m = 0 and m = 3 classes.
    """
    if m in (0, 3):
        return 0.0
    w_ab = -p.lambda_ ** 2 / (omega + p.e0)
    if include_rwa:
        w_ab -= p.lambda_ ** 2 / (omega - p.e0)
    return 2.0 * w_ab


def convergence_study(p: SystemParams, nmax_list: list[int],
                      include_rwa: bool = False,
                      channels: tuple[tuple[int, int], ...] = DLE_CHANNELS):
    """Sudden overlaps per channel across truncations.

    Returns (rows, summary): rows are dicts with keys nmax, channel_n,
    channel_m, value; summary maps each channel to {"converged", "monotone"}
    where converged means the last successive difference is below 1e-10
    relative (values below 1e-14 count as converged zeros) and monotone
    reports whether |successive difference| never grew along the list.
    """
    if list(nmax_list) != sorted(nmax_list) or len(nmax_list) < 2:
        raise ValueError("nmax_list must be ascending with at least two entries")
    rows = []
    values: dict[tuple[int, int], list[float]] = {ch: [] for ch in channels}
    for nm in nmax_list:
        p_nm = SystemParams(p.omega1, p.omega2, p.e0, p.lambda_, nmax=int(nm))
        for ch in channels:
            val = sudden_overlap(ch[0], ch[1], p_nm, include_rwa=include_rwa)
            values[ch].append(val)
            rows.append({"nmax": int(nm), "channel_n": ch[0], "channel_m": ch[1],
                         "value": val})
    summary = {}
    for ch, vals in values.items():
        diffs = [abs(b - a) for a, b in zip(vals, vals[1:])]
        tiny = abs(vals[-1]) <= 1e-14 and abs(vals[-2]) <= 1e-14
        converged = tiny or diffs[-1] <= 1e-10 * max(abs(vals[-1]), 1e-14)
        monotone = all(d2 <= d1 or d2 <= 1e-14 for d1, d2 in zip(diffs, diffs[1:]))
        summary[ch] = {"converged": converged, "monotone": monotone}
    return rows, summary


def compare_with_closed_forms(p: SystemParams, lambda_scales: list[float],
                              include_rwa: bool = False,
                              channels: tuple[tuple[int, int], ...] = DLE_CHANNELS):
    """Oracle-vs-closed-form table over coupling scalings.

    One row per (channel, scale): closed form and sudden overlap evaluated
    at coupling scale * lambda, with their relative deviation.
    """
    if any(s <= 0 for s in lambda_scales):
        raise ValueError("lambda scales must be positive")
    if list(lambda_scales) != sorted(lambda_scales, reverse=True):
        raise ValueError("lambda scales must descend, e.g. 1, 0.5, 0.25")
    rows = []
    for scale in lambda_scales:
        p_s = SystemParams(p.omega1, p.omega2, p.e0, p.lambda_ * scale, nmax=p.nmax)
        for ch in channels:
            closed = amplitude_closed_form(ch[0], ch[1], p_s)
            orac = sudden_overlap(ch[0], ch[1], p_s, include_rwa=include_rwa)
            # undefined when the closed form vanishes (e.g. (1,1) at w2 = w1)
            rel = abs(orac - closed) / abs(closed) if closed != 0.0 else None
            rows.append({
                "channel_n": ch[0], "channel_m": ch[1],
                "closed_form": closed, "oracle": orac, "rel_dev": rel,
                "nmax": p.nmax, "lambda_scale": scale, "include_rwa": include_rwa,
            })
    return rows


#: Channels whose closed form the exact overlap converges to, per Hamiltonian.
GATED_CHANNELS = ((1, 1),)


def shrink_factors(rows, channel: tuple[int, int]) -> list[float]:
    """Deviation shrink factors between successive lambda scales for one channel.

    A factor of zero marks an undefined deviation (vanishing closed form),
    which a gate should treat as failing rather than silently passing.
    """
    devs = [r["rel_dev"] for r in rows
            if (r["channel_n"], r["channel_m"]) == channel]
    out = []
    for a, b in zip(devs, devs[1:]):
        if a is None or b is None:
            out.append(0.0)
        elif b > 0:
            out.append(a / b)
        else:
            out.append(math.inf)
    return out
