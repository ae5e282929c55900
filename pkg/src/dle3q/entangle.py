"""Conditional three-tangle, conditional concurrence, and monogamy checks.

Conditional measures evaluate the standard pure-state entanglement measures
on the (unnormalized) amplitude sector with a fixed number n of created
photons.  Coefficients a_ijk are indexed by the qubit bits, a[4i + 2j + k],
and inherit permutation symmetry from the amplitudes:

    a_000 = A(n;0)   a_100 = a_010 = a_001 = A(n;1)
    a_111 = A(n;3)   a_110 = a_101 = a_011 = A(n;2)

The residual tangle uses the Cayley hyperdeterminant form

    tau = 4 |d1 - 2 d2 + 4 d3|

(+4 d3 is the Coffman-Kundu-Wootters convention, required for the monogamy
equality tau_A(BC) = C_AB^2 + C_AC^2 + tau_ABC on normalized pure states;
it is degree-4 homogeneous, so unnormalized sectors scale as |k|^4).

Raw sector values reproduce the published numbers; a normalized variant
(sector divided by its norm) is reported alongside as a diagnostic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import amplitude_closed_form
from .errors import NormalizationError
from .params import SystemParams, guard_detuning

#: sigma_y (x) sigma_y, the two-qubit spin-flip kernel (real in this basis).
_SPIN_FLIP = np.array([
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
])


@dataclass(frozen=True)
class ConditionalState:
    """Qubit amplitude sector for a fixed photon number n (unnormalized)."""

    n: int
    a: tuple[complex, complex, complex, complex, complex, complex, complex, complex]

    def coefficient(self, i: int, j: int, k: int) -> complex:
        return self.a[4 * i + 2 * j + k]

    def norm2(self) -> float:
        return float(sum(abs(c) ** 2 for c in self.a))


@dataclass(frozen=True)
class NormalizedMeasures:
    tau_abc: float
    c_ab0: float
    c_ab1: float


@dataclass(frozen=True)
class EntanglementRow:
    n: int
    tau_abc: float
    c_ab0: float
    c_ab1: float
    c_ab1_formula_path: float
    formula_path_mismatch: bool
    normalized_variant: NormalizedMeasures


@dataclass(frozen=True)
class EntanglementReport:
    rows: tuple[EntanglementRow, ...]

    def row(self, n: int) -> EntanglementRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(n)


def conditional_state(n: int, p: SystemParams) -> ConditionalState:
    """Amplitude sector of Eq.-type mapping at photon number n."""
    amps = [amplitude_closed_form(n, m, p) for m in range(4)]
    a = [0.0 + 0.0j] * 8
    for bits in range(8):
        a[bits] = complex(amps[bin(bits).count("1")])
    return ConditionalState(n=n, a=tuple(a))


def _d_invariants(a) -> tuple[complex, complex, complex]:
    c = {(i, j, k): complex(a[4 * i + 2 * j + k])
         for i in (0, 1) for j in (0, 1) for k in (0, 1)}
    d1 = (c[0, 0, 0] ** 2 * c[1, 1, 1] ** 2 + c[0, 0, 1] ** 2 * c[1, 1, 0] ** 2
          + c[0, 1, 0] ** 2 * c[1, 0, 1] ** 2 + c[1, 0, 0] ** 2 * c[0, 1, 1] ** 2)
    d2 = (c[0, 0, 0] * c[1, 1, 1] * c[0, 1, 1] * c[1, 0, 0]
          + c[0, 0, 0] * c[1, 1, 1] * c[1, 0, 1] * c[0, 1, 0]
          + c[0, 0, 0] * c[1, 1, 1] * c[1, 1, 0] * c[0, 0, 1]
          + c[0, 1, 1] * c[1, 0, 0] * c[1, 0, 1] * c[0, 1, 0]
          + c[0, 1, 1] * c[1, 0, 0] * c[1, 1, 0] * c[0, 0, 1]
          + c[1, 0, 1] * c[0, 1, 0] * c[1, 1, 0] * c[0, 0, 1])
    d3 = (c[0, 0, 0] * c[1, 1, 0] * c[1, 0, 1] * c[0, 1, 1]
          + c[1, 1, 1] * c[0, 0, 1] * c[0, 1, 0] * c[1, 0, 0])
    return d1, d2, d3


def residual_tangle_general(a) -> float:
    """Three-tangle 4|d1 - 2 d2 + 4 d3| of eight coefficients (any norm)."""
    d1, d2, d3 = _d_invariants(a)
    return 4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3)


def conditional_tangle(n: int, p: SystemParams) -> float:
    """Residual tangle of the n-photon sector; nonzero only for n = 2."""
    if n != 2:
        return 0.0
    guard_detuning(p.omega2, p.e0)
    lam2 = p.lambda_ ** 2
    s1 = p.omega1 + p.e0
    pair = 3.0 * math.sqrt(2.0) * lam2 / (s1 * abs(p.omega2 - p.e0))
    double = 2.0 * math.sqrt(2.0) * lam2 / ((p.omega2 + p.e0) * s1)
    return 16.0 * pair * double ** 3


def concurrence_pair_general(a: complex, b: complex, c: complex, d: complex) -> float:
    """Pure two-qubit concurrence 2|ad - bc| of coefficients (a, b, c, d)."""
    return 2.0 * abs(a * d - b * c)


def conditional_concurrence(n: int, third_excited: bool, p: SystemParams) -> float:
    """Pair concurrence of the n-photon sector with the third qubit fixed.

    Table-form values; the (n=2, third excited) entry follows the published
    table (8 lam^4 / D^2), which is half the raw 2|a'd' - b'c'| formula value
    (see concurrence_formula_path).
    """
    if n > 2 or n < 0:
        return 0.0
    lam2 = p.lambda_ ** 2
    s1 = p.omega1 + p.e0
    s2 = p.omega2 + p.e0
    if n == 0:
        if not third_excited:
            return 0.0
        guard_detuning(p.omega2, p.e0)
        return 2.0 * (2.0 * lam2 / ((p.omega2 - p.e0) * s1)) ** 2
    if n == 1:
        if third_excited:
            return 0.0
        return 2.0 * lam2 * (1.0 / s2 - 1.0 / s1) ** 2
    if third_excited:
        return 8.0 * lam2 ** 2 / (s2 ** 2 * s1 ** 2)
    guard_detuning(p.omega2, p.e0)
    return 24.0 * lam2 ** 2 / (abs(p.omega2 ** 2 - p.e0 ** 2) * s1 ** 2)


def concurrence_formula_path(n: int, third_excited: bool, p: SystemParams) -> float:
    """2|a'd' - b'c'| applied directly to the amplitude mapping.

    Agrees with conditional_concurrence everywhere except (n=2, third
    excited), where it returns twice the tabulated value; the report exposes
    both and flags the mismatch.
    """
    amps = [amplitude_closed_form(n, m, p) for m in range(4)]
    if third_excited:
        quad = (amps[1], amps[2], amps[2], amps[3])
    else:
        quad = (amps[0], amps[1], amps[1], amps[2])
    return concurrence_pair_general(*quad)


def entanglement_report(p: SystemParams) -> EntanglementReport:
    """Tangle and concurrences for n = 0, 1, 2, raw and normalized."""
    rows = []
    for n in (0, 1, 2):
        tau = conditional_tangle(n, p)
        c0 = conditional_concurrence(n, False, p)
        c1 = conditional_concurrence(n, True, p)
        c1_formula = concurrence_formula_path(n, True, p)
        mismatch = abs(c1_formula - c1) > 1e-12 * max(abs(c1_formula), abs(c1), 1e-300)
        norm2 = conditional_state(n, p).norm2()
        if norm2 > 0.0:
            normalized = NormalizedMeasures(
                tau_abc=tau / norm2 ** 2, c_ab0=c0 / norm2, c_ab1=c1 / norm2)
        else:
            normalized = NormalizedMeasures(0.0, 0.0, 0.0)
        rows.append(EntanglementRow(
            n=n, tau_abc=tau, c_ab0=c0, c_ab1=c1,
            c_ab1_formula_path=c1_formula, formula_path_mismatch=mismatch,
            normalized_variant=normalized))
    return EntanglementReport(rows=tuple(rows))


#: Column order of the wide CSV serialization of EntanglementReport.
REPORT_CSV_COLUMNS = ("n", "tau_abc", "c_ab0", "c_ab1", "c_ab1_formula_path",
                      "formula_path_mismatch", "normalized_tau_abc",
                      "normalized_c_ab0", "normalized_c_ab1")


def report_to_csv(report: EntanglementReport) -> str:
    """Wide CSV of the report, one row per photon number."""
    from .serialize import csv_lines

    rows = [[r.n, r.tau_abc, r.c_ab0, r.c_ab1, r.c_ab1_formula_path,
             r.formula_path_mismatch, r.normalized_variant.tau_abc,
             r.normalized_variant.c_ab0, r.normalized_variant.c_ab1]
            for r in report.rows]
    return csv_lines(list(REPORT_CSV_COLUMNS), rows)


def _sqrt_psd(rho: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian positive-semidefinite matrix."""
    w, v = np.linalg.eigh(rho)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def concurrence_mixed(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Standard spin-flip construction: C = max(0, l1 - l2 - l3 - l4) with l_i
    the decreasing square roots of the eigenvalues of rho * rho_tilde.
    Computed as the singular values of sqrt(rho)^T (sy x sy) sqrt(rho),
    which is the same spectrum evaluated without differencing noisy
    near-zero eigenvalues.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    scale = max(float(np.abs(rho).max()), 1e-300)
    if np.abs(rho - rho.conj().T).max() > 1e-10 * scale:
        raise ValueError("density matrix is not Hermitian")
    root = _sqrt_psd(rho)
    lam = np.linalg.svd(root.T @ _SPIN_FLIP @ root, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def _reduced_pair(psi: np.ndarray, keep: tuple[int, int]) -> np.ndarray:
    """Density matrix of two qubit slots of a pure 3-qubit state."""
    t = psi.reshape(2, 2, 2)
    other = next(ax for ax in range(3) if ax not in keep)
    m = np.transpose(t, (*keep, other)).reshape(4, 2)
    return m @ m.conj().T


def monogamy_residual(a, normalized: bool = True) -> float:
    """tau_A(BC) - C_AB^2 - C_AC^2 - tau_ABC for eight coefficients.

    tau_A(BC) = 4 det(rho_A).  Zero (to numerical precision) for normalized
    pure states; that equality is the Coffman monogamy relation, stated here
    only where it is a theorem, hence the normalization check.
    """
    psi = np.asarray(a, dtype=complex).reshape(8)
    if normalized:
        norm = float(np.linalg.norm(psi))
        if abs(norm - 1.0) > 1e-10:
            raise NormalizationError(f"state norm {norm} differs from 1 beyond 1e-10")
    t = psi.reshape(2, 2, 2)
    rho_a = np.einsum("ijk,ljk->il", t, t.conj())
    tau_a_bc = 4.0 * float(np.linalg.det(rho_a).real)
    c_ab = concurrence_mixed(_reduced_pair(psi, (0, 1)))
    c_ac = concurrence_mixed(_reduced_pair(psi, (0, 2)))
    return tau_a_bc - c_ab ** 2 - c_ac ** 2 - residual_tangle_general(psi)
