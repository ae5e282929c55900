"""Transition amplitudes and excitation probabilities of the sudden switch.

The boundary change is modeled as a sudden quench omega1 -> omega2; the
amplitude for ending with n created photons and m excited qubits is the
overlap of the first-order dressed target state at omega2 with the
first-order dressed ground state at omega1.  Only four channels survive:

    A(2;0) = -3 sqrt(2) lam^2 / ((w1+E0)(w2-E0))      photon pair, no qubits
    A(1;1) =  lam (1/(w2+E0) - 1/(w1+E0))             one photon, one qubit
    A(0;2) =  2 lam^2 / ((w2-E0)(w1+E0))              no photons, two qubits
    A(2;2) = -2 sqrt(2) lam^2 / ((w2+E0)(w1+E0))      photon pair, two qubits

and every other (n, m) vanishes, including all m = 3.  Amplitudes are quoted
per target configuration; the three targets within an excitation class give
identical values.

Convention: the (0, 0) survival overlap (which is ~1) is not an excitation
amplitude; the closed-form channel set carries only the switch-induced
values, so the zero-photon conditional state has a_000 = 0.  Probabilities
follow the closed-form table, w_m = sum over n of A(n;m)^2.  (The running
text's expression for w_2 omits a square on one Lamb-shift factor; the
tabulated form used here is the dimensionally consistent one and reproduces
the quoted numbers.)
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterDomainError
from .hilbert import BasisState
from .params import SystemParams, guard_detuning
from .perturb import perturbed_state

#: The only (n, m) channels with nonzero switch amplitude.
DLE_CHANNELS = ((2, 0), (1, 1), (0, 2), (2, 2))

#: Representative target configuration for each qubit excitation count.
CLASS_REPRESENTATIVE = {0: (0, 0, 0), 1: (1, 0, 0), 2: (1, 1, 0), 3: (1, 1, 1)}


@dataclass(frozen=True)
class AmplitudeSet:
    """The four nonzero transition amplitudes; everything else is zero."""

    a_2_0: float
    a_1_1: float
    a_0_2: float
    a_2_2: float

    def get(self, n: int, m: int) -> float:
        return {(2, 0): self.a_2_0, (1, 1): self.a_1_1,
                (0, 2): self.a_0_2, (2, 2): self.a_2_2}.get((n, m), 0.0)


@dataclass(frozen=True)
class ProbabilitySet:
    """Excitation probabilities per final qubit count; w_3 is identically zero."""

    w_0: float
    w_1: float
    w_2: float
    w_3: float


def amplitude_closed_form(n: int, m: int, p: SystemParams) -> float:
    """Closed-form switch amplitude A(n; m); zero outside the four channels."""
    if n < 0 or not 0 <= m <= 3:
        raise ParameterDomainError(f"invalid channel (n={n}, m={m})")
    lam2 = p.lambda_ ** 2
    s1 = p.omega1 + p.e0
    s2 = p.omega2 + p.e0
    if (n, m) == (2, 0):
        guard_detuning(p.omega2, p.e0)
        return -3.0 * math.sqrt(2.0) * lam2 / (s1 * (p.omega2 - p.e0))
    if (n, m) == (1, 1):
        return p.lambda_ * (1.0 / s2 - 1.0 / s1)
    if (n, m) == (0, 2):
        guard_detuning(p.omega2, p.e0)
        return 2.0 * lam2 / ((p.omega2 - p.e0) * s1)
    if (n, m) == (2, 2):
        return -2.0 * math.sqrt(2.0) * lam2 / (s2 * s1)
    return 0.0


def amplitude_set(p: SystemParams) -> AmplitudeSet:
    return AmplitudeSet(*(amplitude_closed_form(n, m, p) for n, m in DLE_CHANNELS))


def amplitude_via_overlap(n: int, m: int, p: SystemParams,
                          target: BasisState | None = None) -> float:
    """Switch amplitude from first-order state overlaps, one target label.

    Independent route to the closed forms: builds the first-order states at
    both frequencies and takes <target, omega2 | ground, omega1>.  For the
    survival channel (0, 0) the zeroth-order term is excluded so that only
    the switch-induced piece remains.
    """
    if target is None:
        target = BasisState(n, CLASS_REPRESENTATIVE[m])
    if target.photons != n or target.excitation_count != m:
        raise ParameterDomainError(f"target {target.label} is not in channel ({n}, {m})")
    bra = perturbed_state(target, p.omega2, p)
    ket = perturbed_state(BasisState(0, (0, 0, 0)), p.omega1, p)
    value = bra.inner(ket)
    if (n, m) == (0, 0):
        value -= 1.0  # remove the zeroth-order survival term
    if abs(value.imag) > 1e-15 * max(1.0, abs(value.real)):
        raise AssertionError(f"overlap unexpectedly complex: {value!r}")
    return value.real


def probabilities(p: SystemParams) -> ProbabilitySet:
    """Per-channel probabilities: w_0 = A(2;0)^2, w_1 = A(1;1)^2, w_2 = A(0;2)^2 + A(2;2)^2."""
    a = amplitude_set(p)
    return ProbabilitySet(
        w_0=a.a_2_0 ** 2,
        w_1=a.a_1_1 ** 2,
        w_2=a.a_0_2 ** 2 + a.a_2_2 ** 2,
        w_3=0.0,
    )


def entanglement_witness_product_gap(p: SystemParams) -> float:
    """w_2 - w_1^2: two-qubit excitation is not an independent-event product."""
    w = probabilities(p)
    return w.w_2 - w.w_1 ** 2


def amplitude_rows(p: SystemParams) -> list[dict]:
    """Per-channel report rows for JSON / CSV serialization."""
    return [
        {"n": n, "m": m,
         "amplitude": amplitude_closed_form(n, m, p),
         "probability": amplitude_closed_form(n, m, p) ** 2}
        for n, m in DLE_CHANNELS
    ]


def rows_to_csv(p: SystemParams) -> str:
    """CSV of the report rows, columns n, m, amplitude, probability."""
    from .serialize import csv_lines

    rows = [[r["n"], r["m"], r["amplitude"], r["probability"]]
            for r in amplitude_rows(p)]
    return csv_lines(["n", "m", "amplitude", "probability"], rows)
