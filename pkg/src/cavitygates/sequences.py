"""Gate sequences: ordered primitive steps and their dense composition.

A sequence step is one of

  * CollectiveEvolution(phi, form): the fixed collective interaction for
    dimensionless time phi = eta t, with the linear S_z terms understood
    to be compensated away (compose() renders the full thermal evolution
    followed by the compensation layer, so the result is independent of
    the mean photon number).
  * LocalLayer(rotations): single-qubit rotations, stored as (qubit,
    axis, angle) triples in application order; rotations on distinct
    qubits commute.  Assumed instantaneous relative to the collective
    interaction.
  * GlobalPhase(theta): multiplies by e^{i theta}.

Steps are listed in temporal order: compose() multiplies right-to-left,
so the first step acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import fsum
from typing import Union

import numpy as np

from .errors import IndexOutOfRange
from .evolution import HamiltonianForm, evolve
from .gates import rotation
from .linalg import kron


@dataclass(frozen=True)
class CollectiveEvolution:
    phi: float
    form: HamiltonianForm = HamiltonianForm.CASIMIR


@dataclass(frozen=True)
class LocalLayer:
    #: (qubit, axis, angle) triples, 1-based qubits, application order.
    rotations: tuple[tuple[int, str, float], ...]


@dataclass(frozen=True)
class GlobalPhase:
    theta: float


SequenceStep = Union[CollectiveEvolution, LocalLayer, GlobalPhase]


@dataclass(frozen=True)
class GateSequence:
    n_atoms: int
    steps: tuple[SequenceStep, ...] = field(default_factory=tuple)
    label: str = ""

    def __post_init__(self):
        for step in self.steps:
            if isinstance(step, LocalLayer):
                for qubit, _axis, _angle in step.rotations:
                    if not 1 <= qubit <= self.n_atoms:
                        raise IndexOutOfRange(
                            f"rotation on qubit {qubit} outside register of "
                            f"size {self.n_atoms}"
                        )


def local_layer_unitary(layer: LocalLayer, n_atoms: int) -> np.ndarray:
    """Dense unitary of a rotation layer on an n-atom register."""
    singles = [np.eye(2, dtype=complex) for _ in range(n_atoms)]
    for qubit, axis, angle in layer.rotations:
        if not 1 <= qubit <= n_atoms:
            raise IndexOutOfRange(f"qubit {qubit} outside register of size {n_atoms}")
        # later rotations act after (left of) earlier ones
        singles[qubit - 1] = rotation(axis, angle) @ singles[qubit - 1]
    out = np.array([[1.0 + 0j]])
    for single in singles:
        out = kron(out, single)
    return out


def step_unitary(step: SequenceStep, n_atoms: int, nbar: float = 0.0) -> np.ndarray:
    """Dense unitary of one step; collective steps are compensated."""
    if isinstance(step, CollectiveEvolution):
        return evolve(
            n_atoms, step.phi, step.form, nbar=nbar,
            include_linear=True, compensate=True,
        )
    if isinstance(step, LocalLayer):
        return local_layer_unitary(step, n_atoms)
    if isinstance(step, GlobalPhase):
        return np.exp(1j * step.theta) * np.eye(2 ** n_atoms, dtype=complex)
    raise TypeError(f"unknown sequence step {step!r}")


def compose(seq: GateSequence, nbar: float = 0.0) -> np.ndarray:
    """Multiply the step unitaries, first listed step acting first.

    Collective steps are rendered with thermal compensation on, so the
    result does not depend on nbar.
    """
    out = np.eye(2 ** seq.n_atoms, dtype=complex)
    for step in seq.steps:
        out = step_unitary(step, seq.n_atoms, nbar=nbar) @ out
    return out


def collective_time(seq: GateSequence) -> float:
    """Total collective-interaction phase, sum of |phi| (units of 1/eta).

    Local layers and global phases cost nothing under the fast-1-qubit
    assumption.
    """
    return fsum(
        abs(step.phi) for step in seq.steps if isinstance(step, CollectiveEvolution)
    )


def concat(label: str, *parts: GateSequence) -> GateSequence:
    """Concatenate sequences on the same register into one."""
    sizes = {part.n_atoms for part in parts}
    if len(sizes) != 1:
        raise ValueError(f"cannot concatenate sequences on registers {sizes}")
    steps: tuple[SequenceStep, ...] = ()
    for part in parts:
        steps = steps + part.steps
    return GateSequence(n_atoms=sizes.pop(), steps=steps, label=label)
