"""Effective collective Hamiltonian, its unitary evolution, and the
thermal (mean-photon-number) compensation rotations.

The dispersive interaction of N trapped two-level atoms with a lossy
cavity mode reduces to

    H / (hbar eta) = S_+ S_- + 2 nbar S_z                (ladder form)
                   = S^2 - S_z^2 + (2 nbar + 1) S_z      (Casimir form)

with coupling factor eta = g^2 Delta / (kappa^2 + Delta^2).  The two
forms are equal as operators; they differ in what counts as the "linear"
S_z term, so dropping it leaves S_+ S_- in one case and S^2 - S_z^2 in
the other.  Because S_z commutes with everything else in H, the linear
term amounts to a z-rotation of every qubit and can be cancelled at any
point of the evolution window by R_z(-2 nbar phi) (ladder) or
R_z(-(2 nbar + 1) phi) (Casimir) per qubit, where phi = eta t.

All evolution APIs take the dimensionless phase phi = eta t; physical
seconds enter only through `coupling_eta` for reporting.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DegenerateParams
from .gates import rotation
from .linalg import expm_hermitian, kron
from .spin import _check_atoms, collective_op, s_squared


class HamiltonianForm(enum.Enum):
    """Which writing of the effective Hamiltonian a computation uses."""

    LADDER = "ladder"    # S+ S-  (+ 2 nbar Sz)
    CASIMIR = "casimir"  # S^2 - Sz^2  (+ (2 nbar + 1) Sz)


@dataclass(frozen=True)
class CavityParams:
    """Physical cavity/atom parameters, all rates in rad/s.

    delta is the atom-cavity detuning omega_0 - omega; its sign sets the
    sign of eta.  nbar is the mean thermal photon number of the mode.
    """

    g: float
    delta: float
    kappa: float
    nbar: float = 0.0
    n_atoms: int = 2

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("dipole coupling g must be >= 0")
        if self.kappa < 0:
            raise ValueError("cavity loss rate kappa must be >= 0")
        if self.nbar < 0:
            raise ValueError("mean photon number nbar must be >= 0")
        _check_atoms(self.n_atoms)


def coupling_eta(params: CavityParams) -> float:
    """Coupling factor eta = g^2 Delta / (kappa^2 + Delta^2), in rad/s."""
    denom = params.kappa ** 2 + params.delta ** 2
    if denom == 0:
        raise DegenerateParams("eta undefined for kappa = delta = 0")
    return params.g ** 2 * params.delta / denom


#: validity_ratio above this is reported as a warning (a reporting
#: default; the underlying condition is only asymptotic).
VALIDITY_WARN_THRESHOLD = 0.1


def validity_ratio(params: CavityParams) -> float:
    """g sqrt(N) / sqrt(Delta^2 + kappa^2).

    The effective Hamiltonian holds in the dispersive limit where this
    ratio is small.
    """
    denom = sqrt(params.kappa ** 2 + params.delta ** 2)
    if denom == 0:
        raise DegenerateParams("validity ratio undefined for kappa = delta = 0")
    return params.g * sqrt(params.n_atoms) / denom


def build_hamiltonian(
    n: int,
    form: HamiltonianForm,
    nbar: float = 0.0,
    include_linear: bool = False,
) -> np.ndarray:
    """Dimensionless Hamiltonian H / (hbar eta) for n atoms.

    With include_linear=False the form-specific linear S_z term is
    dropped: LADDER gives S+ S-, CASIMIR gives S^2 - S_z^2.
    """
    n = _check_atoms(n)
    sz = collective_op("z", n)
    if form is HamiltonianForm.LADDER:
        h = collective_op("+", n) @ collective_op("-", n)
        if include_linear:
            h = h + 2.0 * nbar * sz
    elif form is HamiltonianForm.CASIMIR:
        h = s_squared(n) - sz @ sz
        if include_linear:
            h = h + (2.0 * nbar + 1.0) * sz
    else:
        raise ValueError(f"unknown Hamiltonian form {form!r}")
    return h


def compensation_rotation(
    form: HamiltonianForm, nbar: float, phi: float
) -> tuple[str, float]:
    """Per-qubit rotation (axis, angle) cancelling the linear S_z term
    accumulated over an evolution of phase phi = eta t.

    Returns ('z', -2 nbar phi) for the ladder form and
    ('z', -(2 nbar + 1) phi) for the Casimir form.
    """
    if form is HamiltonianForm.LADDER:
        return ("z", -2.0 * nbar * phi)
    if form is HamiltonianForm.CASIMIR:
        return ("z", -(2.0 * nbar + 1.0) * phi)
    raise ValueError(f"unknown Hamiltonian form {form!r}")


def compensation_layer(n: int, form: HamiltonianForm, nbar: float, phi: float) -> np.ndarray:
    """The compensation rotation applied to every qubit, as a matrix."""
    n = _check_atoms(n)
    axis, angle = compensation_rotation(form, nbar, phi)
    single = rotation(axis, angle)
    layer = np.array([[1.0 + 0j]])
    for _ in range(n):
        layer = kron(layer, single)
    return layer


def evolve(
    n: int,
    phi: float,
    form: HamiltonianForm,
    nbar: float = 0.0,
    include_linear: bool = False,
    compensate: bool = False,
) -> np.ndarray:
    """Collective evolution exp(-i phi H / (hbar eta)).

    When compensate is true the per-qubit compensation rotation is
    appended, cancelling exactly the linear terms present in H; the
    compensated result is then independent of nbar and equals the
    include_linear=False evolution.  (With include_linear=False there is
    nothing to cancel and compensate is a no-op.)
    """
    h = build_hamiltonian(n, form, nbar=nbar, include_linear=include_linear)
    u = expm_hermitian(h, phi)
    if compensate and include_linear:
        u = compensation_layer(n, form, nbar, phi) @ u
    return u
