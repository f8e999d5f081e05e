"""Local invariants of two-qubit gates and one-qubit corrections.

Shows the invariant fingerprints of reference gates, traces the
invariant curve of the collective evolution (which never reaches the
CNOT point on its own), and uses the correction solver to connect two
equivalent gates explicitly.
"""

import numpy as np

from cavitygates import (
    HamiltonianForm,
    are_equivalent,
    cnot_gate,
    evolve,
    is_local,
    kron,
    local_invariants,
    phase_distance,
    rotation,
    solve_local_corrections,
    swap_gate,
    u23_gate,
)

np.set_printoptions(precision=4, suppress=True)

# --- fingerprints of reference gates ------------------------------------
for name, gate in [
    ("identity", np.eye(4)),
    ("CNOT", cnot_gate()),
    ("SWAP", swap_gate()),
    ("U23 = exp(-i pi/3 zz)", u23_gate()),
]:
    g1, g2 = local_invariants(gate)
    print(f"{name:24s} g1 = {g1.real:+.4f}  g2 = {g2.real:+.4f}")

print("\nCNOT ~ SWAP?", are_equivalent(cnot_gate(), swap_gate()))
print("(no amount of one-qubit dressing turns SWAPs into a CNOT)")

# --- invariants along the collective evolution --------------------------
print("\ninvariants of the two-atom collective evolution U(phi):")
print(f"{'phi/pi':>8s} {'g1':>10s} {'g2':>10s}   (curve: cos^4, 4cos^2 - 1)")
for phi in np.linspace(0, np.pi / 2, 9):
    g1, g2 = local_invariants(evolve(2, phi, HamiltonianForm.LADDER))
    print(f"{phi / np.pi:8.3f} {g1.real:10.4f} {g2.real:10.4f}")
print("g1 stays positive along the curve, so no single pulse is a CNOT;")
print("the synthesis in demo 03 uses two pulses with an echo in between.")

# --- recovering the one-qubit sandwich -----------------------------------
rng = np.random.default_rng(7)


def random_local(rng):
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


target = kron(random_local(rng), random_local(rng)) @ cnot_gate() @ kron(
    random_local(rng), random_local(rng)
)
print("\ndress a CNOT with random one-qubit gates, then solve them back:")
pair = solve_local_corrections(cnot_gate(), target)
rebuilt = pair.phase * pair.o_prime @ cnot_gate() @ pair.o
print("  reconstruction distance:", phase_distance(rebuilt, target))
print("  O factors into single-qubit gates:", is_local(pair.o))
print("  O' factors into single-qubit gates:", is_local(pair.o_prime))

# the same machinery also connects gates that merely share the class
dressed_u23 = kron(rotation("y", 0.5), rotation("x", -1.1)) @ u23_gate()
pair = solve_local_corrections(u23_gate(), dressed_u23)
print("\nU23 to dressed-U23 reconstruction:",
      phase_distance(pair.phase * pair.o_prime @ u23_gate() @ pair.o, dressed_u23))
