"""Acceptance suite: every verification check at its stated tolerance.

Each test runs one check from `cavitygates.verify` (the same checks the
CLI `verify` verb exposes) and prints a pass/fail line with its worst
metric, so `pytest -s tests/test_acceptance.py` doubles as a readable
verification report.
"""

import pytest

from cavitygates import verify


def _run(check):
    report = check()
    print(f"[{report.status.upper()}] {report.name}")
    for metric in report.metrics:
        flag = "ok  " if metric.passed else "FAIL"
        print(f"    {flag} {metric.name}: {metric.value:.3e} (tol {metric.tolerance:.1e})")
    failing = [m for m in report.metrics if not m.passed]
    assert not failing, f"{report.name}: {[m.name for m in failing]}"


def test_01_two_atom_evolution_closed_form():
    _run(verify.check_two_atom_evolution)


def test_02_invariant_curve():
    _run(verify.check_invariant_curve)


def test_03_cnot_invariants():
    _run(verify.check_cnot_invariants)


def test_04_two_atom_cnot_reconstruction():
    _run(verify.check_cnot2)


def test_05_spin_echo_factorization():
    _run(verify.check_spin_echo)


def test_06_three_atom_cnot():
    _run(verify.check_cnot3)


def test_07_toffoli_constructions():
    _run(verify.check_toffoli)


def test_08_gate_time_accounting():
    _run(verify.check_gate_times)


def test_09_thermal_compensation():
    _run(verify.check_thermal_compensation)


def test_10_correction_round_trip():
    _run(verify.check_correction_round_trip)


def test_11_swap_is_not_cnot():
    _run(verify.check_swap_not_cnot)


def test_12_operator_identity():
    _run(verify.check_operator_identity)


def test_all_checks_registry_is_complete():
    assert len(verify.ALL_CHECKS) == 12
    assert verify.VERIFY_TARGETS["all"] == verify.ALL_CHECKS


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
