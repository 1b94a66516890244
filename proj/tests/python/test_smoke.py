import cmath
import json

import pytest

import heunpot


def test_series_coefficients():
    p = heunpot.HeunParams()
    c = heunpot.heun_series_coeffs(p, 3)
    assert c[0] == 1
    assert abs(c[1] - 0.5) < 1e-15
    assert abs(c[2] - 0.3125) < 1e-15


def test_epsilon_solved_and_violation():
    p = heunpot.HeunParams(a=3, q=0.2, alpha=0.5, beta=0.7, gamma=1.1, delta=0.4)
    assert abs(p.fuchsian_defect()) < 1e-15
    with pytest.raises(heunpot.HeunpotError, match="Fuchsian"):
        heunpot.HeunParams(epsilon=2.0)


def test_series_matches_oracle():
    p = heunpot.HeunParams(a=2.5 + 0.5j, q=0.3, alpha=1.2, beta=0.4, gamma=1.4, delta=-0.3)
    v, _ = heunpot.heun_local(p, 0.35)
    w, _ = heunpot.heun_oracle(p, 0.35)
    assert abs(v - w) <= 1e-8 * abs(w)


def test_invariant_paths_and_forced_zero():
    p = heunpot.HeunParams(gamma=2.0)
    assert heunpot.invariant_coeffs(p)["F"] == 0
    z = 0.3 + 0.4j
    assert abs(heunpot.heun_invariant(p, z) - heunpot.heun_invariant_quartic(p, z)) < 1e-12


def test_families_and_schwarzian():
    f = heunpot.Family("exp+", g=1.0, s=0.5)
    assert f.name == "exp+"
    assert f.rho() == (1 + 0j, 0j, 0j)
    assert abs(heunpot.schwarzian_closed(f, 0.3) + 0.5) < 1e-15
    assert abs(heunpot.schwarzian_numeric(f, 0.3) + 0.5) < 1e-6
    with pytest.raises(heunpot.HeunpotError):
        heunpot.Family("nope")


def test_profile_split():
    p = heunpot.HeunParams()
    prof = heunpot.build_profile(p, heunpot.Family("linear+"), 0.05, 3.0, 50)
    assert len(prof["x"]) + len(prof["excluded"]) == 50
    for i_s, v in zip(prof["I_S"], prof["V"]):
        assert v == prof["k_squared"] - i_s
    assert prof["psi"][0] is not None
    assert prof["psi"][-1] is None


def test_wavefunction_value_is_finite():
    psi = heunpot.wavefunction(heunpot.HeunParams(), heunpot.Family("sin2"), 0.4)
    assert cmath.isfinite(psi)


def test_cli_in_process():
    code, out, err = heunpot.run_cli(["inspect", "--gamma", "2"])
    assert code == 0
    assert json.loads(out)["coefficients"]["F"] == [0.0, 0.0]
    code, _, err = heunpot.run_cli(["inspect", "--epsilon", "9"])
    assert code == 2
    assert "Fuchsian" in err


def test_verify_report():
    report = heunpot.verify()
    assert report["meta"]["overall"] == "PASS"
    statuses = {s["name"]: s["status"] for s in report["suites"]}
    assert statuses["expansion_cross_check"] == "ERRATUM"
    assert heunpot.verify_json() == heunpot.verify_json()
