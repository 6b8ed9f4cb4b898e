"""smoke tests for the _zgkn python module (and the CLI when ZGKN_CLI is set)."""

import json
import math
import os
import subprocess

import pytest

import _zgkn as z


def test_constants():
    assert z.alpha_fs == pytest.approx(0.0072973525693, abs=0)
    assert z.a_ring_max == pytest.approx(1 - 1 / math.sqrt(2), rel=1e-15)
    assert z.gamma_from_Z(1.0) == pytest.approx(-z.alpha_fs, rel=1e-15)


def test_ground_state_matches_fine_structure():
    p = z.ModelParams(a=1e-4, gamma=z.gamma_from_Z(1.0), kappa=0.5)
    bs = z.solve(p, z.WindingTarget(0, 0))
    assert bs.converged
    assert bs.label.text == "1s1/2"
    ref = z.sommerfeld_energy(0, -1, p.gamma)
    assert bs.E == pytest.approx(ref, abs=1e-4)
    assert bs.in_guaranteed_region


def test_validation_rejects_bad_input():
    rep = z.validate(z.ModelParams(a=0.1, gamma=-0.3, kappa=0.0), z.WindingTarget(0, 0))
    assert not rep.accepted
    rep = z.validate(z.ModelParams(a=0.1, gamma=-0.3, kappa=0.5), z.WindingTarget(-1, 0))
    assert not rep.accepted
    assert "n_omega" in rep.reason
    bs = z.solve(z.ModelParams(a=0.1, gamma=-0.3, kappa=0.5), z.WindingTarget(-1, 0))
    assert not bs.converged and bs.error


def test_label_dictionary():
    lab = z.label(-1, 1, -0.5)
    assert (lab.text, lab.n, lab.ell, lab.M, lab.N) == ("2p1/2", 2, 1, 1, -1)
    with pytest.raises(ValueError):
        z.label(0, 0, 0.25)  # kappa must be half-odd


def test_angular_connector_collapses_to_integer():
    p = z.ModelParams(a=1e-6, gamma=-0.3, kappa=0.5)
    res = z.find_lambda(p, E=0.5, n_theta=0)
    assert res.converged
    assert res.mu_star == pytest.approx(z.a0_angular_k(1, 0.5), abs=1e-4)


def test_radial_connector_tracks_sommerfeld():
    p = z.ModelParams(a=1e-4, gamma=-0.5, kappa=0.5)
    res = z.find_E(p, lambda_=-1.0, n_omega=0)
    assert res.converged
    assert res.mu_star == pytest.approx(math.sqrt(1 - 0.25), abs=1e-3)


def test_series_reduces_to_integer_at_zero_ring():
    assert z.bsw_lambda(0.5, 1, 0.0, 0.7) == pytest.approx(-1.0, abs=0)
    assert z.jacobi_theta_final(1, 0.5) == pytest.approx(-math.pi, rel=1e-12)


def test_wave_profile_peak():
    p = z.ModelParams(a=0.05, gamma=z.gamma_from_Z(40.0), kappa=0.5)
    bs = z.solve(p, z.WindingTarget(0, 0))
    assert bs.converged
    wp = z.wave_profile(bs, n_r=401, n_theta=201)
    assert wp.ok
    assert wp.peak_r > 0
    assert wp.peak_density > 0
    assert len(wp.density) == len(wp.radial.r)
    assert wp.radial.ok and wp.angular.ok


cli = os.environ.get("ZGKN_CLI")


@pytest.mark.skipif(not cli, reason="ZGKN_CLI not set")
def test_cli_agrees_with_module():
    p = z.ModelParams(a=1e-4, gamma=z.gamma_from_Z(1.0), kappa=0.5)
    bs = z.solve(p, z.WindingTarget(0, 0))
    out = subprocess.run(
        [cli, "solve", "--a", "1e-4", "--Z", "1", "--kappa", "0.5", "--ntheta", "0",
         "--nomega", "0"],
        capture_output=True, text=True, check=True)
    rec = json.loads(out.stdout)
    assert rec["converged"] is True
    assert rec["E"] == pytest.approx(bs.E, abs=0)
    assert rec["label"] == bs.label.text
