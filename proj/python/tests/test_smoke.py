import math

import numpy as np
import pytest

import cpnets


def test_experiment_list():
    ids = [e[0] for e in cpnets.experiments()]
    assert ids == ["diffusion1d", "advdiff2d", "burgers2d", "closure", "fv-gnet"]


def test_default_config_echoes_schema():
    text = cpnets.default_config("diffusion1d")
    assert "[experiment]" in text
    assert "id = diffusion1d" in text


def test_unknown_key_is_config_error():
    with pytest.raises(cpnets.ConfigError):
        cpnets.run("diffusion1d", set={"pde.bogus": "1"})
    with pytest.raises(ValueError):
        cpnets.default_config("nope")


def test_short_run_and_artifacts(tmp_path):
    cfg = "[pde]\nsteps = 50\n[train]\nepochs = 200\n"
    r = cpnets.run("diffusion1d", config=cfg, out=str(tmp_path))
    assert r.ok
    assert r.get("cp-conv/analytic/C=0.5", "step_error") < 1e-14
    assert r.get("cp-conv/C=0.5", "diverged_at") == "none"
    assert (tmp_path / "metrics.csv").read_text() == r.metrics_csv()
    again = cpnets.run("diffusion1d", config=cfg)
    assert again.metrics_csv() == r.metrics_csv()
    t = cpnets.read_trajectory(tmp_path / "data" / "test_C=0.5")
    assert t["frames"].shape[0] == 51 and t["frames"].ndim == 3
    assert t["grid"]["dx"] == pytest.approx(0.01)


def test_metrics():
    rng = np.random.default_rng(0)
    truth = rng.normal(size=(4, 8, 2))
    assert cpnets.mae(truth, truth) == 0.0
    assert cpnets.mae(truth + 0.25, truth, "final-step") == pytest.approx(0.25)
    bad = truth.copy()
    bad[2, 0, 0] = np.nan
    assert math.isinf(cpnets.mae(bad, truth))
    mean = np.broadcast_to(truth.mean(axis=(0, 1)), truth.shape)
    assert cpnets.rmse_normalized(mean, truth) == pytest.approx(1.0)
    x = np.arange(64) * 2 * np.pi / 64
    e = cpnets.energy_spectrum(np.sin(3 * x))
    assert int(np.argmax(e)) == 3
    assert e.sum() * 1.0 == pytest.approx(np.mean(np.sin(3 * x) ** 2))
