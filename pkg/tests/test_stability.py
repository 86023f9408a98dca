import pytest

from fracdiff.config import SimConfig
from fracdiff.stability import classify, dt_max, mesh_ratio


def ref_cfg(gamma, dt, **kw):
    return SimConfig(gamma=gamma, alpha=50.0, beta=50.0, dx=10.0, dy=10.0, dt=dt, a=8, **kw)


@pytest.mark.parametrize(
    "gamma, dt, r",
    [
        (0.6, 0.1, 0.12559),
        (0.6, 0.2, 0.19037),
        (0.6, 0.21, 0.19602),
        (0.6, 0.3, 0.2428),
        (1.2, 0.4, 0.16651),
        (1.2, 0.55, 0.24401),
        (1.2, 0.7, 0.3259),
    ],
)
def test_mesh_ratio(gamma, dt, r):
    assert mesh_ratio(ref_cfg(gamma, dt)) == pytest.approx(r, abs=1e-4)


def test_general_ratio_reduces_to_square_form():
    cfg = SimConfig(gamma=0.7, alpha=3.0, beta=5.0, dx=2.0, dy=0.5, dt=0.01)
    expected = 0.01**0.7 * (4 * 3.0 / 4.0 + 4 * 5.0 / 0.25) / 8
    assert mesh_ratio(cfg) == pytest.approx(expected, rel=1e-14)


def test_classify_near_boundary():
    stable = classify(ref_cfg(0.6, 0.2), "adaptive")
    assert stable.stable and stable.r == pytest.approx(0.19037, abs=1e-5)
    assert stable.margin == pytest.approx(0.1929 - 0.19037, abs=5e-4)
    assert not classify(ref_cfg(0.6, 0.21), "adaptive").stable
    assert classify(ref_cfg(1.0, 0.1), "full").bound == 0.25


def test_classify_superdiffusion_is_advisory():
    v = classify(ref_cfg(1.2, 0.55), "adaptive")
    assert v.stable and v.advisory
    assert not classify(ref_cfg(1.2, 0.7), "adaptive").stable


def test_boundary_flips_between_020_and_021():
    verdicts = [classify(ref_cfg(0.6, dt), "adaptive").stable for dt in (0.19, 0.20, 0.21, 0.22)]
    assert verdicts == [True, True, False, False]
    assert verdicts == [classify(ref_cfg(0.6, dt), "adaptive", use_approx=True).stable
                        for dt in (0.19, 0.20, 0.21, 0.22)]


def test_dt_max():
    assert dt_max(ref_cfg(0.6, 0.1), "adaptive", use_approx=True) == pytest.approx(0.20024, abs=1e-4)
    assert dt_max(ref_cfg(1.0, 0.1), "full") == pytest.approx(0.5, rel=1e-14)
    base = ref_cfg(0.6, 0.1)
    ratio = dt_max(base.replace(dx=20.0, dy=20.0), "full") / dt_max(base, "full")
    assert ratio == pytest.approx(4 ** (1 / 0.6), rel=1e-12)


@pytest.mark.parametrize("scheme", ["full", "adaptive"])
@pytest.mark.parametrize("gamma", [0.3, 0.6, 0.9, 1.2])
def test_dt_max_lands_on_bound(scheme, gamma):
    cfg = ref_cfg(gamma, 0.1)
    v = classify(cfg, scheme)
    at_max = cfg.replace(dt=v.dt_max)
    assert mesh_ratio(at_max) == pytest.approx(v.bound, rel=1e-10)


def test_linked_has_no_bound():
    with pytest.raises(ValueError):
        classify(ref_cfg(0.6, 0.1), "linked")
