import cmath
import math

import pytest

import poncelet


def test_triangle_vertices_on_outer_ellipse():
    cfg = poncelet.Config(2.0, 1.2, 0.3 + 0.2j, -0.35 + 0.1j)
    for theta in (0.0, 0.7, 2.1):
        for x, y in poncelet.triangle(cfg, theta):
            assert abs(x * x / 4 + y * y / 1.44 - 1) < 1e-12


def test_concentric_circular_caustic():
    cfg = poncelet.Config.circular_caustic(2.0, 1.0, 0.0, 0.0)
    assert cfg.caustic_radius == pytest.approx(2 / 3)
    assert abs(cfg.f + 1j / math.sqrt(3)) < 1e-12 or abs(cfg.g + 1j / math.sqrt(3)) < 1e-12


def test_x4_locus_closed_form():
    s = poncelet.x4_locus(poncelet.Config(2.0, 1.0, 0, 0))
    assert s["sigma"] == pytest.approx(3)
    assert s["a4"] == pytest.approx(1.5)
    assert s["b4"] == pytest.approx(0.75)


def test_isogonal_circle_matches_samples():
    f, g = 0.3 + 0.2j, -0.4 + 0.1j
    center, radius = poncelet.isog_circle(f, g, 0j)
    assert abs(center - (f + g)) < 1e-15
    assert radius == pytest.approx(0.148661, abs=1e-6)
    cfg = poncelet.Config(1.0, 1.0, f, g)
    for x, y in poncelet.isogonal_locus(cfg, 0.0, 0.0, 32):
        assert abs(abs(complex(x, y) - center) - radius) < 1e-9


def test_region_and_errors():
    cfg = poncelet.Config(2.0, 1.2, 0.3 + 0.2j, -0.35 + 0.1j)
    assert poncelet.region(cfg, 20.0, 0.0) == "exterior_R_outer"
    with pytest.raises(poncelet.PonceletError):
        poncelet.Config.circular_caustic(2.0, 1.0, 2.5, 0.0)


def test_run_check_is_deterministic():
    assert "closure" in poncelet.check_names()
    first = poncelet.run_check("closure", trials=2)
    assert first["passed"]
    assert first == poncelet.run_check("closure", trials=2)
