"""Decay amplitude builders: support patterns, closed forms, symmetries."""

import numpy as np
import pytest

from trispin import (
    CouplingSet,
    DecayConfiguration,
    closed_form_tensor,
    closed_form_vector,
    full_report,
    scalar_state,
    spin_direction_from_rotation,
    tensor_state,
    vector_state,
)
from trispin.linalg import purity
from trispin.state import partial_trace

RT2 = np.sqrt(2.0)
HALF_PI = np.pi / 2.0


def random_configs(rng, count, physical=True):
    t2 = rng.uniform(0.05, np.pi - 0.05, count)
    if physical:
        lo = np.maximum(np.pi - t2, 0.05)
        t3 = rng.uniform(lo, np.pi - 0.01, count)
    else:
        t3 = rng.uniform(0.05, np.pi - 0.05, count)
    st = rng.uniform(0.0, np.pi, count)
    sp = rng.uniform(0.0, 2.0 * np.pi, count)
    return DecayConfiguration(t2, t3, st, sp)


def equal_couplings(kind):
    g = 1.0 / RT2
    return CouplingSet(kind, g, g, g, g)


# ------------------------------------------------------------------ couplings


def test_coupling_pairs_are_normalized():
    g = CouplingSet("scalar", 3.0, 4.0, 0.0, 2.0)
    c, d = g.complex_pair()
    assert abs(abs(c) - 1.0) < 1e-15
    assert abs(abs(d) - 1.0) < 1e-15
    assert c == pytest.approx((3.0 + 4.0j) / 5.0)


def test_coupling_vector_kept_raw():
    g = CouplingSet("vector", 2.0, 0.5, -1.0, 0.25)
    assert (g.g1, g.g2, g.g3, g.g4) == (2.0, 0.5, -1.0, 0.25)


def test_coupling_rejects_zero_pair():
    with pytest.raises(ValueError, match="coupling pair vanishes"):
        CouplingSet("scalar", 0.0, 0.0, 1.0, 1.0)
    with pytest.raises(ValueError, match="coupling pair vanishes"):
        CouplingSet("tensor", 1.0, 1.0, 0.0, 0.0)


def test_coupling_rejects_all_zero():
    with pytest.raises(ValueError):
        CouplingSet("vector", 0.0, 0.0, 0.0, 0.0)


def test_coupling_rejects_unknown_kind():
    with pytest.raises(ValueError):
        CouplingSet("axial", 1.0, 1.0, 1.0, 1.0)


def test_builder_rejects_kind_mismatch():
    cfg = DecayConfiguration(2.0, 2.0, HALF_PI, HALF_PI)
    with pytest.raises(ValueError, match="expected scalar couplings"):
        scalar_state(cfg, equal_couplings("vector"))


# -------------------------------------------------------------- configuration


def test_configuration_validates_ranges():
    with pytest.raises(ValueError):
        DecayConfiguration(-0.1, 2.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        DecayConfiguration(2.0, 3.5, 0.0, 0.0)
    with pytest.raises(ValueError):
        DecayConfiguration(2.0, 2.0, 4.0, 0.0)
    with pytest.raises(ValueError):
        DecayConfiguration(2.0, 2.0, 0.0, 7.0)


def test_physical_flag():
    assert DecayConfiguration(2.0, 2.0, 0.0, 0.0).is_physical
    assert not DecayConfiguration(1.0, 1.0, 0.0, 0.0).is_physical
    # opening-angle boundary counts as physical
    assert DecayConfiguration(HALF_PI, HALF_PI, 0.0, 0.0).is_physical


def test_physical_flag_batched():
    cfg = DecayConfiguration(np.array([2.0, 1.0]), np.array([2.0, 1.0]), 0.0, 0.0)
    np.testing.assert_array_equal(cfg.is_physical, [True, False])


# ----------------------------------------------------------- spin orientation


def test_spin_direction_examples():
    assert spin_direction_from_rotation("y", 0.0) == (0.0, 0.0)
    th, ph = spin_direction_from_rotation("y", HALF_PI)
    assert (th, ph) == pytest.approx((HALF_PI, 0.0), abs=1e-15)
    th, ph = spin_direction_from_rotation("x", HALF_PI)
    assert (th, ph) == pytest.approx((HALF_PI, 1.5 * np.pi), abs=1e-14)


def test_spin_direction_stays_in_domain():
    alphas = np.arange(720) * (2.0 * np.pi / 720.0)
    for axis in ("x", "y"):
        th, ph = spin_direction_from_rotation(axis, alphas)
        assert th.min() >= 0.0 and th.max() <= np.pi
        assert ph.min() >= 0.0 and ph.max() < 2.0 * np.pi


def test_spin_direction_rejects_bad_axis():
    with pytest.raises(ValueError):
        spin_direction_from_rotation("z", 0.0)


# --------------------------------------------------------------------- scalar


def test_scalar_support_pattern():
    rng = np.random.default_rng(70)
    cfg = random_configs(rng, 50)
    s = scalar_state(cfg, equal_couplings("scalar"))
    dead = np.abs(s.amp[..., [1, 2, 5, 6]]).max()
    assert dead == 0.0


def test_scalar_factorizes_first_qubit():
    rng = np.random.default_rng(71)
    cfg = random_configs(rng, 20)
    s = scalar_state(cfg, CouplingSet("scalar", 0.3, 1.2, -0.7, 0.4))
    p1 = purity(partial_trace(s, (1,)))
    np.testing.assert_allclose(p1, 1.0, atol=1e-12)
    p23 = purity(partial_trace(s, (2, 3)))
    # remaining pair is a maximally entangled two-qubit state
    np.testing.assert_allclose(p23, 1.0, atol=1e-12)
    rep = full_report(s)
    np.testing.assert_allclose(rep.c23, 1.0, atol=1e-12)


def test_scalar_report_constants():
    rng = np.random.default_rng(72)
    cfg = random_configs(rng, 200)
    g = CouplingSet(
        "scalar",
        rng.standard_normal(),
        rng.standard_normal(),
        rng.standard_normal(),
        rng.standard_normal(),
    )
    rep = full_report(scalar_state(cfg, g))
    for name in ("c12", "c13", "c1_23", "f3"):
        assert np.abs(getattr(rep, name)).max() < 1e-9
    for name in ("c23", "c2_13", "c3_12"):
        np.testing.assert_allclose(getattr(rep, name), 1.0, atol=1e-9)


def test_scalar_coupling_phase_drops_out():
    # rotating either complex coupling by a global phase changes nothing
    rng = np.random.default_rng(73)
    cfg = random_configs(rng, 30)
    base = full_report(scalar_state(cfg, CouplingSet("scalar", 1.0, 0.0, 0.6, -0.8)))
    alpha = 1.2345
    rot = CouplingSet(
        "scalar", np.cos(alpha), np.sin(alpha), 0.6, -0.8
    )
    other = full_report(scalar_state(cfg, rot))
    for name in ("c12", "c13", "c23", "c1_23", "c2_13", "c3_12", "f3"):
        np.testing.assert_allclose(
            getattr(base, name), getattr(other, name), atol=1e-10
        )


# --------------------------------------------------------------------- vector


def test_vector_support_pattern():
    rng = np.random.default_rng(74)
    cfg = random_configs(rng, 50)
    s = vector_state(cfg, CouplingSet("vector", 0.9, -0.2, 0.5, 1.1))
    dead = np.abs(s.amp[..., [0, 3, 4, 7]]).max()
    assert dead == 0.0


def test_vector_first_qubit_pairs_vanish():
    rng = np.random.default_rng(75)
    cfg = random_configs(rng, 200)
    rep = full_report(vector_state(cfg, CouplingSet("vector", 0.8, 0.3, -0.6, 1.0)))
    assert np.abs(rep.c12).max() < 1e-9
    assert np.abs(rep.c13).max() < 1e-9


def test_vector_pipeline_matches_closed_forms():
    rng = np.random.default_rng(76)
    cfg = random_configs(rng, 500)
    g = CouplingSet("vector", 1.3, -0.4, 0.7, 0.9)
    rep = full_report(vector_state(cfg, g))
    c23, c1_23, c2_13 = closed_form_vector(cfg, g)
    np.testing.assert_allclose(rep.c23, c23, atol=1e-9)
    np.testing.assert_allclose(rep.c1_23, c1_23, atol=1e-9)
    np.testing.assert_allclose(rep.c2_13, c2_13, atol=1e-9)
    np.testing.assert_allclose(rep.c3_12, c2_13, atol=1e-9)


def test_vector_monogamy_saturates():
    # with no first-qubit pair entanglement every m_i collapses to c1_23**2
    rng = np.random.default_rng(77)
    cfg = random_configs(rng, 300)
    rep = full_report(vector_state(cfg, CouplingSet("vector", 1.0, 0.6, -0.3, 0.8)))
    target = rep.c1_23**2
    for name in ("m1", "m2", "m3"):
        np.testing.assert_allclose(getattr(rep, name), target, atol=1e-9)


def test_vector_left_coupling_zero_kills_first_cut():
    rng = np.random.default_rng(78)
    cfg = random_configs(rng, 100)
    g = CouplingSet("vector", 0.0, 1.0, 0.7, -0.5)
    rep = full_report(vector_state(cfg, g))
    assert np.abs(rep.c1_23).max() < 1e-9
    assert np.abs(rep.f3).max() < 1e-9
    # the pair 2-3 stays entangled; both routes must agree on its value
    c23, c1_23, _ = closed_form_vector(cfg, g)
    assert np.abs(c1_23).max() < 1e-9
    np.testing.assert_allclose(rep.c23, c23, atol=1e-9)
    assert rep.c23.max() > 0.1


def test_vector_daughter_coupling_zero_kills_pair():
    rng = np.random.default_rng(79)
    cfg = random_configs(rng, 100)
    for g in (
        CouplingSet("vector", 0.9, 0.4, 0.0, 1.0),
        CouplingSet("vector", 0.9, 0.4, 1.0, 0.0),
    ):
        rep = full_report(vector_state(cfg, g))
        assert np.abs(rep.c23).max() < 1e-9


def test_vector_exchange_symmetry_of_daughters():
    # equal daughter couplings make the triangle blind to swapping them
    rng = np.random.default_rng(80)
    n = 200
    t2 = rng.uniform(0.6, np.pi - 0.05, n)
    t3 = np.pi - t2 + rng.uniform(0.05, 0.4, n)
    t3 = np.minimum(t3, np.pi)
    st = rng.uniform(0.0, np.pi, n)
    sp = rng.uniform(0.0, 2.0 * np.pi, n)
    g = CouplingSet("vector", 0.8, -0.5, 0.9, 0.9)
    a = full_report(vector_state(DecayConfiguration(t2, t3, st, sp), g))
    b = full_report(vector_state(DecayConfiguration(t3, t2, st, sp), g))
    np.testing.assert_allclose(a.f3, b.f3, atol=1e-9)


def test_vector_vanishing_amplitude_names_the_node():
    cfg = DecayConfiguration(0.0, 0.0, 1.0, 1.0)
    with pytest.raises(ValueError, match="theta2=0"):
        vector_state(cfg, equal_couplings("vector"))


# --------------------------------------------------------------------- tensor


def test_tensor_support_pattern():
    rng = np.random.default_rng(81)
    cfg = random_configs(rng, 50)
    s = tensor_state(cfg, CouplingSet("tensor", 0.4, 0.9, 1.0, -0.3))
    dead = np.abs(s.amp[..., 1:7]).max()
    assert dead == 0.0


def test_tensor_pipeline_matches_closed_form():
    rng = np.random.default_rng(82)
    cfg = random_configs(rng, 300)
    g = CouplingSet("tensor", 0.7, -0.1, 0.4, 1.2)
    rep = full_report(tensor_state(cfg, g))
    c, f3 = closed_form_tensor(cfg, g)
    for name in ("c1_23", "c2_13", "c3_12"):
        np.testing.assert_allclose(getattr(rep, name), c, atol=1e-9)
    np.testing.assert_allclose(rep.f3, f3, atol=1e-9)
    for name in ("c12", "c13", "c23"):
        assert np.abs(getattr(rep, name)).max() < 1e-9


def test_tensor_transverse_spin_is_maximal():
    # spin along +y: a GHZ-class state at every physical opening angle
    rng = np.random.default_rng(83)
    cfg = random_configs(rng, 200)
    cfg = DecayConfiguration(cfg.theta2, cfg.theta3, HALF_PI, HALF_PI)
    rep = full_report(tensor_state(cfg, equal_couplings("tensor")))
    np.testing.assert_allclose(rep.f3, 1.0, atol=1e-9)


def test_tensor_aligned_spin_equal_angles_is_product():
    cfg = DecayConfiguration(2.0, 2.0, 0.0, 0.0)
    s = tensor_state(cfg, equal_couplings("tensor"))
    assert abs(abs(s.amp[7]) - 1.0) < 1e-15
    rep = full_report(s)
    assert rep.f3 == 0.0
    assert rep.c1_23 == pytest.approx(0.0, abs=1e-12)


def test_tensor_coupling_phase_drops_out():
    rng = np.random.default_rng(84)
    cfg = random_configs(rng, 30)
    base = full_report(tensor_state(cfg, CouplingSet("tensor", 1.0, 0.0, 1.0, 0.0)))
    other = full_report(
        tensor_state(cfg, CouplingSet("tensor", 0.6, 0.8, 1.0, 0.0))
    )
    for name in ("c1_23", "f3"):
        np.testing.assert_allclose(
            getattr(base, name), getattr(other, name), atol=1e-10
        )


# ----------------------------------------------------- shared-angle behaviour


def test_pair_concurrence_ignores_spin_at_equal_couplings():
    rng = np.random.default_rng(85)
    t2, t3 = 1.9, 2.3
    ref = None
    for _ in range(25):
        st = rng.uniform(0.0, np.pi)
        sp = rng.uniform(0.0, 2.0 * np.pi)
        cfg = DecayConfiguration(t2, t3, st, sp)
        rep = full_report(vector_state(cfg, equal_couplings("vector")))
        if ref is None:
            ref = rep.c23
        assert rep.c23 == pytest.approx(ref, abs=1e-9)
