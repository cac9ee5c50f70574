import math

import numpy as np
import pytest

from rqcm.constraint import xi_from_x
from rqcm.minkowski import ComplexFourVector, FourVector, bound_system, general_boost, minkowski_dot
from rqcm.oscillator import (MAX_LEVEL, OscillatorState, QuantumNumbers, degeneracy,
                             hermite, ladder_apply, ladder_apply_explicit,
                             ladder_explicit_4d_value, ladder_explicit_value,
                             nr_spring_constant, oscillator_state, phi_1d,
                             phi_1d_derivative, phi_1d_momentum, psi_bargmann,
                             psi_momentum, psi_position, psi_position_gradient,
                             quantum_numbers_at_level, sigma_n, states_up_to)
from rqcm.transforms import gauss_hermite, rescaled_nodes
from rqcm.verify import finite_difference_gradient4


# ---------------------------------------------------------------------------
# special functions

def test_hermite_values():
    y = np.linspace(-3, 3, 7)
    np.testing.assert_array_equal(hermite(0, y), np.ones(7))
    assert hermite(2, 1.0) == 2.0
    assert hermite(3, 0.5) == -5.0
    with pytest.raises(ValueError):
        hermite(-1, 0.0)


def test_phi_1d_values():
    assert abs(phi_1d(0, 1.0, 0.0) - math.pi ** -0.25) < 1e-15
    assert abs(phi_1d(0, 1.0, 0.0) - 0.7511255444649425) < 1e-15
    assert phi_1d(1, 2.3, 0.0) == 0.0


def test_phi_1d_against_direct_formula():
    rng = np.random.default_rng(30)
    om = 1.7
    xi = rng.uniform(-3, 3, 9)
    for l in range(16):
        direct = ((om / math.pi) ** 0.25 / math.sqrt(2.0 ** l * math.factorial(l))
                  * hermite(l, math.sqrt(om) * xi) * np.exp(-om * xi ** 2 / 2))
        np.testing.assert_allclose(phi_1d(l, om, xi), direct, rtol=1e-12, atol=1e-13)


def test_phi_1d_momentum_against_direct_formula():
    rng = np.random.default_rng(31)
    om = 0.8
    pi_ = rng.uniform(-2, 2, 9)
    for l in range(10):
        direct = ((1.0 / (om * math.pi)) ** 0.25 / math.sqrt(2.0 ** l * math.factorial(l))
                  * hermite(l, pi_ / math.sqrt(om)) * np.exp(-pi_ ** 2 / (2 * om)))
        np.testing.assert_allclose(phi_1d_momentum(l, om, pi_), direct, rtol=1e-12, atol=1e-13)


def test_phi_1d_validation():
    with pytest.raises(ValueError):
        phi_1d(0, -1.0, 0.0)
    with pytest.raises(ValueError):
        phi_1d(MAX_LEVEL + 1, 1.0, 0.0)


def test_phi_1d_normalisation_and_orthogonality():
    om = 1.3
    rule = gauss_hermite(64)
    pts, eff = rescaled_nodes(rule, om)
    for k in range(11):
        for l in range(k, 11):
            val = float(np.sum(eff * phi_1d(k, om, pts) * phi_1d(l, om, pts)))
            want = 1.0 if k == l else 0.0
            tol = 1e-10 if k == l else 1e-9
            assert abs(val - want) <= tol, (k, l, val)


def test_phi_1d_derivative_vs_finite_difference():
    om = 1.9
    h = 1e-6
    for l in (0, 1, 4, 9):
        for xi in (-1.3, 0.0, 0.4, 2.2):
            fd = (phi_1d(l, om, xi + h) - phi_1d(l, om, xi - h)) / (2 * h)
            assert abs(phi_1d_derivative(l, om, xi) - fd) < 1e-8


# ---------------------------------------------------------------------------
# quantum numbers, spectrum

def test_quantum_numbers_validation():
    q = QuantumNumbers(1, 2, 3)
    assert q.n == 6
    with pytest.raises(ValueError):
        QuantumNumbers(-1, 0, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(0, MAX_LEVEL + 1, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(0.5, 0, 0)


def test_degeneracy_matches_enumeration():
    for n in range(11):
        assert degeneracy(n) == len(quantum_numbers_at_level(n)) == (n + 1) * (n + 2) // 2


def test_sigma_n():
    assert sigma_n(1.0, 0) == 1.5
    assert sigma_n(2.0, 3) == 9.0
    for n in range(8):
        assert sigma_n(1.7, n + 1) - sigma_n(1.7, n) == pytest.approx(1.7, abs=1e-13)
    with pytest.raises(ValueError):
        sigma_n(-1.0, 0)
    with pytest.raises(ValueError):
        sigma_n(1.0, -1)


def test_oscillator_state_factory_and_validation():
    st = oscillator_state((1, 0, 2), 1.5, 1.0, 2.0, (0.1, 0.0, -0.2))
    assert st.sigma == sigma_n(1.5, 3)
    np.testing.assert_allclose(st.sys.velocity, [0.1, 0.0, -0.2], atol=1e-12)
    bad_sys = bound_system(1.0, 2.0, 0.123)
    with pytest.raises(ValueError):
        OscillatorState(QuantumNumbers(0, 0, 0), 1.5, bad_sys)


def test_states_up_to_count():
    states = states_up_to(4, 1.0, 1.0, 1.3)
    assert len(states) == sum(degeneracy(n) for n in range(5)) == 35


# ---------------------------------------------------------------------------
# wave functions

def test_psi_position_ground_value():
    om = 1.0
    st = oscillator_state((0, 0, 0), om, 1.0, 1.0)
    val = psi_position(st, FourVector(0, 0, 0, 0), FourVector(0, 0, 0, 0))
    assert abs(val - (om / math.pi) ** 0.75) < 1e-15


def test_psi_position_phase_modulus_independent_of_X():
    st = oscillator_state((1, 0, 1), 0.9, 1.0, 1.2, (0.3, 0.0, 0.1))
    x = FourVector(0.5, -0.3, 0.2, 0.6)
    X = FourVector(1.0, 2.0, -0.5, 0.7)
    a = psi_position(st, x, X)
    b = psi_position(st, x)
    assert abs(abs(a) - abs(b)) < 1e-15
    phase = complex(np.exp(1j * minkowski_dot(st.sys.P, X)))
    assert abs(a - b * phase) < 1e-14


def test_psi_position_frame_equivalence():
    om = 1.1
    rng = np.random.default_rng(32)
    rest = oscillator_state((2, 1, 0), om, 1.0, 1.4)
    for _ in range(20):
        v = rng.uniform(-1, 1, 3)
        v *= rng.uniform(0, 0.9) / np.linalg.norm(v)
        moving = OscillatorState(rest.q, om, rest.sys.boosted(v))
        x = FourVector.from_components(rng.uniform(-2, 2, 4))
        X = FourVector.from_components(rng.uniform(-2, 2, 4))
        a = psi_position(rest, x, X)
        b = psi_position(moving, general_boost(x, v), general_boost(X, v))
        assert abs(a - b) <= 1e-10 * max(abs(a), 1e-3)


def test_psi_momentum_values():
    om = 1.7
    st = oscillator_state((0, 0, 0), om, 1.0, 1.0)
    val = psi_momentum(st, FourVector(0, 0, 0, 0), FourVector(0, 0, 0, 0))
    assert abs(val - (1.0 / (om * math.pi)) ** 0.75) < 1e-15
    st1 = oscillator_state((1, 0, 0), om, 1.0, 1.0)
    assert psi_momentum(st1, FourVector(0, 0.4, -0.2, 0.9)) == 0.0


def test_psi_bargmann_values():
    st0 = oscillator_state((0, 0, 0), 1.2, 1.0, 1.1, (0.2, 0.1, 0.0))
    a = ComplexFourVector(0.3 + 0.4j, -1.0, 0.2j, 0.5)
    X = FourVector(0.3, 0.0, -0.2, 1.0)
    phase = complex(np.exp(1j * minkowski_dot(st0.sys.P, X)))
    assert abs(psi_bargmann(st0, a, X) - phase) < 1e-14

    st1 = oscillator_state((1, 0, 0), 1.2, 1.0, 1.0)
    z = 0.7 - 0.2j
    got = psi_bargmann(st1, ComplexFourVector(z, 0, 0, 0))
    assert abs(got - z) < 1e-15


def test_psi_position_gradient_vs_finite_difference():
    st = oscillator_state((1, 2, 0), 1.3, 1.0, 1.5, (0.2, -0.4, 0.1))
    rng = np.random.default_rng(33)
    for _ in range(10):
        x = FourVector.from_components(rng.uniform(-1.5, 1.5, 4))
        got = psi_position_gradient(st, x)
        fd = finite_difference_gradient4(lambda pt: psi_position(st, pt), x)
        np.testing.assert_allclose(got, fd, atol=1e-8)


# ---------------------------------------------------------------------------
# ladder operators

def test_ladder_apply_coefficients():
    st = oscillator_state((1, 0, 0), 1.0, 1.0, 1.0)
    coeff, lowered = ladder_apply("lower", 1, st)
    assert coeff == 1.0
    assert lowered.q.as_tuple() == (0, 0, 0)
    assert lowered.sigma == sigma_n(1.0, 0)

    coeff, raised = ladder_apply("raise", 2, lowered)
    assert coeff == 1.0
    assert raised.q.as_tuple() == (0, 1, 0)

    coeff, annihilated = ladder_apply("lower", 3, lowered)
    assert coeff == 0.0 and annihilated is None


def test_ladder_round_trip_number_operator():
    st = oscillator_state((2, 3, 1), 1.0, 1.0, 1.3)
    for axis, li in zip((1, 2, 3), st.q.as_tuple()):
        c_up, raised = ladder_apply("raise", axis, st)
        c_down, back = ladder_apply("lower", axis, raised)
        assert c_up * c_down == pytest.approx(li + 1, abs=1e-13)
        assert back.q == st.q and back.sigma == st.sigma


def test_ladder_validation():
    st = oscillator_state((0, 0, 0), 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        ladder_apply("up", 1, st)
    with pytest.raises(ValueError):
        ladder_apply("raise", 4, st)


def test_ladder_explicit_rest_frame_is_schrodinger_form():
    # with P = 0 and Omega = m_r w the operator coefficients match the
    # Schroedinger ladder exactly
    m1, m2, w = 1.0, 1.3, 0.9
    om = nr_spring_constant(m1, m2, w)
    assert abs(om - (m1 * m2 / (m1 + m2)) * w) < 1e-15
    st = oscillator_state((1, 1, 0), om, m1, m2)
    rng = np.random.default_rng(34)
    for _ in range(10):
        x = FourVector.from_components(rng.uniform(-1.5, 1.5, 4))
        value = psi_position(st, x)
        grad = psi_position_gradient(st, x)
        for direction, sgn in (("raise", +1), ("lower", -1)):
            got = ladder_explicit_value(direction, 1, om, st.sys, x, value, grad)
            schrod = (-sgn * grad[0] + om * x.c1 * value) / math.sqrt(2 * om)
            assert got == schrod


def test_ladder_explicit_matches_coefficients_boosted():
    rng = np.random.default_rng(35)
    st = oscillator_state((1, 0, 2), 1.0, 1.0, 1.3, (0.4, -0.3, 0.55))
    for direction in ("lower", "raise"):
        for axis in (1, 2, 3):
            coeff, new_state = ladder_apply(direction, axis, st)
            for _ in range(6):
                x = FourVector.from_components(rng.uniform(-1.5, 1.5, 4))
                got = ladder_apply_explicit(direction, axis, st, x)
                want = 0.0 if new_state is None else coeff * psi_position(new_state, x)
                assert abs(got - want) <= 1e-12


def test_ladder_explicit_finite_difference_and_annihilation():
    rng = np.random.default_rng(36)
    ground = oscillator_state((0, 0, 0), 1.0, 1.0, 1.3, (0.0, 0.6, 0.0))
    excited = oscillator_state((1, 0, 0), 1.0, 1.0, 1.3, (0.0, 0.6, 0.0))
    coeff, lowered = ladder_apply("lower", 1, excited)
    for _ in range(20):
        x = FourVector.from_components(rng.uniform(-1.5, 1.5, 4))
        got0 = ladder_apply_explicit("lower", 2, ground, x,
                                     gradient=finite_difference_gradient4)
        assert abs(got0) <= 1e-8
        got1 = ladder_apply_explicit("lower", 1, excited, x,
                                     gradient=finite_difference_gradient4)
        want = coeff * psi_position(lowered, x)
        assert abs(got1 - want) <= 1e-5


def test_ladder_4d_decomposition_agrees():
    rng = np.random.default_rng(37)
    st = oscillator_state((2, 1, 1), 1.2, 1.0, 1.6, (0.3, 0.2, -0.5))
    for _ in range(10):
        x = FourVector.from_components(rng.uniform(-1.5, 1.5, 4))
        value = psi_position(st, x)
        grad = psi_position_gradient(st, x)
        for direction in ("lower", "raise"):
            for axis in (1, 2, 3):
                a = ladder_explicit_value(direction, axis, st.omega, st.sys, x, value, grad)
                b = ladder_explicit_4d_value(direction, axis, st.omega, st.sys, x, value, grad)
                assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)


# ---------------------------------------------------------------------------
# field equations

def test_cm_wave_equation_exact_and_finite_difference():
    st = oscillator_state((1, 0, 0), 1.0, 1.0, 1.2, (0.0, 0.0, 0.6))
    sys = st.sys
    # the plane-wave phase satisfies the equation identically on shell
    assert abs(-minkowski_dot(sys.P, sys.P) - sys.M0 ** 2) <= 1e-12 * sys.M0 ** 2

    x = FourVector(0.3, -0.2, 0.5, 0.1)
    base = psi_position(st, x)
    phase = lambda X: complex(np.exp(1j * minkowski_dot(sys.P, X))) * base
    X0 = FourVector(0.7, -1.1, 0.4, 0.9)
    lap = 0.0
    for mu in range(4):
        h = 1e-4 * max(1.0, abs(X0.components[mu]))
        up = X0.components.copy(); up[mu] += h
        dn = X0.components.copy(); dn[mu] -= h
        d2 = (phase(FourVector.from_components(up)) - 2 * phase(X0)
              + phase(FourVector.from_components(dn))) / h ** 2
        lap += d2 if mu < 3 else -d2
    want = sys.M0 ** 2 * phase(X0)
    assert abs(lap - want) <= 1e-6 * abs(want)


def test_transversality_condition():
    # P^mu d_mu psi = 0 pointwise for the internal factor, finite differences
    rng = np.random.default_rng(38)
    st = oscillator_state((1, 1, 0), 1.0, 1.0, 1.4, (0.5, -0.3, 0.4))
    P = st.sys.P
    for _ in range(100):
        x = FourVector.from_components(rng.uniform(-1.5, 1.5, 4))
        grad = finite_difference_gradient4(lambda pt: psi_position(st, pt), x)
        resid = abs(P.spatial @ grad[:3] + P.c4 * grad[3])
        scale = max(np.linalg.norm(P.components) * np.linalg.norm(np.abs(grad)), 1e-3)
        assert resid <= 1e-5 * scale


def test_internal_equation_analytic_rest_frame():
    from rqcm.verify import run_pde_suite
    report = run_pde_suite(points_per_state=10, mode="analytic", max_n=4)
    assert report.passed, report.max_rel_err
    assert report.max_rel_err <= 1e-10
