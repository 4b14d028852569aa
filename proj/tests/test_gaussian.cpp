#include "thermolen/errors.hpp"
#include "thermolen/gaussian.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace thermolen;

namespace {
OscillatorParams fig1_params() {
    OscillatorParams p;
    p.beta = 1.2;
    p.omega0 = 0.9;
    p.omega1 = 0.5;
    return p;
}
} // namespace

TEST_CASE("thermal state moments") {
    OscillatorParams p = fig1_params();
    GaussianState s = equilibrium_state(p, 0.9);
    CHECK(s.var_xx == doctest::Approx(1.1269150427792032614).epsilon(1e-14));
    CHECK(s.cov_xp == 0.0);
    const double c = 1.0 / std::tanh(0.54);
    CHECK(s.det_a() == doctest::Approx(c * c).epsilon(1e-13));
    CHECK_NOTHROW(s.validate());
    CHECK_THROWS_AS(equilibrium_state(p, -1.0), InvalidParamsError);
}

TEST_CASE("state validation catches sub-Heisenberg covariances") {
    GaussianState s;
    s.var_xx = 0.2;
    s.var_pp = 0.2; // product 0.04 < 0.25
    CHECK_THROWS_AS(s.validate(), InvalidStateError);
    s.var_pp = 2.0;
    CHECK_NOTHROW(s.validate());
    s.cov_xp = 0.62; // determinant dips below hbar^2/4 again
    CHECK_THROWS_AS(s.validate(), InvalidStateError);
}

TEST_CASE("driven covariances equal the symplectically propagated ones") {
    OscillatorParams p = fig1_params();
    for (const Protocol& proto :
         {Protocol::linear(3.0), Protocol::smoothstep(5.0), Protocol::sudden(1.0)}) {
        Trajectory t = integrate_trajectory(p, proto, 1e-12);
        GaussianState s = nonequilibrium_state(p, t);
        const oracles::Covariances ref = oracles::covariance_by_symplectic(p, t);
        CHECK(s.var_xx == doctest::Approx(ref.var_xx).epsilon(1e-12));
        CHECK(s.var_pp == doctest::Approx(ref.var_pp).epsilon(1e-12));
        CHECK(s.cov_xp == doctest::Approx(ref.cov_xp).epsilon(1e-11));
        // Unitary evolution cannot change the purity.
        CHECK(s.det_a() == doctest::Approx(equilibrium_state(p, 0.9).det_a()).epsilon(1e-11));
        CHECK_NOTHROW(s.validate());
    }
}

TEST_CASE("fidelity of a state with itself is one") {
    OscillatorParams p = fig1_params();
    GaussianState s = equilibrium_state(p, 0.9);
    CHECK(gaussian_fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-14));
    GaussianState g = equilibrium_state(p, 0.5);
    CHECK(gaussian_fidelity(g, g) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fidelity is symmetric and bounded") {
    OscillatorParams p = fig1_params();
    GaussianState a = equilibrium_state(p, 0.9);
    GaussianState b = equilibrium_state(p, 0.5);
    const double f = gaussian_fidelity(a, b);
    CHECK(f == doctest::Approx(gaussian_fidelity(b, a)).epsilon(1e-15));
    CHECK(f > 0.0);
    CHECK(f <= 1.0);
}

TEST_CASE("covariance route agrees with the hyperbolic closed form") {
    OscillatorParams p = fig1_params();
    for (const Protocol& proto :
         {Protocol::sudden(0.0), Protocol::linear(2.0), Protocol::smoothstep(4.0)}) {
        Trajectory t = integrate_trajectory(p, proto, 1e-12);
        GaussianState rho = nonequilibrium_state(p, t);
        GaussianState eq = equilibrium_state(p, p.omega1);
        const double via_cov = gaussian_fidelity(rho, eq);
        const double via_q = closed_form_fidelity(p, adiabaticity(p, t));
        CHECK(via_cov == doctest::Approx(via_q).epsilon(1e-11));
    }
}

TEST_CASE("closed-form fidelity reference values") {
    OscillatorParams p = fig1_params();
    CHECK(closed_form_fidelity(p, 1.2) ==
          doctest::Approx(0.85443954430454262996).epsilon(1e-14));
    CHECK(closed_form_fidelity(p, 2.0) ==
          doctest::Approx(0.66694094977666797953).epsilon(1e-14));
    CHECK(closed_form_fidelity(p, 4.0) ==
          doctest::Approx(0.44834917487400473827).epsilon(1e-14));
    CHECK_THROWS_AS(closed_form_fidelity(p, 0.5), DomainError);
}

TEST_CASE("fidelity decreases with the degree of nonadiabaticity") {
    OscillatorParams p = fig1_params();
    double prev = closed_form_fidelity(p, 1.0);
    for (double q : {1.5, 2.0, 3.0, 5.0, 10.0}) {
        const double f = closed_form_fidelity(p, q);
        CHECK(f < prev);
        prev = f;
    }
}

TEST_CASE("cold and hot limits of the fidelity") {
    OscillatorParams p = fig1_params();
    SUBCASE("zero temperature approaches the ground-state persistence") {
        p.beta = 200.0 / (p.hbar * p.omega0);
        const double f = closed_form_fidelity(p, 2.0);
        CHECK(oracles::rel_err(f, std::sqrt(2.0 / 3.0)) < 1e-3);
    }
    SUBCASE("high temperature approaches the classical overlap") {
        p.beta = 0.01 / (p.hbar * p.omega0);
        const double q = 2.0;
        const double w0 = p.omega0, w1 = p.omega1;
        const double classical = 4.0 * w0 * w1 / (w0 * w0 + 2.0 * q * w0 * w1 + w1 * w1);
        CHECK(oracles::rel_err(closed_form_fidelity(p, q), classical) < 1e-3);
    }
}

TEST_CASE("fidelity rejects inconsistent inputs") {
    OscillatorParams p = fig1_params();
    GaussianState a = equilibrium_state(p, 0.9);
    GaussianState b = a;
    b.hbar = 2.0;
    CHECK_THROWS_AS(gaussian_fidelity(a, b), InvalidStateError);
    GaussianState squeezed;
    squeezed.var_xx = 0.1;
    squeezed.var_pp = 0.1;
    CHECK_THROWS_AS(gaussian_fidelity(a, squeezed), InvalidStateError);
    Trajectory empty;
    CHECK_THROWS_AS(nonequilibrium_state(p, empty), DomainError);
}
