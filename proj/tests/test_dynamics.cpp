#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "jcpurity/dynamics.hpp"

using namespace jcpurity;

namespace {

constexpr double kPi = std::numbers::pi;

double tan_phi_of(const BlochFourVector& v) {
    return v.vec_norm() / v.r0;
}

}  // namespace

TEST_CASE("poisson_weights") {
    SUBCASE("alpha = 0 puts all mass at n = 0") {
        const FockBasis b = poisson_weights(0.0);
        REQUIRE(b.weights.size() == 1);
        CHECK(b.weights[0] == 1.0);
        CHECK(b.trunc.n_max == 0);
    }

    SUBCASE("alpha = 1 head weight and floor") {
        const FockBasis b = poisson_weights(1.0);
        CHECK(b.weights[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
        CHECK(b.trunc.n_max == 32);
        CHECK(b.weights.size() == 33);
    }

    SUBCASE("alpha = 7 truncation index") {
        // cumulative Poisson(49) tail: smallest n with mass >= 1 - 1e-12,
        // cross-checked against a 40-digit arbitrary-precision sum.
        const FockBasis b = poisson_weights(7.0, 1e-12);
        CHECK(b.trunc.n_max == 106);
        const double mass =
            std::accumulate(b.weights.begin(), b.weights.end(), 0.0);
        CHECK(mass >= 1.0 - 1e-12);
        // spot-check the closed form P_n = e^{-49} 49^n / n!
        CHECK(b.weights[49] ==
              doctest::Approx(std::exp(-49.0 + 49.0 * std::log(49.0) -
                                       std::lgamma(50.0)))
                  .epsilon(1e-12));
    }

    SUBCASE("large alpha uses the log-space path") {
        const FockBasis b = poisson_weights(30.0, 1e-12);
        const double mass =
            std::accumulate(b.weights.begin(), b.weights.end(), 0.0);
        CHECK(std::abs(mass - 1.0) <= 1e-11);
    }

    SUBCASE("hard cap raises NonConvergent") {
        CHECK_THROWS_AS(poisson_weights(7.0, 1e-12, 10), NonConvergent);
    }

    SUBCASE("argument validation") {
        CHECK_THROWS(poisson_weights(-1.0));
        CHECK_THROWS(poisson_weights(1.0, 0.0));
    }
}

TEST_CASE("jc_coefficients") {
    ModelParams p;
    p.g = 1.0;

    p.beta = 0.0;
    auto c = jc_coefficients(4, p);
    CHECK(c.rabi == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c.c == 0.0);
    CHECK(c.s == doctest::Approx(1.0).epsilon(1e-15));

    p.beta = 3.0;
    c = jc_coefficients(4, p);
    CHECK(c.rabi == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(c.c == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(c.s == doctest::Approx(0.8).epsilon(1e-15));

    p.beta = 2.0;
    c = jc_coefficients(0, p);
    CHECK(c.rabi == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.c == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.s == 0.0);

    // degenerate limit convention
    p.beta = 0.0;
    c = jc_coefficients(0, p);
    CHECK(c.rabi == 0.0);
    CHECK(c.c == 1.0);
    CHECK(c.s == 0.0);
}

TEST_CASE("ajc_coefficients") {
    ModelParams p;
    p.g = 1.0;

    p.beta = 1.0;
    p.f = 1.0;
    auto c = ajc_coefficients(1, p);
    CHECK(c.rabi == doctest::Approx(std::sqrt(3.25)).epsilon(1e-15));
    CHECK(c.c == doctest::Approx(1.5 / std::sqrt(3.25)).epsilon(1e-15));
    CHECK(c.s == doctest::Approx(1.0 / std::sqrt(3.25)).epsilon(1e-15));
    CHECK(c.c * c.c + c.s * c.s == doctest::Approx(1.0).epsilon(1e-15));

    p.beta = 0.0;
    p.f = 0.0;
    c = ajc_coefficients(1, p);
    CHECK(c.rabi == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.c == 0.0);
    CHECK(c.s == doctest::Approx(1.0).epsilon(1e-15));

    c = ajc_coefficients(0, p);
    CHECK(c.rabi == 0.0);
    CHECK(c.c == 1.0);
    CHECK(c.s == 0.0);
}

TEST_CASE("per-index unitarity c^2 + s^2 = 1") {
    ModelParams p;
    for (double beta : {-150.0, -2.0, 0.0, 0.5, 60.0, 200.0}) {
        for (double f : {0.0, 1e-7, 3.0, 100.0}) {
            p.beta = beta;
            p.f = f;
            for (int n = 1; n <= 200; n += 13) {
                const auto jc = jc_coefficients(n, p);
                CHECK(std::abs(jc.c * jc.c + jc.s * jc.s - 1.0) <= 1e-12);
                const auto ajc = ajc_coefficients(n, p);
                CHECK(std::abs(ajc.c * ajc.c + ajc.s * ajc.s - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("bloch_jc analytic anchors") {
    ModelParams p;
    p.model = Model::JC;

    SUBCASE("tau = 0 is the pure ground state") {
        p.alpha = 7.0;
        const FockBasis b = poisson_weights(p.alpha);
        const BlochFourVector v = bloch_jc(p, 0.0, b);
        CHECK(v.r0 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v.r1 == 0.0);
        CHECK(v.r2 == 0.0);
        CHECK(v.r3 == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("vacuum + ground state is JC-inert") {
        p.alpha = 0.0;
        p.beta = 0.0;
        const FockBasis b = poisson_weights(0.0);
        for (double tau : {0.1, 1.0, 7.3, 40.0}) {
            const BlochFourVector v = bloch_jc(p, tau, b);
            CHECK(std::abs(v.r0 - 1.0) <= 1e-14);
            CHECK(std::abs(v.r3 + 1.0) <= 1e-14);
            CHECK(std::abs(v.r1) <= 1e-14);
            CHECK(std::abs(v.r2) <= 1e-14);
        }
    }

    SUBCASE("mid-collapse purity revival near tau = pi*alpha") {
        p.alpha = 7.0;
        p.beta = 0.0;
        p.f = 1e-7;
        const FockBasis b = poisson_weights(7.0);
        CHECK(tan_phi_of(bloch_jc(p, 22.0, b)) >= 0.9);
    }
}

TEST_CASE("bloch_ajc analytic anchors") {
    ModelParams p;
    p.model = Model::AJC;
    p.beta = 0.0;
    p.f = 0.0;

    SUBCASE("tau = 0 is the pure ground state") {
        p.alpha = 7.0;
        const FockBasis b = poisson_weights(p.alpha);
        const BlochFourVector v = bloch_ajc(p, 0.0, b);
        CHECK(v.r3 == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("vacuum Rabi cycle |g0> <-> |e1>") {
        p.alpha = 0.0;
        const FockBasis b = poisson_weights(0.0);
        for (int i = 0; i < 60; ++i) {
            const double tau = i * 0.11;
            const BlochFourVector v = bloch_ajc(p, tau, b);
            CHECK(std::abs(v.r3 + std::cos(2.0 * tau)) <= 1e-12);
            CHECK(std::abs(v.r1) <= 1e-14);
            CHECK(std::abs(v.r2) <= 1e-14);
        }
        // maximally entangled at tau = pi/4
        const BlochFourVector quarter = bloch_ajc(p, kPi / 4.0, b);
        CHECK(std::abs(quarter.r3) <= 1e-12);
        // pure excited state at tau = pi/2
        const BlochFourVector half = bloch_ajc(p, kPi / 2.0, b);
        CHECK(half.r3 == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("JC purity is invariant under the free-evolution modulation f") {
    ModelParams lo, hi;
    lo.model = hi.model = Model::JC;
    lo.alpha = hi.alpha = 7.0;
    lo.f = 1e-7;
    hi.f = 50.0;
    const FockBasis b = poisson_weights(7.0);
    for (int i = 0; i <= 100; ++i) {
        const double tau = 0.5 * i;
        const double norm_lo = bloch_jc(lo, tau, b).vec_norm();
        const double norm_hi = bloch_jc(hi, tau, b).vec_norm();
        CHECK(std::abs(norm_lo - norm_hi) <= 1e-12);
    }
}

TEST_CASE("joint_amplitudes") {
    SUBCASE("tau = 0 reproduces the coherent superposition") {
        ModelParams p;
        p.alpha = 2.0;
        const FockBasis b = poisson_weights(2.0);
        for (Model m : {Model::JC, Model::AJC}) {
            p.model = m;
            const JointAmplitudes amps = joint_amplitudes(p, 0.0, b);
            for (int n = 0; n <= b.trunc.n_max; ++n) {
                CHECK(std::abs(amps.ground[n] -
                               Complex(std::sqrt(b.weights[n]))) <= 1e-14);
                CHECK(std::abs(amps.excited[n]) == 0.0);
            }
        }
    }

    SUBCASE("aJC vacuum: coefficient of |e>|1> is -i sin(tau)") {
        ModelParams p;
        p.model = Model::AJC;
        p.alpha = 0.0;
        p.beta = 0.0;
        p.f = 0.0;
        const FockBasis b = poisson_weights(0.0);
        for (double tau : {0.3, 1.1, 2.7}) {
            const JointAmplitudes amps = joint_amplitudes(p, tau, b);
            CHECK(std::abs(amps.excited[1] - Complex(0.0, -std::sin(tau))) <=
                  1e-14);
            CHECK(std::abs(amps.ground[0] - Complex(std::cos(tau), 0.0)) <=
                  1e-14);
        }
    }

    SUBCASE("norm stays 1 deep into the evolution") {
        ModelParams p;
        p.alpha = 7.0;
        const FockBasis b = poisson_weights(7.0, 1e-12);
        for (Model m : {Model::JC, Model::AJC}) {
            p.model = m;
            const JointAmplitudes amps = joint_amplitudes(p, 30.0, b);
            double norm_sq = 0.0;
            for (const auto& a : amps.ground) norm_sq += std::norm(a);
            for (const auto& a : amps.excited) norm_sq += std::norm(a);
            CHECK(std::abs(norm_sq - 1.0) <= 1e-11);
        }
    }
}

TEST_CASE("undersized weight tables raise TruncationError with tau attached") {
    ModelParams p;
    p.alpha = 7.0;
    FockBasis crippled = poisson_weights(7.0);
    crippled.weights.resize(11);
    crippled.trunc.n_max = 10;  // drops most of the Poisson(49) mass
    try {
        bloch_jc(p, 1.5, crippled);
        FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
        CHECK(e.tau == 1.5);
    }
    p.model = Model::AJC;
    CHECK_THROWS_AS(bloch_ajc(p, 1.5, crippled), TruncationError);
    CHECK_THROWS_AS(joint_amplitudes(p, 1.5, crippled), TruncationError);
}
