#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "jcpurity/scan.hpp"

using namespace jcpurity;

TEST_CASE("run_scan grid structure") {
    ModelParams p;
    p.alpha = 1.0;
    const auto records = run_scan(p, {1.0, 1});
    REQUIRE(records.size() == 2);
    CHECK(records[0].tau == 0.0);
    CHECK(records[1].tau == 1.0);
    CHECK(records[0].report.tan_phi == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(records[0].report.excitation == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("aJC vacuum Rabi scan hits full excitation at tau = pi/2") {
    ModelParams p;
    p.model = Model::AJC;
    p.alpha = 0.0;
    p.beta = 0.0;
    p.f = 0.0;
    const auto records = run_scan(p, {std::numbers::pi, 4});
    REQUIRE(records.size() == 5);
    CHECK(records[2].tau == doctest::Approx(std::numbers::pi / 2));
    CHECK(records[2].report.excitation == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scans are deterministic") {
    ModelParams p;
    p.alpha = 3.0;
    p.beta = 1.5;
    const TimeGrid grid{10.0, 200};
    const auto a = run_scan(p, grid);
    const auto b = run_scan(p, grid);
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(ScanRecord)) == 0);
}

TEST_CASE("run_sweep") {
    ModelParams base;
    base.model = Model::JC;
    base.alpha = 7.0;
    base.f = 1e-7;
    const TimeGrid grid{20.0, 400};

    SUBCASE("single value equals run_scan") {
        const auto swept = run_sweep(base, SweepParam::Beta, {0.0}, grid);
        REQUIRE(swept.size() == 1);
        CHECK(swept[0].first == 0.0);
        const auto direct = run_scan(base, grid);
        REQUIRE(swept[0].second.size() == direct.size());
        CHECK(std::memcmp(swept[0].second.data(), direct.data(),
                          direct.size() * sizeof(ScanRecord)) == 0);
    }

    SUBCASE("large detuning suppresses excitation") {
        const auto swept = run_sweep(base, SweepParam::Beta, {0.0, 60.0}, grid);
        double max0 = 0.0, max60 = 0.0;
        for (const auto& r : swept[0].second) {
            max0 = std::max(max0, r.report.excitation);
        }
        for (const auto& r : swept[1].second) {
            max60 = std::max(max60, r.report.excitation);
        }
        CHECK(max60 < max0);
    }

    SUBCASE("f sweep leaves the JC purity series untouched") {
        const auto swept = run_sweep(base, SweepParam::F, {1e-7, 50.0}, grid);
        const auto& lo = swept[0].second;
        const auto& hi = swept[1].second;
        REQUIRE(lo.size() == hi.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            CHECK(std::abs(lo[i].report.tan_phi - hi[i].report.tan_phi) <=
                  1e-12);
        }
    }

    SUBCASE("empty value list is rejected") {
        CHECK_THROWS(run_sweep(base, SweepParam::Beta, {}, grid));
    }
}
