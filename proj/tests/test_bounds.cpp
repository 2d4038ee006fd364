// Copyright 2026 The primelab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "primelab/bounds.hpp"

using namespace primelab;

namespace {
constexpr uint64_t kTenTo16 = UINT64_C(10000000000000000);
constexpr uint64_t kRichstein = UINT64_C(400000000000000);  // 4e14
}  // namespace

TEST_CASE("required exponent reproduces the headline value") {
    // 3.79220 to four decimals; the published rounding is 3.7921
    double r = required_exponent(kTenTo16, 7194.0);
    CHECK(r == doctest::Approx(3.7922005659).epsilon(1e-9));
    CHECK(std::abs(r - 3.7921) < 0.0005);
}

TEST_CASE("required exponent identity case gives r = 1") {
    // choose beta with ln(ln beta) = ln(alpha): alpha = 20, log10(beta) = 20/ln 10
    double r = required_exponent(20, 20.0 / std::numbers::ln10);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("required exponent at the 1e43000-scale bound") {
    // frozen from a high-precision evaluation of ln(1e16)/ln(43000 ln 10)
    double r = required_exponent(kTenTo16, 43000.0);
    CHECK(r == doctest::Approx(3.2027645339).epsilon(1e-9));
}

TEST_CASE("required exponent round trip recovers alpha") {
    for (uint64_t alpha : {UINT64_C(1000), UINT64_C(1000003), kRichstein, kTenTo16}) {
        for (double log10_beta : {100.0, 7194.0, 43000.0}) {
            double r = required_exponent(alpha, log10_beta);
            double back = std::pow(ln_beta(log10_beta), r);
            CAPTURE(alpha);
            CAPTURE(log10_beta);
            CHECK(std::abs(back - static_cast<double>(alpha)) / static_cast<double>(alpha) <
                  1e-9);
        }
    }
}

TEST_CASE("required exponent is monotone in both arguments") {
    double base = required_exponent(kTenTo16, 7194.0);
    CHECK(required_exponent(kTenTo16, 7195.0) < base);
    CHECK(required_exponent(kTenTo16, 43000.0) < base);
    CHECK(required_exponent(kTenTo16 / 10, 7194.0) < base);
    CHECK(required_exponent(kRichstein, 7194.0) < base);
}

TEST_CASE("required exponent rejects tiny beta") {
    // ln(ln(beta)) <= 1 is out of domain
    CHECK_THROWS_AS(required_exponent(100, 1.0), std::domain_error);
    CHECK_THROWS_AS(required_exponent(2, 7194.0), std::domain_error);
}

TEST_CASE("cramer gap estimate squares ln(beta)") {
    double e7194 = cramer_gap_estimate(7194.0);
    CHECK(e7194 == doctest::Approx(2.7439250492e8).epsilon(1e-9));
    CHECK(e7194 < 274400000.0);
    CHECK(e7194 > 2.740e8);
    CHECK(e7194 < 2.745e8);

    // beta = e: log10(e) squares to exactly 1
    CHECK(cramer_gap_estimate(std::numbers::log10e) == doctest::Approx(1.0).epsilon(1e-12));

    // the 9715-exponent variant evaluates to about 5.004e8
    CHECK(cramer_gap_estimate(9715.0) == doctest::Approx(5.0039963849e8).epsilon(1e-9));

    CHECK_THROWS_AS(cramer_gap_estimate(0.0), std::domain_error);
}

TEST_CASE("worst case condition compares alpha against 10 ln^2 beta") {
    auto s = make_scenario(kTenTo16, 7194.0);
    auto wc = worst_case_condition(s);
    CHECK(wc.rhs == doctest::Approx(2.7439250492e9).epsilon(1e-9));
    CHECK(std::abs(wc.rhs - 2.744e9) / 2.744e9 < 0.001);
    CHECK(wc.holds);

    // consistency: rhs is exactly ten estimates
    CHECK(wc.rhs == 10.0 * cramer_gap_estimate(7194.0));

    auto s_small = make_scenario(UINT64_C(1000000000), 7194.0);
    CHECK_FALSE(worst_case_condition(s_small).holds);  // 1e9 < 2.744e9

    auto s_tiny = make_scenario(7, 7194.0);
    CHECK_FALSE(worst_case_condition(s_tiny).holds);
}

TEST_CASE("scenario report assembles the chain") {
    auto rep = scenario_report(kTenTo16, 7194.0);
    CHECK(rep.scenario.r == doctest::Approx(3.7922005659).epsilon(1e-9));
    CHECK(rep.holds);
    CHECK(rep.ln2_beta == doctest::Approx(2.7439250492e8).epsilon(1e-9));
    CHECK(rep.rhs == 10.0 * rep.ln2_beta);
    CHECK(rep.summary.find("3.7922") != std::string::npos);
    CHECK(rep.summary.find("yes") != std::string::npos);

    // frozen from a high-precision evaluation of ln(4e14)/ln(7194 ln 10)
    auto richstein = scenario_report(kRichstein, 7194.0);
    CHECK(richstein.scenario.r == doctest::Approx(3.4608712601).epsilon(1e-9));

    // degenerate beta <= alpha never produces a report
    CHECK_THROWS_AS(scenario_report(kTenTo16, 15.0), std::domain_error);
    CHECK_THROWS_AS(scenario_report(5, 7194.0), std::domain_error);
}

TEST_CASE("scenario invariants hold across a parameter sweep") {
    for (uint64_t alpha : {UINT64_C(7001), UINT64_C(99991), kRichstein, kTenTo16}) {
        for (double log10_beta : {50.0, 500.0, 7194.0, 43000.0}) {
            auto s = make_scenario(alpha, log10_beta);
            CHECK(s.r > 0.0);
            double back = std::pow(ln_beta(log10_beta), s.r);
            CHECK(std::abs(back - static_cast<double>(alpha)) / static_cast<double>(alpha) <
                  1e-9);
        }
    }
}
