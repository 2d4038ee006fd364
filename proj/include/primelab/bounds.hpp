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

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace primelab {

// Conditional-bound arithmetic relating a verification frontier alpha to a
// ternary bound beta. Beta values like 10^7194 are far beyond any integer
// type, but every formula here consumes only ln(beta), so beta lives purely
// as its base-10 logarithm. 7194 * ln 10 ~ 16565 is trivially exact in a
// 53-bit mantissa.

struct BoundScenario {
    uint64_t alpha = 0;       // verification frontier, exact integer
    double log10_beta = 0.0;  // beta as its base-10 logarithm
    double r = 0.0;           // exponent with (ln beta)^r = alpha
};

inline double ln_beta(double log10_beta) { return log10_beta * std::numbers::ln10; }

// r = ln(alpha) / ln(ln(beta)), the exponent that makes ln^r(beta) = alpha.
inline double required_exponent(uint64_t alpha, double log10_beta) {
    if (alpha < 3) throw std::domain_error("required_exponent: requires alpha >= 3");
    const double lb = ln_beta(log10_beta);
    if (!(std::log(lb) > 1.0))
        throw std::domain_error("required_exponent: requires ln(ln(beta)) > 1");
    return std::log(static_cast<double>(alpha)) / std::log(lb);
}

// ln^2(beta) = (log10_beta / log10 e)^2, the classic max-gap estimate below beta.
inline double cramer_gap_estimate(double log10_beta) {
    if (!(log10_beta > 0.0))
        throw std::domain_error("cramer_gap_estimate: requires log10_beta > 0");
    const double lb = ln_beta(log10_beta);
    return lb * lb;
}

inline BoundScenario make_scenario(uint64_t alpha, double log10_beta) {
    if (alpha < 7) throw std::domain_error("make_scenario: requires alpha >= 7");
    if (!(log10_beta > std::log10(static_cast<double>(alpha))))
        throw std::domain_error("make_scenario: requires beta > alpha");
    return BoundScenario{alpha, log10_beta, required_exponent(alpha, log10_beta)};
}

struct WorstCaseCheck {
    double rhs = 0.0;   // 10 * ln^2(beta)
    bool holds = false;  // alpha > rhs
};

// The worst-case safety margin: alpha must exceed ten times the estimated
// largest gap below beta, so a gap never straddles the whole verified range.
inline WorstCaseCheck worst_case_condition(const BoundScenario& s) {
    WorstCaseCheck out;
    out.rhs = 10.0 * cramer_gap_estimate(s.log10_beta);
    out.holds = static_cast<double>(s.alpha) > out.rhs;
    return out;
}

struct ScenarioReport {
    BoundScenario scenario;
    double ln2_beta = 0.0;
    double rhs = 0.0;
    bool holds = false;
    std::string summary;
};

// Assembles the full chain: r, ln^2(beta), the x10 threshold, the verdict,
// and the gap-bound conjecture instantiated with the computed r.
inline ScenarioReport scenario_report(uint64_t alpha, double log10_beta) {
    ScenarioReport out;
    out.scenario = make_scenario(alpha, log10_beta);
    out.ln2_beta = cramer_gap_estimate(log10_beta);
    const WorstCaseCheck wc = worst_case_condition(out.scenario);
    out.rhs = wc.rhs;
    out.holds = wc.holds;

    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "alpha = %llu, beta = 10^%.6g\n"
                  "max-gap estimate ln^2(beta)      = %.4e  (expected largest gap below beta)\n"
                  "worst-case threshold 10*ln^2(beta) = %.4e\n"
                  "alpha > 10*ln^2(beta)            : %s\n"
                  "required exponent r = ln(alpha)/ln(ln(beta)) = %.4f\n"
                  "conjectured bound: every prime gap below beta is < ln^%.4f(beta)\n",
                  static_cast<unsigned long long>(alpha), log10_beta, out.ln2_beta, out.rhs,
                  wc.holds ? "yes" : "NO", out.scenario.r, out.scenario.r);
    out.summary = buf;
    return out;
}

}  // namespace primelab
