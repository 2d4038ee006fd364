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

#include <json.hpp>

#include "primelab/bounds.hpp"
#include "primelab/cramer_model.hpp"
#include "primelab/gaps.hpp"
#include "primelab/goldbach.hpp"

// JSON views of the report types. Timing never appears here: serialized
// reports are byte-comparable across runs and thread counts, and wall-clock
// data belongs to the run manifest instead.

namespace primelab {

inline void to_json(nlohmann::json& j, const GoldbachWitness& w) {
    j = nlohmann::json{{"n", w.n}, {"p", w.p}, {"q", w.q}};
}

inline void to_json(nlohmann::json& j, const TernaryWitness& w) {
    j = nlohmann::json{{"n", w.n}, {"a", w.a}, {"b", w.b}, {"c", w.c}};
}

inline void to_json(nlohmann::json& j, const RangeReport& r) {
    j = nlohmann::json{{"lo", r.lo},
                       {"hi", r.hi},
                       {"checked", r.checked},
                       {"failures", r.failures},
                       {"max_min_p", {{"p", r.max_min_p.p}, {"n", r.max_min_p.n}}}};
}

inline void to_json(nlohmann::json& j, const GapRecord& r) {
    j = nlohmann::json{{"p", r.p},
                       {"p_next", r.p_next},
                       {"gap", r.gap},
                       {"merit", r.merit},
                       {"cramer_ratio", r.cramer_ratio}};
}

inline void to_json(nlohmann::json& j, const SimOutcome& o) {
    j = nlohmann::json{{"trial", o.trial}, {"count", o.pseudo_prime_count}};
    if (o.gap_defined) {
        j["max_gap"] = o.max_gap;
        j["max_gap_at"] = o.max_gap_at;
        j["ratio"] = o.ratio;
    } else {
        j["max_gap"] = nullptr;
        j["max_gap_at"] = nullptr;
        j["ratio"] = nullptr;
    }
}

inline void to_json(nlohmann::json& j, const ThreePlusC& r) {
    j = nlohmann::json{{"m", r.m}, {"m_minus_3_prime", r.m_minus_3_prime}};
    if (r.c) j["c"] = *r.c;
    if (r.fallback) j["fallback"] = *r.fallback;
}

inline void to_json(nlohmann::json& j, const MaierComparison& m) {
    j = nlohmann::json{
        {"n", m.n}, {"p", m.p}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"ratio", m.ratio}};
}

inline void to_json(nlohmann::json& j, const FEstimate& f) {
    j = nlohmann::json{{"primes", f.prime_count},
                       {"survivors", f.survivors},
                       {"defined", f.defined},
                       {"ln_midpoint", f.ln_midpoint}};
    if (f.defined)
        j["f_value"] = f.value;
    else
        j["f_value"] = nullptr;
}

inline void to_json(nlohmann::json& j, const ScenarioReport& s) {
    j = nlohmann::json{{"alpha", s.scenario.alpha},
                       {"log10_beta", s.scenario.log10_beta},
                       {"r", s.scenario.r},
                       {"ln2_beta", s.ln2_beta},
                       {"rhs", s.rhs},
                       {"holds", s.holds}};
}

}  // namespace primelab
