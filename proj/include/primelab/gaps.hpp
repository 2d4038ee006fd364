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
#include <stdexcept>
#include <vector>

#include "primelab/sieve.hpp"

namespace primelab {

// One gap between consecutive primes. Both ratios index by the gap start p:
// merit = gap / ln p, cramer_ratio = gap / ln^2 p. Records with p < 11 sit
// in the small-prime regime where cramer_ratio exceeds 1 and say nothing
// about the asymptotic statement.
struct GapRecord {
    uint64_t p = 0;       // gap start
    uint64_t p_next = 0;  // next prime
    uint64_t gap = 0;     // p_next - p
    double merit = 0.0;
    double cramer_ratio = 0.0;
};

inline GapRecord make_gap_record(uint64_t p, uint64_t p_next) {
    double lp = std::log(static_cast<double>(p));
    double gap = static_cast<double>(p_next - p);
    return GapRecord{p, p_next, p_next - p, gap / lp, gap / (lp * lp)};
}

inline bool small_prime_regime(const GapRecord& r) { return r.p < 11; }

namespace detail {

inline void require_gap_table(const PrimeTable& t, uint64_t n, const char* who) {
    if (t.lo() > 2 || n > t.hi())
        throw std::out_of_range(std::string(who) + ": prime table must cover [2, " +
                                std::to_string(n) + "]");
}

}  // namespace detail

// All maximal-gap records among consecutive prime pairs within [2, N]:
// a gap is a record iff it strictly exceeds every earlier gap. Output is
// strictly increasing in both p and gap.
inline std::vector<GapRecord> maximal_gaps_up_to(uint64_t N, const PrimeTable& t) {
    if (N < 3) throw std::domain_error("maximal_gaps_up_to: requires N >= 3");
    detail::require_gap_table(t, N, "maximal_gaps_up_to");
    std::vector<GapRecord> out;
    uint64_t prev = 0, best = 0;
    t.for_each_prime(2, N, [&](uint64_t p) {
        if (prev != 0 && p - prev > best) {
            best = p - prev;
            out.push_back(make_gap_record(prev, p));
        }
        prev = p;
    });
    return out;
}

// Largest gap among consecutive prime pairs within [2, N]. Kept as a direct
// linear fold, independent of the record-table route above.
inline uint64_t max_gap(uint64_t N, const PrimeTable& t) {
    if (N < 3) throw std::domain_error("max_gap: requires N >= 3");
    detail::require_gap_table(t, N, "max_gap");
    uint64_t prev = 0, best = 0;
    t.for_each_prime(2, N, [&](uint64_t p) {
        if (prev != 0 && p - prev > best) best = p - prev;
        prev = p;
    });
    return best;
}

struct GapBoundResult {
    bool holds = false;
    double bound = 0.0;  // ln^r N
    GapRecord worst;     // record maximizing gap / bound, i.e. the max gap
};

// Tests whether every prime gap below N stays under ln^r(N).
inline GapBoundResult verify_gap_bound(uint64_t N, double r, const PrimeTable& t) {
    if (N < 11) throw std::domain_error("verify_gap_bound: requires N >= 11");
    if (!(r > 0.0)) throw std::domain_error("verify_gap_bound: requires r > 0");
    detail::require_gap_table(t, N, "verify_gap_bound");
    GapBoundResult out;
    out.bound = std::pow(std::log(static_cast<double>(N)), r);
    uint64_t prev = 0, best = 0;
    t.for_each_prime(2, N, [&](uint64_t p) {
        if (prev != 0 && p - prev > best) {
            best = p - prev;
            out.worst = make_gap_record(prev, p);
        }
        prev = p;
    });
    out.holds = static_cast<double>(out.worst.gap) < out.bound;
    return out;
}

// Exponent r realized by a gap at p: (ln p)^r = gap, i.e.
// r = ln(gap) / ln(ln p). Needs p >= 11 so that ln(ln p) > 1.
inline double gap_exponent(uint64_t p, uint64_t gap) {
    if (p < 11) throw std::domain_error("gap_exponent: requires p >= 11");
    if (gap < 2) throw std::domain_error("gap_exponent: requires gap >= 2");
    return std::log(static_cast<double>(gap)) /
           std::log(std::log(static_cast<double>(p)));
}

// Short-interval density ratio: primes in (x, x + floor(ln^lambda x)] times
// ln x over ln^lambda x. Near 1 for almost all x once lambda > 2.
inline double selberg_ratio(uint64_t x, double lambda, const PrimeTable& t) {
    if (x < 100) throw std::domain_error("selberg_ratio: requires x >= 100");
    if (!(lambda > 0.0)) throw std::domain_error("selberg_ratio: requires lambda > 0");
    const double phi = std::pow(std::log(static_cast<double>(x)), lambda);
    const uint64_t window = static_cast<uint64_t>(phi);
    if (window < 1) throw std::domain_error("selberg_ratio: window ln^lambda(x) is empty");
    if (x + window > t.hi() || t.lo() > 2)
        throw std::out_of_range("selberg_ratio: prime table must cover [2, x + window]");
    const uint64_t count = t.count_primes(x + 1, x + window);
    return static_cast<double>(count) * std::log(static_cast<double>(x)) / phi;
}

}  // namespace primelab
