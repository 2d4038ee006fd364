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

#include "primelab/parallel.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

// Euler-Mascheroni constant, shared by every Mertens-limit comparison.
inline constexpr double kEulerGamma = 0.57721566490153286;

// SplitMix64: the documented deterministic generator behind the random
// model. One independent stream per trial, derived as seed + trial index;
// a uniform draw is the top 53 bits scaled to [0, 1).
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += UINT64_C(0x9e3779b97f4a7c15));
        z = (z ^ (z >> 30)) * UINT64_C(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94d049bb133111eb);
        return z ^ (z >> 31);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Model trial: every integer n of [x_start, x_end] joins the pseudo-prime
// set independently with probability 1/ln n.
struct SimConfig {
    uint64_t x_start = 3;  // >= 3 keeps 1/ln n inside (0, 1)
    uint64_t x_end = 0;
    uint64_t seed = 0;
    uint32_t trials = 1;
};

struct SimOutcome {
    uint32_t trial = 0;
    uint64_t pseudo_prime_count = 0;
    bool gap_defined = false;  // needs at least two pseudo-primes
    uint64_t max_gap = 0;
    uint64_t max_gap_at = 0;  // gap start
    double ratio = 0.0;       // max_gap / ln^2(x_end)
};

// Runs config.trials independent trials; identical (seed, trial) pairs give
// bit-identical outcomes regardless of thread count.
inline std::vector<SimOutcome> simulate(const SimConfig& config, unsigned threads = 0) {
    if (config.x_start < 3) throw std::domain_error("simulate: requires x_start >= 3");
    if (config.x_end < config.x_start)
        throw std::domain_error("simulate: requires x_end >= x_start");
    if (config.trials < 1) throw std::domain_error("simulate: requires trials >= 1");

    std::vector<SimOutcome> out(config.trials);
    const double ln2_end = [&] {
        double l = std::log(static_cast<double>(config.x_end));
        return l * l;
    }();
    parallel_for_index(config.trials, threads, [&](uint64_t trial) {
        SplitMix64 rng(config.seed + trial);
        SimOutcome& o = out[trial];
        o.trial = static_cast<uint32_t>(trial);
        uint64_t prev = 0;
        for (uint64_t n = config.x_start; n <= config.x_end; ++n) {
            const bool member = rng.next_unit() < 1.0 / std::log(static_cast<double>(n));
            if (!member) continue;
            ++o.pseudo_prime_count;
            if (prev != 0 && n - prev > o.max_gap) {
                o.max_gap = n - prev;
                o.max_gap_at = prev;
                o.gap_defined = true;
            }
            prev = n;
        }
        if (o.gap_defined) o.ratio = static_cast<double>(o.max_gap) / ln2_end;
    });
    return out;
}

// prod_{s <= z, s prime} (1 - 1/s), accumulated over ascending primes.
inline double mertens_product(uint64_t z, const PrimeTable& t) {
    if (z < 2) throw std::domain_error("mertens_product: requires z >= 2");
    if (t.lo() > 2 || z > t.hi())
        throw std::out_of_range("mertens_product: prime table must cover [2, z]");
    double product = 1.0;
    t.for_each_prime(2, z, [&](uint64_t s) { product *= 1.0 - 1.0 / static_cast<double>(s); });
    return product;
}

// Density of integers near n surviving sieving by all primes <= z, under
// the random model: 1 / (mertens(z) * ln n). Always exceeds 1/ln n.
struct SievedDensity {
    uint64_t n = 0;
    uint64_t z = 0;
    double mertens = 0.0;
    double density = 0.0;
};

inline SievedDensity sieved_density(uint64_t n, uint64_t z, const PrimeTable& t) {
    if (n < 3) throw std::domain_error("sieved_density: requires n >= 3");
    SievedDensity out;
    out.n = n;
    out.z = z;
    out.mertens = mertens_product(z, t);
    out.density = 1.0 / (out.mertens * std::log(static_cast<double>(n)));
    return out;
}

// Estimator for the survival function F: the interval (x, x+y] is sieved by
// the primes <= q in the Eratosthenes sense (proper multiples are struck, a
// prime is never struck by itself), and
//
//     F_hat = primes / survivors * ln(x + y/2).
//
// Once q >= sqrt(x+y) the survivors are exactly the primes, so the
// estimator collapses to ln(x + y/2) -- the identity F(n, p) = ln n.
// The midpoint x + y/2 stands in for n over the interval.
struct FEstimate {
    uint64_t prime_count = 0;
    uint64_t survivors = 0;
    bool defined = false;  // false iff no survivors
    double value = 0.0;
    double ln_midpoint = 0.0;
};

inline FEstimate empirical_F(uint64_t x, uint64_t y, uint64_t q, const PrimeTable& t) {
    if (y == 0 || x <= y) throw std::domain_error("empirical_F: requires x > y > 0");
    if (q < 2) throw std::domain_error("empirical_F: requires q >= 2");
    if (t.lo() > 2 || x + y > t.hi())
        throw std::out_of_range("empirical_F: prime table must cover [2, x + y]");

    std::vector<uint8_t> alive(y, 1);  // alive[i] <-> x + 1 + i
    const uint64_t hi = x + y;
    const uint64_t sieve_top = std::min(q, isqrt(hi));
    t.for_each_prime(2, sieve_top, [&](uint64_t s) {
        uint64_t first = (x / s + 1) * s;  // first multiple > x; s < x, so this is proper
        for (uint64_t v = first; v <= hi; v += s) alive[v - x - 1] = 0;
    });

    FEstimate out;
    for (uint8_t a : alive) out.survivors += a;
    out.prime_count = t.count_primes(x + 1, hi);
    out.ln_midpoint = std::log(static_cast<double>(x) + static_cast<double>(y) / 2.0);
    if (out.survivors == 0) return out;
    out.defined = true;
    out.value = static_cast<double>(out.prime_count) / static_cast<double>(out.survivors) *
                out.ln_midpoint;
    return out;
}

// Both sides of the density comparison at threshold p = prev_prime(sqrt(n)):
// lhs = 1 / prod_{s <= p} (1 - 1/s) versus rhs = ln n. Mertens' third
// theorem puts lhs near e^gamma * ln(sqrt n), so the ratio tends to
// e^gamma / 2 ~ 0.8905 rather than 1: the two sides never agree.
struct MaierComparison {
    uint64_t n = 0;
    uint64_t p = 0;  // greatest prime <= sqrt(n)
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

inline MaierComparison maier_discrepancy(uint64_t n, const PrimeTable& t) {
    if (n < 9) throw std::domain_error("maier_discrepancy: requires n >= 9");
    const uint64_t root = isqrt(n);
    if (t.lo() > 2 || root > t.hi())
        throw std::out_of_range("maier_discrepancy: prime table must cover [2, sqrt(n)]");
    MaierComparison out;
    out.n = n;
    out.p = *t.prev_prime(root);  // root >= 3, so a prime <= root always exists
    out.lhs = 1.0 / mertens_product(out.p, t);
    out.rhs = std::log(static_cast<double>(n));
    out.ratio = out.lhs / out.rhs;
    return out;
}

}  // namespace primelab
