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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primelab/parallel.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

// n = p + q with p <= q, both prime, p minimal (canonical witness).
struct GoldbachWitness {
    uint64_t n, p, q;
};

// n = a + b + c with a <= b <= c, all prime, (a, b) lexicographically minimal.
struct TernaryWitness {
    uint64_t n, a, b, c;
};

// Outcome of the "is m - 3 prime" check for even m: when it is, (3, m - 3)
// is itself a binary witness; when it is not, the ordinary minimal witness
// is attached as fallback evidence.
struct ThreePlusC {
    uint64_t m = 0;
    bool m_minus_3_prime = false;
    std::optional<uint64_t> c;
    std::optional<GoldbachWitness> fallback;
};

// n = p + r with p the largest prime <= n - 4, r = n - p even and small.
struct PrimePlusRemainder {
    uint64_t p, r;
};

struct MinimalPrimeRecord {
    uint64_t p = 0;  // largest minimal witness prime seen
    uint64_t n = 0;  // first n attaining it
};

struct RangeReport {
    uint64_t lo = 0;
    uint64_t hi = 0;
    uint64_t checked = 0;
    std::vector<uint64_t> failures;  // n with no witness; expected empty
    MinimalPrimeRecord max_min_p;
    double elapsed_seconds = 0.0;
};

struct BinaryRangeResult {
    RangeReport report;
    std::vector<GoldbachWitness> records;  // successive maxima of the minimal p
};

struct TernaryRangeResult {
    RangeReport report;
    std::vector<TernaryWitness> records;  // successive maxima of the minimal a
};

namespace detail {

inline void require_cover(const PrimeTable& t, uint64_t n, const char* who) {
    if (t.lo() > 2 || n > t.hi())
        throw std::out_of_range(std::string(who) + ": prime table must cover [2, " +
                                std::to_string(n) + "]");
}

// Minimal prime p with n - p prime. Walks a cached ascending prime list
// first; the table walk beyond the cache is a correctness fallback that no
// range within the sieve budget actually reaches.
inline std::optional<uint64_t> minimal_binary_p(uint64_t n, const PrimeTable& t,
                                                const std::vector<uint64_t>& cache) {
    for (uint64_t p : cache) {
        if (2 * p > n) return std::nullopt;
        if (t.is_prime(n - p)) return p;
    }
    uint64_t resume = cache.empty() ? 2 : cache.back() + 1;
    std::optional<uint64_t> found;
    if (resume <= n / 2)
        t.for_each_prime_while(resume, n / 2, [&](uint64_t p) {
            if (t.is_prime(n - p)) {
                found = p;
                return false;
            }
            return true;
        });
    return found;
}

constexpr uint64_t kPrimeCacheTop = 100000;

inline std::vector<uint64_t> witness_prime_cache(const PrimeTable& t) {
    return t.primes_in(2, std::min(t.hi(), kPrimeCacheTop));
}

}  // namespace detail

// Canonical binary Goldbach witness for even n > 2, or nullopt if none
// exists (which would refute the conjecture at n).
inline std::optional<GoldbachWitness> binary_witness(uint64_t n, const PrimeTable& t) {
    if (n <= 2 || n % 2 != 0)
        throw std::domain_error("binary_witness: n must be even and > 2");
    detail::require_cover(t, n, "binary_witness");
    std::optional<GoldbachWitness> found;
    t.for_each_prime_while(2, n / 2, [&](uint64_t p) {
        if (t.is_prime(n - p)) {
            found = GoldbachWitness{n, p, n - p};
            return false;
        }
        return true;
    });
    return found;
}

// Canonical ternary witness for odd n > 5. For odd n the case a = 2 forces
// b = 2 (two of the three parts must share parity), so the minimal-(a, b)
// policy reduces to: (2, 2, n-4) when n-4 is prime, else a = 3 plus the
// minimal binary split of n - 3, else the generic ascending scan.
inline std::optional<TernaryWitness> ternary_witness(uint64_t n, const PrimeTable& t) {
    if (n <= 5 || n % 2 == 0)
        throw std::domain_error("ternary_witness: n must be odd and > 5");
    detail::require_cover(t, n, "ternary_witness");
    if (t.is_prime(n - 4)) return TernaryWitness{n, 2, 2, n - 4};
    if (n > 7) {
        if (auto w = binary_witness(n - 3, t); w && w->p >= 3)
            return TernaryWitness{n, 3, w->p, w->q};
    }
    std::optional<TernaryWitness> found;
    if (n / 3 >= 3) {
        t.for_each_prime_while(3, n / 3, [&](uint64_t a) {
            uint64_t b_top = (n - a) / 2;
            if (b_top < a) return false;  // no room left for b >= a
            t.for_each_prime_while(a, b_top, [&](uint64_t b) {
                uint64_t c = n - a - b;
                if (t.is_prime(c)) {
                    found = TernaryWitness{n, a, b, c};
                    return false;
                }
                return true;
            });
            return !found.has_value();
        });
    }
    return found;
}

// For even m > 4, reports whether c = m - 3 is prime. A prime c means the
// ternary decomposition (2, 2, c) of m + 1 hands back the binary witness
// (3, c) of m; a composite c gets the ordinary witness as fallback.
inline ThreePlusC check_three_plus_c(uint64_t m, const PrimeTable& t) {
    if (m <= 4 || m % 2 != 0)
        throw std::domain_error("check_three_plus_c: m must be even and > 4");
    detail::require_cover(t, m, "check_three_plus_c");
    ThreePlusC out;
    out.m = m;
    uint64_t c = m - 3;
    out.m_minus_3_prime = t.is_prime(c);
    if (out.m_minus_3_prime)
        out.c = c;
    else
        out.fallback = binary_witness(m, t);
    return out;
}

// Decomposes odd n as p + r with p = prev_prime(n - 4), succeeding iff the
// remainder lands in the even set {4, 6, ..., alpha - 1}. A not-found means
// the prime gap ending before n exceeds alpha - 4.
inline std::optional<PrimePlusRemainder> prev_prime_decomposition(uint64_t n, uint64_t alpha,
                                                                  const PrimeTable& t) {
    if (n % 2 == 0) throw std::domain_error("prev_prime_decomposition: n must be odd");
    if (alpha < 7 || n <= alpha)
        throw std::domain_error("prev_prime_decomposition: requires n > alpha >= 7");
    detail::require_cover(t, n - 4, "prev_prime_decomposition");
    auto p = t.prev_prime(n - 4);
    if (!p) return std::nullopt;
    uint64_t r = n - *p;
    if (*p % 2 == 1 && r % 2 != 0)
        throw std::logic_error("prev_prime_decomposition: odd remainder for odd prime");
    if (r % 2 != 0 || r > alpha - 1) return std::nullopt;
    return PrimePlusRemainder{*p, r};
}

struct VerifyOptions {
    unsigned threads = 0;
    uint64_t chunk = UINT64_C(1) << 16;  // values of n per work unit
};

namespace detail {

inline uint64_t witness_min_prime(const GoldbachWitness& w) { return w.p; }
inline uint64_t witness_min_prime(const TernaryWitness& w) { return w.a; }

template <class Witness, class PerN>
void run_range_verification(uint64_t lo, uint64_t hi, uint64_t count, const VerifyOptions& opt,
                            RangeReport& report, std::vector<Witness>& records, PerN&& per_n) {
    auto started = std::chrono::steady_clock::now();
    struct Chunk {
        std::vector<uint64_t> failures;
        std::vector<Witness> records;  // running maxima local to the chunk
    };
    const uint64_t per = std::max<uint64_t>(opt.chunk, 1);
    const uint64_t n_chunks = (count + per - 1) / per;
    std::vector<Chunk> parts(n_chunks);

    parallel_for_index(n_chunks, opt.threads, [&](uint64_t k) {
        Chunk& part = parts[k];
        uint64_t best = 0;
        const uint64_t end = std::min(k * per + per, count);
        for (uint64_t i = k * per; i < end; ++i) {
            uint64_t n = lo + 2 * i;
            per_n(n, best, part.failures, part.records);
        }
    });

    report.lo = lo;
    report.hi = hi;
    report.checked = count;
    for (Chunk& part : parts) {
        report.failures.insert(report.failures.end(), part.failures.begin(),
                               part.failures.end());
        for (const Witness& w : part.records) {
            uint64_t first = witness_min_prime(w);
            if (first > report.max_min_p.p) {
                report.max_min_p = {first, w.n};
                records.push_back(w);
            }
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
}

}  // namespace detail

// Verifies the binary conjecture for every even n in [lo, hi]. Sub-ranges
// are processed concurrently and merged in order, so the report does not
// depend on the thread count. Witnesses are not materialized; only
// failures and minimal-p records survive.
inline BinaryRangeResult verify_binary_range(uint64_t lo, uint64_t hi, const PrimeTable& t,
                                             const VerifyOptions& opt = {}) {
    if (lo < 4 || lo % 2 != 0 || hi % 2 != 0 || lo > hi)
        throw std::domain_error("verify_binary_range: requires even 4 <= lo <= hi");
    detail::require_cover(t, hi, "verify_binary_range");
    const auto cache = detail::witness_prime_cache(t);

    BinaryRangeResult out;
    detail::run_range_verification(
        lo, hi, (hi - lo) / 2 + 1, opt, out.report, out.records,
        [&](uint64_t n, uint64_t& best, std::vector<uint64_t>& failures,
            std::vector<GoldbachWitness>& records) {
            auto p = detail::minimal_binary_p(n, t, cache);
            if (!p) {
                failures.push_back(n);
                return;
            }
            if (*p > best) {
                best = *p;
                records.push_back(GoldbachWitness{n, *p, n - *p});
            }
        });
    return out;
}

// Same for the ternary conjecture over odd n in [lo, hi].
inline TernaryRangeResult verify_ternary_range(uint64_t lo, uint64_t hi, const PrimeTable& t,
                                               const VerifyOptions& opt = {}) {
    if (lo < 7 || lo % 2 == 0 || hi % 2 == 0 || lo > hi)
        throw std::domain_error("verify_ternary_range: requires odd 7 <= lo <= hi");
    detail::require_cover(t, hi, "verify_ternary_range");
    const auto cache = detail::witness_prime_cache(t);

    TernaryRangeResult out;
    detail::run_range_verification(
        lo, hi, (hi - lo) / 2 + 1, opt, out.report, out.records,
        [&](uint64_t n, uint64_t& best, std::vector<uint64_t>& failures,
            std::vector<TernaryWitness>& records) {
            std::optional<TernaryWitness> w;
            if (t.is_prime(n - 4)) {
                w = TernaryWitness{n, 2, 2, n - 4};
            } else if (n > 7) {
                if (auto p = detail::minimal_binary_p(n - 3, t, cache); p && *p >= 3)
                    w = TernaryWitness{n, 3, *p, n - 3 - *p};
            }
            if (!w) w = ternary_witness(n, t);  // generic slow path
            if (!w) {
                failures.push_back(n);
                return;
            }
            if (w->a > best) {
                best = w->a;
                records.push_back(*w);
            }
        });
    return out;
}

}  // namespace primelab
