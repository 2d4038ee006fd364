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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primelab/parallel.hpp"

namespace primelab {

// Thrown when a requested range does not fit the configured memory budget.
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__uint128_t>(r) * r > n) --r;
    while (static_cast<__uint128_t>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Sieve budget in bytes: PRIMELAB_MEMORY_CAP if set, else 2 GiB.
inline uint64_t default_memory_cap() {
    if (const char* env = std::getenv("PRIMELAB_MEMORY_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return UINT64_C(2) << 30;
}

// Returns all primes <= limit by a plain odd-only sieve. Used for base
// primes up to sqrt(hi); everything bigger goes through PrimeTable.
inline std::vector<uint64_t> small_primes_up_to(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    primes.push_back(2);
    std::vector<uint8_t> odd_composite((limit - 1) / 2 + 1, 0);  // index i <-> 2i+1
    for (uint64_t p = 3; p * p <= limit; p += 2) {
        if (odd_composite[(p - 1) / 2]) continue;
        for (uint64_t m = p * p; m <= limit; m += 2 * p) odd_composite[(m - 1) / 2] = 1;
    }
    for (uint64_t p = 3; p <= limit; p += 2)
        if (!odd_composite[(p - 1) / 2]) primes.push_back(p);
    return primes;
}

// Bit-level primality table over [lo, hi]. One bit per odd integer; 2 is
// handled explicitly by every query. Built by a segmented sieve whose
// segments are independent, so construction parallelizes; the finished
// table is immutable and safe to share between threads.
class PrimeTable {
  public:
    struct Options {
        uint64_t segment_size = UINT64_C(1) << 20;  // integers per segment
        unsigned threads = 0;                       // 0 = all hardware threads
        uint64_t memory_cap = 0;                    // bytes, 0 = default_memory_cap()
    };

    PrimeTable() = default;

    static PrimeTable build(uint64_t lo, uint64_t hi, const Options& opt);
    static PrimeTable build(uint64_t lo, uint64_t hi) { return build(lo, hi, Options{}); }

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }

    // 0 and 1 are non-prime by definition and never error; any other n
    // outside [lo, hi] throws.
    bool is_prime(uint64_t n) const {
        if (n < 2) return false;
        check_range(n, n);
        if (n == 2) return true;
        if (n % 2 == 0) return false;
        return test_bit((n - odd_base_) / 2);
    }

    // Calls fn(p) for every prime in [a, b], ascending; fn returning false
    // stops the walk. Returns false iff the walk was stopped.
    template <class Fn>
    bool for_each_prime_while(uint64_t a, uint64_t b, Fn&& fn) const {
        check_range(a, b);
        if (a <= 2 && 2 <= b && !fn(UINT64_C(2))) return false;
        if (bit_count_ == 0 || b < odd_base_) return true;
        uint64_t i = index_at_or_above(std::max(a, odd_base_));
        uint64_t last = index_at_or_below(b);
        if (i >= bit_count_ || i > last) return true;
        last = std::min(last, bit_count_ - 1);

        uint64_t w = i / 64;
        uint64_t word = words_[w] & (~UINT64_C(0) << (i % 64));
        const uint64_t w_last = last / 64;
        for (;;) {
            if (w == w_last) word &= mask_up_to(last % 64);
            while (word != 0) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(word));
                if (!fn(odd_base_ + 2 * (w * 64 + bit))) return false;
                word &= word - 1;
            }
            if (w == w_last) return true;
            word = words_[++w];
        }
    }

    template <class Fn>
    void for_each_prime(uint64_t a, uint64_t b, Fn&& fn) const {
        for_each_prime_while(a, b, [&](uint64_t p) {
            fn(p);
            return true;
        });
    }

    // Strictly increasing list of the primes in [a, b].
    std::vector<uint64_t> primes_in(uint64_t a, uint64_t b) const {
        std::vector<uint64_t> out;
        for_each_prime(a, b, [&](uint64_t p) { out.push_back(p); });
        return out;
    }

    uint64_t count_primes(uint64_t a, uint64_t b) const {
        check_range(a, b);
        uint64_t count = (a <= 2 && 2 <= b) ? 1 : 0;
        if (bit_count_ == 0 || b < odd_base_) return count;
        uint64_t i = index_at_or_above(std::max(a, odd_base_));
        uint64_t last = index_at_or_below(b);
        if (i >= bit_count_ || i > last) return count;
        last = std::min(last, bit_count_ - 1);
        return count + popcount_range(i, last);
    }

    // Largest prime <= n, or nullopt when no prime of [lo, n] is in the table.
    std::optional<uint64_t> prev_prime(uint64_t n) const {
        check_range(n, n);
        if (bit_count_ > 0 && n >= odd_base_) {
            uint64_t i = std::min(index_at_or_below(n), bit_count_ - 1);
            uint64_t w = i / 64;
            uint64_t word = words_[w] & mask_up_to(i % 64);
            for (;;) {
                if (word != 0) {
                    unsigned bit = 63 - static_cast<unsigned>(std::countl_zero(word));
                    return odd_base_ + 2 * (w * 64 + bit);
                }
                if (w == 0) break;
                word = words_[--w];
            }
        }
        if (lo_ <= 2 && 2 <= n) return UINT64_C(2);
        return std::nullopt;
    }

    // Newline-separated decimal primes of [a, b]; debug aid.
    template <class Stream>
    void dump(uint64_t a, uint64_t b, Stream& os) const {
        for_each_prime(a, b, [&](uint64_t p) { os << p << '\n'; });
    }

    bool same_bits(const PrimeTable& other) const {
        return lo_ == other.lo_ && hi_ == other.hi_ && odd_base_ == other.odd_base_ &&
               bit_count_ == other.bit_count_ && words_ == other.words_;
    }

  private:
    void check_range(uint64_t a, uint64_t b) const {
        if (a < lo_ || b > hi_ || a > b)
            throw std::out_of_range("PrimeTable: query [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "] outside table range [" +
                                    std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    }

    // Smallest bit index whose value is >= v (v >= odd_base_ assumed).
    uint64_t index_at_or_above(uint64_t v) const { return (v - odd_base_ + 1) / 2; }
    // Largest bit index whose value is <= v (v >= odd_base_ assumed).
    uint64_t index_at_or_below(uint64_t v) const { return (v - odd_base_) / 2; }

    bool test_bit(uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void clear_bit(uint64_t i) { words_[i / 64] &= ~(UINT64_C(1) << (i % 64)); }

    static uint64_t mask_up_to(uint64_t bit) {  // bits [0, bit] set
        return bit == 63 ? ~UINT64_C(0) : (UINT64_C(1) << (bit + 1)) - 1;
    }

    uint64_t popcount_range(uint64_t i0, uint64_t i1) const {
        uint64_t w0 = i0 / 64, w1 = i1 / 64;
        if (w0 == w1) {
            uint64_t word = words_[w0] & (~UINT64_C(0) << (i0 % 64)) & mask_up_to(i1 % 64);
            return std::popcount(word);
        }
        uint64_t count = std::popcount(words_[w0] & (~UINT64_C(0) << (i0 % 64)));
        for (uint64_t w = w0 + 1; w < w1; ++w) count += std::popcount(words_[w]);
        return count + std::popcount(words_[w1] & mask_up_to(i1 % 64));
    }

    void sieve_segment(uint64_t first_bit, uint64_t end_bit, const std::vector<uint64_t>& base) {
        const uint64_t v_lo = odd_base_ + 2 * first_bit;
        const uint64_t v_hi = odd_base_ + 2 * (end_bit - 1);
        for (uint64_t p : base) {
            if (p == 2) continue;
            if (static_cast<__uint128_t>(p) * p > v_hi) break;
            uint64_t start = p * p;
            if (start < v_lo) {
                uint64_t rem = v_lo % p;
                if (rem != 0) {
                    if (p - rem > v_hi - v_lo) continue;  // no multiple in segment
                    start = v_lo + (p - rem);
                } else {
                    start = v_lo;
                }
                if (start % 2 == 0) {
                    if (p > v_hi - start) continue;  // next odd multiple is past the end
                    start += p;
                }
            }
            const uint64_t step = 2 * p;
            for (uint64_t v = start; v <= v_hi;) {
                clear_bit((v - odd_base_) / 2);
                if (v_hi - v < step) break;
                v += step;
            }
        }
    }

    uint64_t lo_ = 0;
    uint64_t hi_ = 0;
    uint64_t odd_base_ = 1;   // value of bit 0
    uint64_t bit_count_ = 0;  // bit i <-> odd_base_ + 2i, i < bit_count_
    std::vector<uint64_t> words_;
};

inline PrimeTable PrimeTable::build(uint64_t lo, uint64_t hi, const Options& opt) {
    if (lo > hi) throw std::invalid_argument("PrimeTable::build: lo must be <= hi");

    PrimeTable t;
    t.lo_ = lo;
    t.hi_ = hi;
    t.odd_base_ = (lo <= 1) ? 1 : (lo | 1);
    t.bit_count_ = (hi >= t.odd_base_) ? (hi - t.odd_base_) / 2 + 1 : 0;

    const uint64_t root = isqrt(hi);
    const uint64_t words = (t.bit_count_ + 63) / 64;
    const uint64_t cap = opt.memory_cap != 0 ? opt.memory_cap : default_memory_cap();
    // table words + byte sieve to sqrt(hi) + base prime list (generous bound)
    const uint64_t need = words * 8 + root + 8 * (root / 8 + 16);
    if (need > cap)
        throw capacity_error("PrimeTable::build: range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] needs about " + std::to_string(need) +
                             " bytes but the memory cap is " + std::to_string(cap) +
                             " (set PRIMELAB_MEMORY_CAP to raise it)");

    t.words_.assign(words, ~UINT64_C(0));
    if (t.bit_count_ == 0) return t;

    const std::vector<uint64_t> base = small_primes_up_to(root);

    // Segment boundaries stay multiples of 64 bits so concurrent segments
    // never touch the same word.
    uint64_t seg_bits = (std::max<uint64_t>(opt.segment_size, 128) / 2) & ~UINT64_C(63);
    const uint64_t n_segments = (t.bit_count_ + seg_bits - 1) / seg_bits;
    parallel_for_index(n_segments, opt.threads, [&](uint64_t k) {
        uint64_t first = k * seg_bits;
        uint64_t end = std::min(first + seg_bits, t.bit_count_);
        t.sieve_segment(first, end, base);
    });

    if (t.odd_base_ == 1) t.clear_bit(0);  // 1 is not prime
    if (t.bit_count_ % 64 != 0) t.words_.back() &= mask_up_to(t.bit_count_ % 64 - 1);
    return t;
}

// Convenience wrapper matching the shape of the other module entry points.
inline PrimeTable build_table(uint64_t lo, uint64_t hi, const PrimeTable::Options& opt = {}) {
    return PrimeTable::build(lo, hi, opt);
}

}  // namespace primelab
