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
//
// primelab: command line front end for the prime toolkit.
//
// Data goes to stdout (JSON by default, CSV for tabular outputs); progress
// and the run manifest go to stderr. Exit codes: 0 = success with the
// expected verdict, 1 = a verified counterexample or falsified bound,
// 2 = usage or capacity errors.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "primelab/bounds.hpp"
#include "primelab/cramer_model.hpp"
#include "primelab/gaps.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/serialize.hpp"
#include "primelab/sieve.hpp"
#include "primelab/version.hpp"

namespace {

using nlohmann::json;
using namespace primelab;

// Everything written to stdout flows through the sink so the manifest can
// carry a checksum of the emitted data.
class OutputSink {
  public:
    void write(std::string_view s) {
        for (unsigned char ch : s) {
            digest_ ^= ch;
            digest_ *= UINT64_C(1099511628211);
        }
        std::fwrite(s.data(), 1, s.size(), stdout);
    }

    void write_json(const json& j) { write(j.dump() + "\n"); }

    std::string digest_hex() const {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "fnv1a64:%016" PRIx64, digest_);
        return buf;
    }

  private:
    uint64_t digest_ = UINT64_C(14695981039346656037);
};

struct RunContext {
    std::string command;
    std::map<std::string, std::string> params;
    OutputSink out;
    bool quiet = false;
    unsigned threads = 0;
    std::string format = "json";

    void info(const std::string& msg) const {
        if (!quiet) std::cerr << "[primelab] " << msg << "\n";
    }
};

// Exact integer parse accepting scientific notation, so constants such as
// 1e16 paste straight from the literature. Rejects anything that is not an
// integer or does not fit in a signed 64-bit value.
uint64_t parse_scaled_u64(const std::string& text) {
    const auto fail = [&]() -> uint64_t {
        throw std::invalid_argument("'" + text + "' is not a non-negative integer (scientific notation allowed)");
    };
    size_t i = 0;
    std::string digits;
    uint64_t frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) return fail();
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') return fail();
        seen_digit = true;
        digits.push_back(c);
        if (seen_dot) ++frac_digits;
    }
    if (!seen_digit) return fail();

    uint64_t exponent = 0;
    if (i < text.size()) {  // exponent part
        ++i;
        if (i < text.size() && text[i] == '+') ++i;
        if (i >= text.size()) return fail();
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') return fail();
            exponent = exponent * 10 + static_cast<uint64_t>(text[i] - '0');
            if (exponent > 1000) return fail();
        }
    }
    if (exponent < frac_digits) return fail();  // fractional result
    uint64_t shift = exponent - frac_digits;

    __uint128_t value = 0;
    for (char c : digits) {
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > (__uint128_t(1) << 80)) return fail();
    }
    for (uint64_t k = 0; k < shift; ++k) {
        value *= 10;
        if (value > (__uint128_t(1) << 80)) return fail();
    }
    if (value > __uint128_t(INT64_MAX)) return fail();
    return static_cast<uint64_t>(value);
}

double parse_double(const std::string& text) {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("'" + text + "' is not a number");
    return v;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

PrimeTable build_covering(RunContext& ctx, uint64_t hi, uint64_t lo = 2) {
    ctx.info("sieving [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    PrimeTable::Options opt;
    opt.threads = ctx.threads;
    return PrimeTable::build(lo, hi, opt);
}

// --- subcommand handlers ---------------------------------------------------

int run_sieve(RunContext& ctx, uint64_t from, uint64_t to, bool dump, uint64_t segment) {
    PrimeTable::Options opt;
    opt.threads = ctx.threads;
    if (segment != 0) opt.segment_size = segment;
    PrimeTable t = PrimeTable::build(from, to, opt);
    if (dump) {
        std::string buf;
        buf.reserve(1 << 16);
        t.for_each_prime(from, to, [&](uint64_t p) {
            buf += std::to_string(p);
            buf += '\n';
            if (buf.size() > (1 << 15)) {
                ctx.out.write(buf);
                buf.clear();
            }
        });
        ctx.out.write(buf);
        return 0;
    }
    ctx.out.write_json(json{{"lo", from}, {"hi", to}, {"count", t.count_primes(from, to)}});
    return 0;
}

int run_goldbach(RunContext& ctx, uint64_t from, uint64_t to) {
    if (from % 2 != 0 || to % 2 != 0 || from < 4 || from > to)
        throw std::invalid_argument("goldbach: requires even 4 <= from <= to");
    PrimeTable t = build_covering(ctx, to);
    VerifyOptions opt;
    opt.threads = ctx.threads;
    BinaryRangeResult res = verify_binary_range(from, to, t, opt);
    if (ctx.format == "csv") {
        std::string buf = "n,p,q\n";
        for (const auto& w : res.records)
            buf += std::to_string(w.n) + "," + std::to_string(w.p) + "," + std::to_string(w.q) + "\n";
        for (uint64_t n : res.report.failures) buf += std::to_string(n) + ",,\n";
        ctx.out.write(buf);
    } else {
        json j = res.report;
        j["records"] = res.records;
        ctx.out.write_json(j);
    }
    ctx.info("checked " + std::to_string(res.report.checked) + " even n, " +
             std::to_string(res.report.failures.size()) + " failures, " +
             fmt_double(res.report.elapsed_seconds) + " s");
    return res.report.failures.empty() ? 0 : 1;
}

int run_ternary(RunContext& ctx, uint64_t from, uint64_t to) {
    if (from % 2 == 0 || to % 2 == 0 || from < 7 || from > to)
        throw std::invalid_argument("ternary: requires odd 7 <= from <= to");
    PrimeTable t = build_covering(ctx, to);
    VerifyOptions opt;
    opt.threads = ctx.threads;
    TernaryRangeResult res = verify_ternary_range(from, to, t, opt);
    if (ctx.format == "csv") {
        std::string buf = "n,a,b,c\n";
        for (const auto& w : res.records)
            buf += std::to_string(w.n) + "," + std::to_string(w.a) + "," + std::to_string(w.b) +
                   "," + std::to_string(w.c) + "\n";
        for (uint64_t n : res.report.failures) buf += std::to_string(n) + ",,,\n";
        ctx.out.write(buf);
    } else {
        json j = res.report;
        j["records"] = res.records;
        ctx.out.write_json(j);
    }
    ctx.info("checked " + std::to_string(res.report.checked) + " odd n, " +
             std::to_string(res.report.failures.size()) + " failures, " +
             fmt_double(res.report.elapsed_seconds) + " s");
    return res.report.failures.empty() ? 0 : 1;
}

int run_tres2(RunContext& ctx, uint64_t n, uint64_t alpha) {
    PrimeTable t = build_covering(ctx, n);
    auto d = prev_prime_decomposition(n, alpha, t);
    json j{{"n", n}, {"alpha", alpha}, {"found", d.has_value()}};
    if (d) {
        j["p"] = d->p;
        j["r"] = d->r;
    } else {
        j["p"] = nullptr;
        j["r"] = nullptr;
    }
    ctx.out.write_json(j);
    if (!d) ctx.info("no decomposition: the prime gap before n exceeds alpha - 4");
    return d ? 0 : 1;
}

int run_dois5(RunContext& ctx, uint64_t m) {
    PrimeTable t = build_covering(ctx, m);
    ThreePlusC r = check_three_plus_c(m, t);
    ctx.out.write_json(json(r));
    // composite m - 3 with no fallback witness would refute the binary
    // conjecture at m
    return (r.m_minus_3_prime || r.fallback) ? 0 : 1;
}

int run_gaps(RunContext& ctx, uint64_t to) {
    PrimeTable t = build_covering(ctx, to);
    auto records = maximal_gaps_up_to(to, t);
    if (ctx.format == "csv") {
        std::string buf = "p,p_next,gap,merit,cramer_ratio\n";
        for (const auto& r : records)
            buf += std::to_string(r.p) + "," + std::to_string(r.p_next) + "," +
                   std::to_string(r.gap) + "," + fmt_double(r.merit) + "," +
                   fmt_double(r.cramer_ratio) + "\n";
        ctx.out.write(buf);
    } else {
        ctx.out.write_json(json{{"to", to}, {"records", records}});
    }
    return 0;
}

int run_gap_bound(RunContext& ctx, uint64_t to, double r) {
    PrimeTable t = build_covering(ctx, to);
    GapBoundResult res = verify_gap_bound(to, r, t);
    ctx.out.write_json(json{{"to", to},
                            {"r", r},
                            {"bound", res.bound},
                            {"holds", res.holds},
                            {"worst", res.worst}});
    ctx.info("worst gap " + std::to_string(res.worst.gap) + " at p = " +
             std::to_string(res.worst.p) + " against bound ln^" + fmt_double(r) + "(" +
             std::to_string(to) + ") = " + fmt_double(res.bound) +
             (res.holds ? " -> holds" : " -> FALSIFIED"));
    return res.holds ? 0 : 1;
}

int run_bounds(RunContext& ctx, uint64_t alpha, double log10_beta) {
    ScenarioReport rep = scenario_report(alpha, log10_beta);
    ctx.out.write_json(json(rep));
    if (!ctx.quiet) std::cerr << rep.summary;
    return rep.holds ? 0 : 1;
}

int run_selberg(RunContext& ctx, uint64_t x, double lambda) {
    const double phi = std::pow(std::log(static_cast<double>(x)), lambda);
    const uint64_t window = static_cast<uint64_t>(phi);
    if (x < 100 || window < 1)
        throw std::invalid_argument("selberg: requires x >= 100 and a nonempty window");
    PrimeTable t = build_covering(ctx, x + window);
    const double ratio = selberg_ratio(x, lambda, t);
    ctx.out.write_json(json{{"x", x},
                            {"lambda", lambda},
                            {"phi", phi},
                            {"window", window},
                            {"count", t.count_primes(x + 1, x + window)},
                            {"ratio", ratio}});
    return 0;
}

int run_simulate(RunContext& ctx, uint64_t from, uint64_t to, uint64_t seed, uint32_t trials) {
    SimConfig config{from, to, seed, trials};
    auto outcomes = simulate(config, ctx.threads);
    if (ctx.format == "json") {
        ctx.out.write_json(json(outcomes));
    } else {
        std::string buf = "trial,count,max_gap,max_gap_at,ratio\n";
        for (const auto& o : outcomes) {
            buf += std::to_string(o.trial) + "," + std::to_string(o.pseudo_prime_count) + ",";
            if (o.gap_defined)
                buf += std::to_string(o.max_gap) + "," + std::to_string(o.max_gap_at) + "," +
                       fmt_double(o.ratio);
            else
                buf += ",,";  // no gap to report
            buf += "\n";
        }
        ctx.out.write(buf);
    }
    return 0;
}

int run_mertens(RunContext& ctx, uint64_t z) {
    PrimeTable t = build_covering(ctx, z);
    const double product = mertens_product(z, t);
    // product * ln z / e^-gamma tends to 1; printed so drift is visible
    const double limit_check =
        product * std::log(static_cast<double>(z)) / std::exp(-kEulerGamma);
    ctx.out.write_json(json{{"z", z}, {"product", product}, {"mertens_limit_check", limit_check}});
    return 0;
}

int run_maier(RunContext& ctx, uint64_t n) {
    PrimeTable t = build_covering(ctx, isqrt(n));
    MaierComparison m = maier_discrepancy(n, t);
    ctx.out.write_json(json(m));
    // equality of the two densities would contradict the Mertens-product
    // correction; report it as a falsified expectation
    return m.lhs == m.rhs ? 1 : 0;
}

int run_fcheck(RunContext& ctx, uint64_t x, uint64_t y, uint64_t q) {
    PrimeTable t = build_covering(ctx, x + y);
    FEstimate f = empirical_F(x, y, q, t);
    json j = f;
    j["x"] = x;
    j["y"] = y;
    j["q"] = q;
    ctx.out.write_json(j);
    if (!f.defined) ctx.info("no survivors in (x, x+y]; estimator undefined");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primelab: Goldbach witnesses, prime gap records, conditional bound calculus, and Cramer-model experiments"};
    app.set_version_flag("--version", std::string(PRIMELAB_VERSION));
    app.require_subcommand(1);

    RunContext ctx;
    app.add_flag("--quiet,-q", ctx.quiet, "suppress progress output");
    app.add_option("--threads,-t", ctx.threads, "worker threads (0 = all cores)");

    // big-integer-ish inputs arrive as strings and get exact scaled parsing
    std::string s_from, s_to, s_n, s_m, s_alpha, s_x, s_y, s_q, s_z, s_seed, s_segment;
    double log10_beta = 0.0, lambda = 3.0, bound_r = 2.0;
    uint32_t trials = 1;
    bool dump = false;

    auto* c_sieve = app.add_subcommand("sieve", "list or count primes in [from, to]");
    c_sieve->add_option("--from", s_from)->required();
    c_sieve->add_option("--to", s_to)->required();
    c_sieve->add_flag("--dump", dump, "newline-separated decimal primes instead of a summary");
    c_sieve->add_option("--segment-size", s_segment, "integers per sieve segment");

    auto* c_goldbach =
        app.add_subcommand("goldbach", "verify the binary conjecture on an even range");
    c_goldbach->add_option("--from", s_from)->required();
    c_goldbach->add_option("--to", s_to)->required();

    auto* c_ternary =
        app.add_subcommand("ternary", "verify the ternary conjecture on an odd range");
    c_ternary->add_option("--from", s_from)->required();
    c_ternary->add_option("--to", s_to)->required();

    auto* c_tres2 = app.add_subcommand(
        "tres2", "decompose odd n as p + r with p = prev_prime(n-4) and even r < alpha");
    c_tres2->add_option("--n", s_n)->required();
    c_tres2->add_option("--alpha", s_alpha)->required();

    auto* c_dois5 =
        app.add_subcommand("dois5", "check whether m - 3 is prime, with witness fallback");
    c_dois5->add_option("--m", s_m)->required();

    auto* c_gaps = app.add_subcommand("gaps", "maximal prime gap records up to a bound");
    c_gaps->add_option("--to", s_to)->required();

    auto* c_gap_bound =
        app.add_subcommand("gap-bound", "test every prime gap below N against ln^r(N)");
    c_gap_bound->add_option("--to", s_to)->required();
    c_gap_bound->add_option("--r", bound_r, "exponent of the log-power bound")->required();

    auto* c_bounds = app.add_subcommand(
        "bounds", "conditional bound calculus for a frontier alpha and log-scale beta");
    c_bounds->add_option("--alpha", s_alpha)->required();
    c_bounds->add_option("--log10-beta", log10_beta, "beta as its base-10 logarithm")->required();

    auto* c_selberg =
        app.add_subcommand("selberg", "short-interval prime density ratio at window ln^lambda(x)");
    c_selberg->add_option("--x", s_x)->required();
    c_selberg->add_option("--lambda", lambda)->required();

    auto* c_simulate = app.add_subcommand("simulate", "seeded random-model trials");
    c_simulate->add_option("--from", s_from)->default_val("3");
    c_simulate->add_option("--to", s_to)->required();
    c_simulate->add_option("--seed", s_seed)->default_val("0");
    c_simulate->add_option("--trials", trials)->default_val(1);

    auto* c_mertens = app.add_subcommand("mertens", "prime product prod_{s<=z} (1 - 1/s)");
    c_mertens->add_option("--z", s_z)->required();

    auto* c_maier = app.add_subcommand(
        "maier", "sieved density 1/prod(1-1/s) at threshold sqrt(n) versus ln n");
    c_maier->add_option("--n", s_n)->required();

    auto* c_fcheck = app.add_subcommand("fcheck", "survival-function estimator on (x, x+y]");
    c_fcheck->add_option("--x", s_x)->required();
    c_fcheck->add_option("--y", s_y)->required();
    c_fcheck->add_option("--q", s_q)->required();

    // subcommands with a tabular form take --format; simulate and gaps
    // default to CSV, the rest to JSON
    std::string format;
    for (auto* sub : {c_goldbach, c_ternary, c_gaps, c_simulate})
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // --quiet/--threads may appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "primelab: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    ctx.command = sub->get_name();
    ctx.format = !format.empty() ? format
                 : (sub == c_simulate || sub == c_gaps) ? "csv"
                                                        : "json";
    ctx.params["threads"] = std::to_string(ctx.threads);
    ctx.params["format"] = ctx.format;

    const auto started = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (sub == c_sieve) {
            uint64_t from = parse_scaled_u64(s_from), to = parse_scaled_u64(s_to);
            uint64_t segment = s_segment.empty() ? 0 : parse_scaled_u64(s_segment);
            ctx.params["from"] = std::to_string(from);
            ctx.params["to"] = std::to_string(to);
            ctx.params["dump"] = dump ? "true" : "false";
            code = run_sieve(ctx, from, to, dump, segment);
        } else if (sub == c_goldbach || sub == c_ternary) {
            uint64_t from = parse_scaled_u64(s_from), to = parse_scaled_u64(s_to);
            ctx.params["from"] = std::to_string(from);
            ctx.params["to"] = std::to_string(to);
            code = sub == c_goldbach ? run_goldbach(ctx, from, to) : run_ternary(ctx, from, to);
        } else if (sub == c_tres2) {
            uint64_t n = parse_scaled_u64(s_n), alpha = parse_scaled_u64(s_alpha);
            ctx.params["n"] = std::to_string(n);
            ctx.params["alpha"] = std::to_string(alpha);
            code = run_tres2(ctx, n, alpha);
        } else if (sub == c_dois5) {
            uint64_t m = parse_scaled_u64(s_m);
            ctx.params["m"] = std::to_string(m);
            code = run_dois5(ctx, m);
        } else if (sub == c_gaps) {
            uint64_t to = parse_scaled_u64(s_to);
            ctx.params["to"] = std::to_string(to);
            code = run_gaps(ctx, to);
        } else if (sub == c_gap_bound) {
            uint64_t to = parse_scaled_u64(s_to);
            ctx.params["to"] = std::to_string(to);
            ctx.params["r"] = fmt_double(bound_r);
            code = run_gap_bound(ctx, to, bound_r);
        } else if (sub == c_bounds) {
            uint64_t alpha = parse_scaled_u64(s_alpha);
            ctx.params["alpha"] = std::to_string(alpha);
            ctx.params["log10_beta"] = fmt_double(log10_beta);
            code = run_bounds(ctx, alpha, log10_beta);
        } else if (sub == c_selberg) {
            uint64_t x = parse_scaled_u64(s_x);
            ctx.params["x"] = std::to_string(x);
            ctx.params["lambda"] = fmt_double(lambda);
            code = run_selberg(ctx, x, lambda);
        } else if (sub == c_simulate) {
            uint64_t from = parse_scaled_u64(s_from), to = parse_scaled_u64(s_to);
            uint64_t seed = parse_scaled_u64(s_seed);
            ctx.params["from"] = std::to_string(from);
            ctx.params["to"] = std::to_string(to);
            ctx.params["seed"] = std::to_string(seed);
            ctx.params["trials"] = std::to_string(trials);
            code = run_simulate(ctx, from, to, seed, trials);
        } else if (sub == c_mertens) {
            uint64_t z = parse_scaled_u64(s_z);
            ctx.params["z"] = std::to_string(z);
            code = run_mertens(ctx, z);
        } else if (sub == c_maier) {
            uint64_t n = parse_scaled_u64(s_n);
            ctx.params["n"] = std::to_string(n);
            code = run_maier(ctx, n);
        } else if (sub == c_fcheck) {
            uint64_t x = parse_scaled_u64(s_x), y = parse_scaled_u64(s_y),
                     q = parse_scaled_u64(s_q);
            ctx.params["x"] = std::to_string(x);
            ctx.params["y"] = std::to_string(y);
            ctx.params["q"] = std::to_string(q);
            code = run_fcheck(ctx, x, y, q);
        }
    } catch (const std::exception& e) {
        std::cerr << "primelab: " << e.what() << "\n";
        return 2;
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json manifest{{"command", ctx.command},
                  {"parameters", ctx.params},
                  {"tool_version", PRIMELAB_VERSION},
                  {"elapsed_seconds", elapsed},
                  {"output_digest", ctx.out.digest_hex()}};
    std::cerr << manifest.dump() << "\n";
    return code;
}
