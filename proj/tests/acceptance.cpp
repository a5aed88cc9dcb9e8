// Acceptance checks: one line per criterion, PASS/FAIL with key figures.
// Run with no arguments for all criteria, or pass criterion numbers to
// run a subset, e.g. `rado_acceptance 1 4 8`.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rado/core.hpp"
#include "rado/distrib.hpp"
#include "rado/search.hpp"
#include "rado/sweep.hpp"
#include "rado/theorems.hpp"
#include "rado/witness.hpp"

namespace {

using rado::i64;
using Clock = std::chrono::steady_clock;

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::optional<rado::SweepReport> g_sweep;

const rado::SweepReport& sweep_report() {
    if (!g_sweep) {
        rado::SweepSpec spec;
        spec.s_max = 7;
        spec.coeff_max = 4;
        spec.oracle_cap = 64;
        spec.node_budget = 8'000'000'000;
        spec.threads = 1;
        g_sweep = rado::run_sweep(spec);
    }
    return *g_sweep;
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

Verdict criterion1() {
    Verdict v;
    std::ostringstream d;
    bool ok = true;

    rado::Equation schur({1, 1}, 0);
    rado::SearchConfig cfg;
    cfg.n_max = 5;
    auto t0 = Clock::now();
    auto two = rado::rado_search(schur, cfg);
    double t_two = secs(t0);
    ok = ok && two.kind == rado::SearchKind::Found && two.n == 5 && t_two < 1.0;
    d << "s(2)=" << two.n << " in " << fmt("%.2f", t_two) << "s";

    cfg.r = 3;
    cfg.n_max = 14;
    cfg.node_budget = 4'000'000'000;
    t0 = Clock::now();
    auto three = rado::rado_search(schur, cfg);
    double t_three = secs(t0);
    ok = ok && three.kind == rado::SearchKind::Found && three.n == 14 && t_three < 60.0;
    d << ", s(3)=" << three.n << " in " << fmt("%.2f", t_three) << "s";

    for (i64 n : {44, 45}) {
        auto doc = rado::export_cnf(schur, n, 4);
        auto text = doc.to_dimacs();
        bool syntax = rado::cnf_syntax_ok(text);
        std::string path = "schur4_n" + std::to_string(n) + ".cnf";
        std::ofstream f(path, std::ios::binary);
        f << text;
        ok = ok && syntax && f.good();
        d << ", cnf n=" << n << " vars=" << doc.vars << " clauses=" << doc.clauses.size()
          << (syntax ? " ok" : " BAD");
    }

    v.pass = ok;
    v.detail = d.str();
    return v;
}

Verdict criterion2() {
    Verdict v;
    std::ostringstream d;
    bool ok = true;
    auto t0 = Clock::now();
    for (int m : {3, 4, 5}) {
        rado::Equation eq(std::vector<i64>(m - 1, 1), 0);
        const i64 want = i64{m} * m - m - 1;
        auto out = rado::rado_by_theorems(eq);
        bool exact = out.kind == rado::OutcomeKind::Exact && out.value() == want;
        rado::SearchConfig cfg;
        cfg.n_max = want;
        auto got = rado::rado_search(eq, cfg);
        bool oracle = got.kind == rado::SearchKind::Found && got.n == want;
        ok = ok && exact && oracle;
        d << "m=" << m << ":" << (exact ? "" : " dispatcher!") << (oracle ? "" : " oracle!")
          << want << " ";
    }
    double t = secs(t0);
    ok = ok && t < 120.0;
    d << "in " << fmt("%.1f", t) << "s";
    v.pass = ok;
    v.detail = d.str();
    return v;
}

Verdict criterion3() {
    Verdict v;
    auto t0 = Clock::now();
    const auto& rep = sweep_report();
    double t = secs(t0);

    i64 exact = 0, bounds = 0, dne = 0, unknown = 0;
    for (const auto& row : rep.rows) {
        if (row.outcome.kind == rado::OutcomeKind::Exact) ++exact;
        if (row.outcome.kind == rado::OutcomeKind::Bounds) ++bounds;
        if (row.outcome.kind == rado::OutcomeKind::DoesNotExist) ++dne;
        if (row.note == rado::OracleNote::Unknown) ++unknown;
    }
    v.pass = rep.disagreements == 0 && unknown == 0;
    std::ostringstream d;
    d << "rows=" << rep.rows.size() << " exact=" << exact << " bounds=" << bounds
      << " dne=" << dne << " unknown=" << unknown << " disagreements=" << rep.disagreements
      << " in " << fmt("%.0f", t) << "s";
    v.detail = d.str();
    return v;
}

Verdict criterion4() {
    Verdict v;
    i64 checked = 0, mismatches = 0;
    for (const auto& a : rado::canonical_multisets(12, 12))
        for (i64 t = 1; t <= 4; ++t) {
            ++checked;
            if (rado::is_t_distributable(a, t).holds != rado::is_t_distributable_bruteforce(a, t))
                ++mismatches;
        }
    v.pass = mismatches == 0;
    std::ostringstream d;
    d << "pairs=" << checked << " mismatches=" << mismatches;
    v.detail = d.str();
    return v;
}

Verdict criterion5() {
    Verdict v;
    i64 checked = 0, mismatches = 0;

    // every coefficient multiset with at most 8 entries from {1..4}
    std::vector<std::vector<i64>> sets;
    std::vector<i64> cur;
    auto gen = [&](auto&& self, i64 minv) -> void {
        if (!cur.empty()) sets.push_back(cur);
        if (cur.size() == 8) return;
        for (i64 x = minv; x <= 4; ++x) {
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    gen(gen, 1);

    for (const auto& a : sets) {
        const i64 S = std::accumulate(a.begin(), a.end(), i64{0});
        for (i64 t = 1; t <= 3; ++t) {
            // all nondecreasing target tuples summing to S
            std::vector<i64> tuple(static_cast<std::size_t>(t), 0);
            auto targets = [&](auto&& self, std::size_t pos, i64 rem, i64 minv) -> void {
                if (pos + 1 == tuple.size()) {
                    if (rem < minv) return;
                    tuple[pos] = rem;
                    rado::SdcQuery q(a, tuple);
                    ++checked;
                    if (rado::sdc(q) != rado::sdc_bruteforce(q)) ++mismatches;
                    return;
                }
                for (i64 x = minv; x * static_cast<i64>(tuple.size() - pos) <= rem; ++x) {
                    tuple[pos] = x;
                    self(self, pos + 1, rem - x, x);
                }
            };
            targets(targets, 0, S, 0);
        }
    }

    // the block-removal identity on randomized queries
    std::mt19937 rng(20240817);
    i64 identity_checked = 0, identity_failures = 0;
    for (int it = 0; it < 1000; ++it) {
        const std::size_t k = 1 + rng() % 8;
        std::vector<i64> a(k);
        for (auto& x : a) x = 1 + static_cast<i64>(rng() % 4);
        const std::size_t t = 1 + rng() % 3;
        const i64 S = std::accumulate(a.begin(), a.end(), i64{0});
        std::vector<i64> targets(t, 0);
        for (i64 u = 0; u < S; ++u) targets[rng() % t] += 1;
        if (rng() % 5 == 0) targets[rng() % t] += 1;  // off-sum queries count too

        rado::SdcQuery q(a, targets);
        rado::u128 lhs = rado::sdc(q);
        const i64 ak = a.back();
        std::vector<i64> rest(a.begin(), a.end() - 1);
        rado::u128 rhs = 0;
        for (std::size_t j = 0; j < t; ++j) {
            if (targets[j] < ak) continue;
            std::vector<i64> reduced = targets;
            reduced[j] -= ak;
            rhs += rado::sdc(rado::SdcQuery(rest, reduced));
        }
        ++identity_checked;
        if (lhs != rhs) ++identity_failures;
    }

    v.pass = mismatches == 0 && identity_failures == 0;
    std::ostringstream d;
    d << "bruteforce pairs=" << checked << " mismatches=" << mismatches
      << ", identity queries=" << identity_checked << " failures=" << identity_failures;
    v.detail = d.str();
    return v;
}

Verdict criterion6() {
    Verdict v;
    const auto& rep = sweep_report();
    i64 lowc = 0, lambdamu = 0, bigc = 0, twopoint = 0, modp = 0;
    i64 invalid = 0, exact_rows = 0, exact_missing = 0, exact_unproven = 0;

    for (const auto& row : rep.rows) {
        rado::Equation eq(row.coeffs, row.c);
        const i64 sg = eq.sigma();
        if (row.c < sg) {
            ++lowc;
            if (!rado::is_valid_colouring(eq, rado::witness_c_lt_S(eq))) ++invalid;
        }
        if (auto lm = rado::decompose(eq); lm && lm->family == rado::Family::A) {
            ++lambdamu;
            if (!rado::is_valid_colouring(eq, rado::witness_lambda_mu(eq, *lm)))
                ++invalid;
        }
        if (row.c > sg) {
            ++bigc;
            if (!rado::is_valid_colouring(eq, rado::witness_big_c(eq))) ++invalid;
        }
        if (row.c == 2 * row.S - 1 && row.S % 2 == 0) {
            ++twopoint;
            if (!rado::is_valid_colouring(eq, rado::witness_two_point(eq))) ++invalid;
        }

        if (row.outcome.kind == rado::OutcomeKind::Exact) {
            ++exact_rows;
            const i64 value = row.outcome.value();
            if (value > 1) {
                auto w = rado::witness_for_lower(eq);
                if (!w || !w->colouring || w->claim_lower != value ||
                    w->colouring->hi() != value - 1 || !rado::is_valid_colouring(eq, *w->colouring))
                    ++exact_missing;
            }
            if (row.note != rado::OracleNote::Value || row.oracle_n != value) ++exact_unproven;
        }
    }

    // mod-p certificates live on the odd-c complement of the sweep grid
    for (const auto& a : rado::canonical_multisets(7, 4)) {
        const i64 S = std::accumulate(a.begin(), a.end(), i64{0});
        if (S < 2 || (S - 1) % 2 != 0) continue;
        for (i64 c = -3 * S + (( -3 * S) % 2 == 0 ? 1 : 0); c <= S * (S - 1) + 3 * S; c += 2) {
            rado::Equation eq(a, c);
            if (!rado::nonexistence_guard(eq, 2)) continue;
            ++modp;
            if (!rado::is_valid_colouring(eq, rado::witness_mod_p(eq, 2).instantiate(200)))
                ++invalid;
        }
    }

    v.pass = invalid == 0 && exact_missing == 0 && exact_unproven == 0 && lowc > 0 &&
             lambdamu > 0 && bigc > 0 && twopoint > 0 && modp > 0;
    std::ostringstream d;
    d << "low-c=" << lowc << " lambda-mu=" << lambdamu << " big-c=" << bigc
      << " two-point=" << twopoint << " mod-p=" << modp << " invalid=" << invalid
      << ", exact rows=" << exact_rows << " missing-witness=" << exact_missing
      << " unproven=" << exact_unproven;
    v.detail = d.str();
    return v;
}

Verdict criterion7() {
    Verdict v;
    i64 resolved = 0, skipped = 0, violations = 0;
    auto t0 = Clock::now();
    for (const auto& a : rado::canonical_multisets(5, 5)) {
        const i64 sg = std::accumulate(a.begin(), a.end(), i64{0}) - 1;
        for (i64 c = -6; c <= 12; ++c)
            for (i64 lam : {i64{2}, i64{3}}) {
                rado::Equation base(a, c + sg), scaled(a, lam * c + sg);
                if (rado::nonexistence_guard(base, 2) || rado::nonexistence_guard(scaled, 2)) {
                    ++skipped;
                    continue;
                }
                rado::SearchConfig cfg;
                cfg.node_budget = 2'000'000'000;
                cfg.n_max = 150;
                auto r1 = rado::rado_search(base, cfg);
                if (r1.kind != rado::SearchKind::Found) {
                    ++skipped;
                    continue;
                }
                const i64 cap = 1 + lam * (r1.n - 1);
                cfg.n_max = cap;
                auto r2 = rado::rado_search(scaled, cfg);
                if (r2.kind == rado::SearchKind::Found) {
                    ++resolved;
                    if (r2.n > cap) ++violations;
                } else if (r2.kind == rado::SearchKind::NotFound) {
                    ++resolved;
                    ++violations;  // the scaled number provably exceeds the bound
                } else {
                    ++skipped;
                }
            }
    }
    v.pass = violations == 0 && resolved > 0;
    std::ostringstream d;
    d << "resolved=" << resolved << " skipped=" << skipped << " violations=" << violations
      << " in " << fmt("%.0f", secs(t0)) << "s";
    v.detail = d.str();
    return v;
}

Verdict criterion8() {
    Verdict v;
    std::mt19937 rng(98765);
    i64 checked = 0, failures = 0;
    for (int it = 0; it < 10000; ++it) {
        const std::size_t k = 1 + rng() % 4;
        std::vector<i64> a(k);
        for (auto& x : a) x = 1 + static_cast<i64>(rng() % 4);
        const i64 c = static_cast<i64>(rng() % 46) - 15;
        rado::Equation eq(a, c);

        const i64 lo = static_cast<i64>(rng() % 13) - 4;
        const i64 hi = lo + static_cast<i64>(rng() % 24);
        const int r = 2 + static_cast<int>(rng() % 3);
        rado::Colouring col(lo, hi, r);
        for (i64 x = lo; x <= hi; ++x) col.set(x, static_cast<int>(rng() % r));

        const bool v0 = rado::is_valid_colouring(eq, col);
        ++checked;

        auto down = rado::shift_down(col);
        auto up = rado::shift_up(down);
        bool ok = up == col && rado::is_valid_colouring(eq, up) == v0;

        // one step down is validity-equivalent against the shifted constant
        rado::Equation eq_down(a, c - eq.sigma());
        ok = ok && rado::is_valid_colouring(eq_down, down) == v0;

        const i64 pivot = lo + hi;
        auto refl = rado::complement(col, pivot);
        auto back = rado::complement(refl, pivot);
        ok = ok && back == col && rado::is_valid_colouring(eq, back) == v0;

        // one reflection is validity-equivalent against the reflected constant
        rado::Equation eq_refl(a, rado::reflected_constant(eq, pivot));
        ok = ok && rado::is_valid_colouring(eq_refl, refl) == v0;

        if (!ok) ++failures;
    }
    v.pass = failures == 0;
    std::ostringstream d;
    d << "colourings=" << checked << " failures=" << failures;
    v.detail = d.str();
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));
    if (chosen.empty()) chosen = {1, 2, 3, 4, 5, 6, 7, 8};

    Verdict (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (int n = 1; n <= 8; ++n) {
        if (!chosen.count(n)) continue;
        Verdict v = criteria[n - 1]();
        std::printf("criterion %d: %s -- %s\n", n, v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
