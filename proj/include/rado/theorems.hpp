#pragma once

// Closed-form knowledge about two-colour Rado numbers of
// a_1 x_1 + ... + a_{m-1} x_{m-1} - x_m = c: exact values, bounds and
// nonexistence, dispatched by the position of c relative to S = sum(a_i).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rado/core.hpp"
#include "rado/distrib.hpp"

namespace rado {

enum class Family { A, B };

// c written against S: family A means c = lambda*(S-1) - mu with
// 3 <= lambda <= S and 0 <= mu <= S-lambda; family B means c = lambda*S - mu
// with lambda >= 3 and 1 <= mu <= lambda-1.
struct LambdaMu {
    i64 lambda = 0;
    i64 mu = 0;
    Family family = Family::A;
    bool operator==(const LambdaMu& o) const {
        return lambda == o.lambda && mu == o.mu && family == o.family;
    }
};

inline std::optional<LambdaMu> decompose(const Equation& eq) {
    const i64 S = eq.S(), c = eq.c();
    if (S < 2) throw std::invalid_argument("decompose: need S >= 2");
    if (c < 2 * S) return std::nullopt;  // both families start at lambda = 3
    // family A: c in [(lambda-1)S, lambda*S - lambda], lambda = ceil(c/(S-1))
    {
        i64 lam = (c + S - 2) / (S - 1);
        if (lam >= 3 && lam <= S) {
            i64 mu = lam * (S - 1) - c;
            if (mu >= 0 && mu <= S - lam) return LambdaMu{lam, mu, Family::A};
        }
    }
    // family B: c in (lambda*S - lambda, lambda*S), lambda = ceil(c/S)
    {
        i64 lam = (c + S - 1) / S;
        if (lam >= 3) {
            i64 mu = lam * S - c;
            if (mu >= 1 && mu <= lam - 1) return LambdaMu{lam, mu, Family::B};
        }
    }
    return std::nullopt;
}

// smallest useful block length for the c > S-1 lower bound:
// T = ceil((1 + c(S+2)) / (S^2 + S - 1)) - 1
inline i64 big_t(const Equation& eq) {
    const i64 S = eq.S(), c = eq.c();
    if (c <= S - 1) throw std::invalid_argument("big_t: need c > S-1");
    i64 num = 1 + c * (S + 2);
    i64 den = S * S + S - 1;
    return (num + den - 1) / den - 1;
}

enum class OutcomeKind { Exact, Bounds, DoesNotExist, Unknown };

inline const char* outcome_kind_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Exact: return "exact";
        case OutcomeKind::Bounds: return "bounds";
        case OutcomeKind::DoesNotExist: return "does-not-exist";
        default: return "unknown";
    }
}

// one theorem's contribution: the bound(s) it supplied under its tag
struct BoundNote {
    std::string tag;
    std::optional<i64> lower, upper;
};

struct RadoOutcome {
    OutcomeKind kind = OutcomeKind::Unknown;
    std::optional<i64> lower, upper;  // Exact: lower == upper == value
    bool all_r = false;               // holds for every r >= 2, not just r = 2
    std::vector<BoundNote> provenance;

    i64 value() const {
        if (kind != OutcomeKind::Exact)
            throw std::logic_error("RadoOutcome::value: outcome is not exact");
        return *lower;
    }
    bool has_tag(const std::string& t) const {
        for (const auto& n : provenance)
            if (n.tag == t) return true;
        return false;
    }
};

inline nlohmann::json outcome_to_json(const Equation& eq, const RadoOutcome& out) {
    nlohmann::json j;
    j["coeffs"] = eq.coeffs();
    j["c"] = eq.c();
    j["kind"] = outcome_kind_name(out.kind);
    if (out.kind == OutcomeKind::Exact) j["value"] = out.value();
    if (out.kind == OutcomeKind::Bounds) {
        j["lower"] = *out.lower;
        if (out.upper)
            j["upper"] = *out.upper;
        else
            j["upper"] = nullptr;
    }
    j["all_r"] = out.all_r;
    auto tags = nlohmann::json::array();
    for (const auto& n : out.provenance) tags.push_back(n.tag);
    j["provenance"] = tags;
    return j;
}

// The dispatcher: every applicable closed form contributes a bound, all are
// intersected, and exact hits win.  Formula rules beyond the parity test, the
// c = S-1 row and bare lower bounds assume at least two unknowns on the
// positive side (S >= 2); for S = 1 the conditional exact promotions are
// skipped because the equation x_1 - x_m = c has no finite Rado number for
// c != 0.
inline RadoOutcome rado_by_theorems(const Equation& eq) {
    const i64 S = eq.S(), c = eq.c(), sigma = eq.sigma();
    RadoOutcome out;

    // (0) sigma even and c odd: the mod-2 colouring kills every solution
    if (sigma % 2 == 0 && c % 2 != 0) {
        out.kind = OutcomeKind::DoesNotExist;
        out.all_r = true;
        out.provenance.push_back({"parity", std::nullopt, std::nullopt});
        return out;
    }

    const bool two_dist = is_t_distributable(eq.coeffs(), 2).holds;
    const bool three_dist = is_t_distributable(eq.coeffs(), 3).holds;

    std::optional<i64> best_lo, best_hi;
    struct ExactHit {
        i64 v;
        bool all_r;
    };
    std::vector<ExactHit> exacts;
    auto add_lower = [&](i64 v, const char* tag) {
        out.provenance.push_back({tag, v, std::nullopt});
        if (!best_lo || v > *best_lo) best_lo = v;
    };
    auto add_upper = [&](i64 v, const char* tag) {
        out.provenance.push_back({tag, std::nullopt, v});
        if (!best_hi || v < *best_hi) best_hi = v;
    };
    auto add_exact = [&](i64 v, const char* tag, bool allr) {
        out.provenance.push_back({tag, v, v});
        exacts.push_back({v, allr});
    };

    // (1) c = S-1: the singleton {1} already carries a solution
    if (c == sigma) add_exact(1, "exact:c=sigma", true);

    // (2) c < S-1: block colouring gives (S-1-c)(S+2)+1, tight when 2-distributable
    if (c < sigma) {
        i64 lo = (sigma - c) * (S + 2) + 1;
        add_lower(lo, "lower:lowc-blocks");
        if (S >= 2 && two_dist) add_exact(lo, "exact:lowc-2dist", false);
    }

    if (S >= 2) {
        // (3) c = 2S-2
        if (c == 2 * S - 2) add_exact(2, "exact:c=2S-2", true);
        // (4) c = 2S-1
        if (c == 2 * S - 1 && two_dist) add_exact(3, "exact:c=2S-1:2dist", false);
        // (5) c in [S, 2S-3]
        if (c >= S && c <= 2 * S - 3 && two_dist) add_upper(S + 1, "upper:mid:2dist");

        // (6)/(7) lambda-mu families
        if (auto lm = decompose(eq)) {
            if (lm->family == Family::A) {
                if (lm->mu == 0)
                    add_exact(lm->lambda, "exact:lambda-mu:mu0", true);
                else if (lm->mu == 1 && two_dist)
                    add_exact(lm->lambda + 1, "exact:lambda-mu:mu1:2dist", false);
                else if (lm->mu >= 2 && three_dist)
                    add_exact(lm->lambda + lm->mu, "exact:lambda-mu:3dist", false);
                else
                    add_lower(lm->lambda + lm->mu, "lower:lambda-mu");
            } else {
                if (lm->lambda <= (S + 2) / 2 && three_dist)
                    add_upper(2 * lm->lambda - lm->mu, "upper:lambda-mu-b:3dist");
            }
        }
    }

    // (8) c > S-1: interval lower bound, tight past S(S-1) when 2-distributable
    if (c > sigma) {
        i64 num = 1 + c * (S + 2);
        i64 den = S * S + S - 1;
        i64 lo = (num + den - 1) / den;
        add_lower(lo, "lower:ceil");
        if (S >= 2 && two_dist && c > S * (S - 1)) add_exact(lo, "exact:ceil:2dist", false);
    }

    // (9) c strictly between S-1 and S(S-1)
    if (S >= 2 && c > sigma && c < S * (S - 1) && three_dist)
        add_upper(S + 1, "upper:S+1:3dist");

    if (!exacts.empty()) {
        i64 v = exacts.front().v;
        for (const auto& e : exacts)
            if (e.v != v) throw contradiction_error("rado_by_theorems: exact values disagree");
        if ((best_lo && *best_lo > v) || (best_hi && *best_hi < v))
            throw contradiction_error("rado_by_theorems: exact value escapes bounds");
        out.kind = OutcomeKind::Exact;
        out.lower = out.upper = v;
        for (const auto& e : exacts)
            if (e.all_r) out.all_r = true;
        return out;
    }
    if (best_lo || best_hi) {
        if (best_lo && best_hi && *best_lo > *best_hi)
            throw contradiction_error("rado_by_theorems: crossed bounds");
        out.kind = OutcomeKind::Bounds;
        out.lower = best_lo ? *best_lo : 1;
        out.upper = best_hi;
        return out;
    }
    out.kind = OutcomeKind::Unknown;
    return out;
}

}  // namespace rado
