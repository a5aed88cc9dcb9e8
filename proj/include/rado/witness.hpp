#pragma once

// Constructive certificates: the block colourings behind each lower bound,
// the mod-p rule behind nonexistence, and a selector that builds the witness
// matching the dispatcher's best lower bound.  Block colourings stated on
// [0, M-1] are emitted shifted to [1, M]; validity is always checked against
// the original equation.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rado/core.hpp"
#include "rado/search.hpp"
#include "rado/theorems.hpp"

namespace rado {

enum class WitnessKind { LowC, LambdaMuBlock, BigC, ModP, TwoPoint };

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::LowC: return "block-low-c";
        case WitnessKind::LambdaMuBlock: return "block-lambda-mu";
        case WitnessKind::BigC: return "block-big-c";
        case WitnessKind::ModP: return "mod-p";
        default: return "two-point";
    }
}

// c < S-1: colour 0 on [0, S-2-c] and [(S-1-c)(S+1), (S-1-c)(S+2)-1],
// colour 1 between; emitted over [1, (S-1-c)(S+2)]
inline Colouring witness_c_lt_S(const Equation& eq) {
    const i64 S = eq.S(), c = eq.c(), sg = eq.sigma();
    if (c >= sg) throw std::invalid_argument("witness_c_lt_S: need c < S-1");
    if ((c * S) % 2 != 0) throw std::invalid_argument("witness_c_lt_S: need cS even");
    const i64 M = (sg - c) * (S + 2);
    Colouring col(1, M, 2);
    for (i64 x = 0; x < M; ++x) {
        bool zero = x <= S - 2 - c || x >= (sg - c) * (S + 1);
        col.set(x + 1, zero ? 0 : 1);
    }
    return col;
}

// family A: colour 0 on [0, lambda-2], colour 1 on [lambda-1, lambda+mu-2];
// emitted over [1, lambda+mu-1]
inline Colouring witness_lambda_mu(const Equation& eq, const LambdaMu& lm) {
    if (lm.family != Family::A)
        throw std::invalid_argument("witness_lambda_mu: family A only");
    if (lm.lambda * (eq.S() - 1) - lm.mu != eq.c())
        throw std::invalid_argument("witness_lambda_mu: decomposition mismatch");
    const i64 M = lm.lambda + lm.mu - 1;
    Colouring col(1, M, 2);
    for (i64 x = 1; x <= M; ++x) col.set(x, x <= lm.lambda - 1 ? 0 : 1);
    return col;
}

// c > S-1: colour 0 on (max{0, S^2 T - c(S+1)}, ST - c] within [1, T],
// colour 1 elsewhere; all-1 when the 0-block is empty
inline Colouring witness_big_c(const Equation& eq) {
    const i64 S = eq.S(), c = eq.c();
    if (c <= S - 1) throw std::invalid_argument("witness_big_c: need c > S-1");
    const i64 T = big_t(eq);
    if (T < 1) throw std::invalid_argument("witness_big_c: empty domain");
    const i64 lo_excl = std::max<i64>(0, S * S * T - c * (S + 1));
    const i64 hi_incl = S * T - c;
    Colouring col(1, T, 2);
    for (i64 x = 1; x <= T; ++x) col.set(x, x > lo_excl && x <= hi_incl ? 0 : 1);
    return col;
}

// nonexistence rule x -> x mod p, instantiable over any [1, N]
struct ModPRule {
    i64 p = 2;
    Colouring instantiate(i64 n) const {
        Colouring col(1, n, static_cast<int>(p));
        for (i64 x = 1; x <= n; ++x) col.set(x, static_cast<int>(x % p));
        return col;
    }
};

inline ModPRule witness_mod_p(const Equation& eq, int r = 2) {
    if (!nonexistence_guard(eq, r))
        throw std::invalid_argument("witness_mod_p: nonexistence guard fails");
    i64 lcm = 1;
    for (i64 k = 2; k <= r; ++k) lcm = std::lcm(lcm, k);
    const i64 g = std::gcd(eq.sigma() < 0 ? -eq.sigma() : eq.sigma(), lcm);
    for (i64 p = 2; p <= g; ++p) {
        bool prime = true;
        for (i64 d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime && g % p == 0 && eq.c() % p != 0) return ModPRule{p};
    }
    throw std::invalid_argument("witness_mod_p: no qualifying prime");
}

// c = 2S-1 with S even: chi(1) != chi(2) is valid on [1, 2]
inline Colouring witness_two_point(const Equation& eq) {
    const i64 S = eq.S();
    if (eq.c() != 2 * S - 1 || S % 2 != 0)
        throw std::invalid_argument("witness_two_point: need c = 2S-1 with S even");
    Colouring col(1, 2, 2);
    col.set(1, 0);
    col.set(2, 1);
    return col;
}

struct Witness {
    WitnessKind kind = WitnessKind::LowC;
    std::optional<Colouring> colouring;  // over [1, claim_lower - 1]
    std::optional<ModPRule> rule;        // mod-p only
    i64 claim_lower = 0;                 // certifies Rad >= claim_lower when > 0
    bool nonexistence = false;
    std::vector<i64> params;
};

// the witness certifying the dispatcher's best lower bound (or nonexistence);
// none when the bound is the trivial Rad >= 1
inline std::optional<Witness> witness_for_lower(const Equation& eq) {
    auto out = rado_by_theorems(eq);
    if (out.kind == OutcomeKind::DoesNotExist) {
        Witness w;
        w.kind = WitnessKind::ModP;
        w.rule = witness_mod_p(eq, 2);
        w.nonexistence = true;
        w.params = {w.rule->p};
        return w;
    }
    if (!out.lower || *out.lower <= 1) return std::nullopt;
    const i64 lower = *out.lower;
    Witness w;
    w.claim_lower = lower;
    if (eq.c() < eq.sigma()) {
        w.kind = WitnessKind::LowC;
        w.colouring = witness_c_lt_S(eq);
        w.params = {eq.sigma() - eq.c()};
    } else {
        auto lm = eq.S() >= 2 ? decompose(eq) : std::nullopt;
        if (lm && lm->family == Family::A && lm->lambda + lm->mu == lower) {
            w.kind = WitnessKind::LambdaMuBlock;
            w.colouring = witness_lambda_mu(eq, *lm);
            w.params = {lm->lambda, lm->mu};
        } else {
            w.kind = WitnessKind::BigC;
            w.colouring = witness_big_c(eq);
            w.params = {big_t(eq)};
        }
    }
    if (w.colouring->hi() != lower - 1)
        throw contradiction_error("witness_for_lower: witness length mismatch");
    return w;
}

inline nlohmann::json witness_to_json(const Equation& eq, const Witness& w) {
    nlohmann::json j;
    j["coeffs"] = eq.coeffs();
    j["c"] = eq.c();
    j["kind"] = witness_kind_name(w.kind);
    j["colouring"] = w.colouring ? nlohmann::json(w.colouring->to_text()) : nlohmann::json(nullptr);
    if (w.nonexistence)
        j["claim"] = {{"nonexistence", true}};
    else
        j["claim"] = {{"lower", w.claim_lower}};
    j["params"] = w.params;
    return j;
}

}  // namespace rado
