#include "doctest.h"

#include "rado/search.hpp"
#include "rado/theorems.hpp"

#include <set>

using namespace rado;

namespace {

Equation E(std::vector<i64> a, i64 c) { return Equation(std::move(a), c); }

}  // namespace

TEST_CASE("decompose classifies c against the lambda-mu families") {
    auto a = decompose(E({1, 1, 2}, 8));  // S=4
    REQUIRE(a.has_value());
    CHECK(a->family == Family::A);
    CHECK(a->lambda == 3);
    CHECK(a->mu == 1);

    auto b = decompose(E({1, 1, 1}, 6));  // S=3, c = lambda*(S-1) exactly
    REQUIRE(b.has_value());
    CHECK(b->family == Family::A);
    CHECK(b->lambda == 3);
    CHECK(b->mu == 0);

    auto d = decompose(E({1, 1, 1, 2}, 14));  // S=5, 14 in (12,15)
    REQUIRE(d.has_value());
    CHECK(d->family == Family::B);
    CHECK(d->lambda == 3);
    CHECK(d->mu == 1);

    // c = S(S-1) sits in family A with mu = 0
    auto e = decompose(E({1, 1, 2}, 12));
    REQUIRE(e.has_value());
    CHECK(e->family == Family::A);
    CHECK(e->lambda == 4);
    CHECK(e->mu == 0);

    // family B continues past S(S-1)
    auto f = decompose(E({1, 1, 1}, 100));
    REQUIRE(f.has_value());
    CHECK(f->family == Family::B);
    CHECK(f->lambda == 34);
    CHECK(f->mu == 2);

    CHECK_FALSE(decompose(E({1, 1, 1}, 5)).has_value());   // below both families
    CHECK_FALSE(decompose(E({1, 1, 1}, 9)).has_value());   // exact multiple of S
    CHECK_FALSE(decompose(E({1, 1, 1}, -4)).has_value());
    CHECK_THROWS_AS(decompose(E({1}, 3)), std::invalid_argument);
}

TEST_CASE("decompose matches interval membership checked independently") {
    // canonical lambda: ceil(c/(S-1)) for family A, ceil(c/S) for family B
    for (i64 S = 2; S <= 9; ++S) {
        std::vector<i64> coeffs(static_cast<std::size_t>(S), 1);
        for (i64 c = S; c <= 4 * S * S; ++c) {
            std::optional<LambdaMu> expect;
            int matches = 0;
            {
                i64 lam = (c + S - 2) / (S - 1), mu = lam * (S - 1) - c;
                if (lam >= 3 && lam <= S && mu >= 0 && mu <= S - lam) {
                    expect = LambdaMu{lam, mu, Family::A};
                    ++matches;
                }
            }
            {
                i64 lam = (c + S - 1) / S, mu = lam * S - c;
                if (lam >= 3 && mu >= 1 && mu <= lam - 1) {
                    expect = LambdaMu{lam, mu, Family::B};
                    ++matches;
                }
            }
            CHECK(matches <= 1);
            auto got = decompose(Equation(coeffs, c));
            REQUIRE(got.has_value() == expect.has_value());
            if (expect) {
                CHECK(*got == *expect);
                // family equation and range facts hold as stated
                if (got->family == Family::A) {
                    CHECK(c == got->lambda * (S - 1) - got->mu);
                    CHECK(got->lambda <= S);
                    CHECK(got->mu <= S - got->lambda);
                } else {
                    CHECK(c == got->lambda * S - got->mu);
                    CHECK(got->mu >= 1);
                    CHECK(got->mu <= got->lambda - 1);
                }
                CHECK(got->lambda >= 3);
            }
        }
    }
}

TEST_CASE("big_t frozen values") {
    CHECK(big_t(E({1, 1, 1}, 8)) == 3);
    CHECK(big_t(E({1, 1, 1}, 7)) == 3);
    CHECK(big_t(E({1, 1}, 2)) == 1);
    CHECK_THROWS_AS(big_t(E({1, 1}, 1)), std::invalid_argument);
    CHECK_THROWS_AS(big_t(E({1, 1, 1}, -1)), std::invalid_argument);
}

TEST_CASE("dispatcher: all-ones with c = 0 gives m^2 - m - 1") {
    for (i64 m = 3; m <= 6; ++m) {
        std::vector<i64> a(static_cast<std::size_t>(m - 1), 1);
        auto out = rado_by_theorems(Equation(a, 0));
        REQUIRE(out.kind == OutcomeKind::Exact);
        CHECK(out.value() == m * m - m - 1);
        CHECK(out.has_tag("exact:lowc-2dist"));
        CHECK_FALSE(out.all_r);
    }
}

TEST_CASE("dispatcher: lambda-mu family A exact rows") {
    auto mu0 = rado_by_theorems(E({1, 1, 2}, 9));
    REQUIRE(mu0.kind == OutcomeKind::Exact);
    CHECK(mu0.value() == 3);
    CHECK(mu0.has_tag("exact:lambda-mu:mu0"));
    CHECK(mu0.all_r);

    auto mu1 = rado_by_theorems(E({1, 1, 2}, 8));
    REQUIRE(mu1.kind == OutcomeKind::Exact);
    CHECK(mu1.value() == 4);
    CHECK(mu1.has_tag("exact:lambda-mu:mu1:2dist"));
    CHECK_FALSE(mu1.all_r);

    auto mu2 = rado_by_theorems(E({1, 1, 1, 2}, 10));
    REQUIRE(mu2.kind == OutcomeKind::Exact);
    CHECK(mu2.value() == 5);
    CHECK(mu2.has_tag("exact:lambda-mu:3dist"));

    // c = S(S-1) routes through family A, not the strict c > S(S-1) rule
    auto edge = rado_by_theorems(E({1, 1, 2}, 12));
    REQUIRE(edge.kind == OutcomeKind::Exact);
    CHECK(edge.value() == 4);
    CHECK(edge.has_tag("exact:lambda-mu:mu0"));
    CHECK_FALSE(edge.has_tag("exact:ceil:2dist"));
}

TEST_CASE("dispatcher: large c ceiling rows") {
    auto out = rado_by_theorems(E({1, 1, 1}, 8));
    REQUIRE(out.kind == OutcomeKind::Exact);
    CHECK(out.value() == 4);
    CHECK(out.has_tag("exact:ceil:2dist"));

    auto edge = rado_by_theorems(E({1, 1, 2}, 16));  // c = lambda*S: no family
    CHECK_FALSE(decompose(E({1, 1, 2}, 16)).has_value());
    REQUIRE(edge.kind == OutcomeKind::Exact);
    CHECK(edge.value() == 6);
    CHECK(edge.has_tag("exact:ceil:2dist"));

    // 2-distributable past S(S-1) promotes the ceiling bound even when the
    // family-B upper bound is out of reach
    auto big = rado_by_theorems(E({1, 1, 1}, 100));
    REQUIRE(big.kind == OutcomeKind::Exact);
    CHECK(big.value() == 46);
    CHECK(big.has_tag("exact:ceil:2dist"));
    CHECK_FALSE(big.has_tag("upper:lambda-mu-b:3dist"));
}

TEST_CASE("dispatcher: small exact rows and their tags") {
    auto one = rado_by_theorems(E({1, 1}, 1));
    REQUIRE(one.kind == OutcomeKind::Exact);
    CHECK(one.value() == 1);
    CHECK(one.has_tag("exact:c=sigma"));
    CHECK(one.all_r);

    auto two = rado_by_theorems(E({1, 1}, 2));
    REQUIRE(two.kind == OutcomeKind::Exact);
    CHECK(two.value() == 2);
    CHECK(two.has_tag("exact:c=2S-2"));
    CHECK(two.all_r);

    // c = 2S-1: both the direct row and the ceiling promotion fire and agree
    auto three = rado_by_theorems(E({1, 1}, 3));
    REQUIRE(three.kind == OutcomeKind::Exact);
    CHECK(three.value() == 3);
    CHECK(three.has_tag("exact:c=2S-1:2dist"));
    CHECK(three.has_tag("exact:ceil:2dist"));
    CHECK_FALSE(three.all_r);
}

TEST_CASE("dispatcher: bounds-only rows") {
    auto b1 = rado_by_theorems(E({1, 1, 1, 2}, 14));  // family B, lambda 3, mu 1
    REQUIRE(b1.kind == OutcomeKind::Bounds);
    CHECK(*b1.lower == 4);
    REQUIRE(b1.upper.has_value());
    CHECK(*b1.upper == 5);
    CHECK(b1.has_tag("lower:ceil"));
    CHECK(b1.has_tag("upper:lambda-mu-b:3dist"));

    auto b2 = rado_by_theorems(E({2, 2}, 0));  // not 2-distributable
    REQUIRE(b2.kind == OutcomeKind::Bounds);
    CHECK(*b2.lower == 19);
    CHECK_FALSE(b2.upper.has_value());
    CHECK(b2.has_tag("lower:lowc-blocks"));

    auto b3 = rado_by_theorems(E({1, 1, 2}, 4));  // mid range with 2-dist upper
    REQUIRE(b3.kind == OutcomeKind::Bounds);
    CHECK(*b3.lower == 2);
    REQUIRE(b3.upper.has_value());
    CHECK(*b3.upper == 5);
    CHECK(b3.has_tag("upper:mid:2dist"));
    CHECK(b3.has_tag("upper:S+1:3dist"));

    auto b4 = rado_by_theorems(E({2, 2}, 8));  // family A mu=1 without 2-dist
    REQUIRE(b4.kind == OutcomeKind::Bounds);
    CHECK(*b4.lower == 4);
    CHECK_FALSE(b4.upper.has_value());
    CHECK(b4.has_tag("lower:lambda-mu"));

    auto b5 = rado_by_theorems(E({1, 1, 3}, 10));  // family A mu=2 without 3-dist
    REQUIRE(b5.kind == OutcomeKind::Bounds);
    CHECK(*b5.lower == 5);
    CHECK_FALSE(b5.upper.has_value());
    CHECK(b5.has_tag("lower:lambda-mu"));

    auto b6 = rado_by_theorems(E({2, 2}, 14));  // family B, lambda too big
    REQUIRE(decompose(E({2, 2}, 14)).has_value());
    REQUIRE(b6.kind == OutcomeKind::Bounds);
    CHECK(*b6.lower == 5);
    CHECK_FALSE(b6.upper.has_value());
    CHECK_FALSE(b6.has_tag("upper:lambda-mu-b:3dist"));
}

TEST_CASE("dispatcher: parity nonexistence wins immediately") {
    auto d1 = rado_by_theorems(E({1, 1, 1}, 1));  // sigma = 2 even
    CHECK(d1.kind == OutcomeKind::DoesNotExist);
    CHECK(d1.all_r);
    CHECK(d1.has_tag("parity"));
    CHECK(d1.provenance.size() == 1);

    auto d2 = rado_by_theorems(E({1, 2}, -3));
    CHECK(d2.kind == OutcomeKind::DoesNotExist);

    // sigma odd: no parity obstruction even for odd c
    CHECK(rado_by_theorems(E({1, 1}, 3)).kind == OutcomeKind::Exact);
}

TEST_CASE("dispatcher: single-coefficient equations only keep safe rows") {
    auto zero = rado_by_theorems(E({1}, 0));
    REQUIRE(zero.kind == OutcomeKind::Exact);
    CHECK(zero.value() == 1);
    CHECK(zero.all_r);

    CHECK(rado_by_theorems(E({1}, 1)).kind == OutcomeKind::DoesNotExist);

    auto neg = rado_by_theorems(E({1}, -2));  // x - y = -2 has no finite number
    REQUIRE(neg.kind == OutcomeKind::Bounds);
    CHECK(*neg.lower == 7);
    CHECK_FALSE(neg.upper.has_value());

    auto pos = rado_by_theorems(E({1}, 2));
    REQUIRE(pos.kind == OutcomeKind::Bounds);
    CHECK(*pos.lower == 7);
    CHECK_FALSE(pos.upper.has_value());
}

TEST_CASE("dispatcher: min-1 2-distributable sets at c=0 give S^2+S-1") {
    std::vector<std::vector<i64>> sets = {
        {1, 1, 2}, {1, 1, 1, 2}, {1, 2, 2}, {1, 1, 2, 3}};
    for (const auto& a : sets) {
        Equation eq(a, 0);
        REQUIRE(is_t_distributable(a, 2).holds);
        auto out = rado_by_theorems(eq);
        REQUIRE(out.kind == OutcomeKind::Exact);
        CHECK(out.value() == eq.S() * eq.S() + eq.S() - 1);
    }
}

TEST_CASE("outcome JSON shape") {
    auto j = outcome_to_json(E({1, 1, 2}, 8), rado_by_theorems(E({1, 1, 2}, 8)));
    CHECK(j["coeffs"] == nlohmann::json({1, 1, 2}));
    CHECK(j["c"] == 8);
    CHECK(j["kind"] == "exact");
    CHECK(j["value"] == 4);
    CHECK(j["all_r"] == false);
    bool seen = false;
    for (const auto& t : j["provenance"])
        if (t == "exact:lambda-mu:mu1:2dist") seen = true;
    CHECK(seen);

    auto jb = outcome_to_json(E({2, 2}, 0), rado_by_theorems(E({2, 2}, 0)));
    CHECK(jb["kind"] == "bounds");
    CHECK(jb["lower"] == 19);
    CHECK(jb["upper"].is_null());
    CHECK_FALSE(jb.contains("value"));

    auto jd = outcome_to_json(E({1, 1, 1}, 1), rado_by_theorems(E({1, 1, 1}, 1)));
    CHECK(jd["kind"] == "does-not-exist");
    CHECK(jd["all_r"] == true);

    CHECK_THROWS_AS(rado_by_theorems(E({2, 2}, 0)).value(), std::logic_error);
}

TEST_CASE("dispatcher agrees with exhaustive search on small equations") {
    std::vector<std::vector<i64>> sets = {{1}, {2}, {3},       {1, 1},      {1, 2},
                                          {4}, {1, 3}, {2, 2}, {1, 1, 1},   {1, 1, 2}};
    for (const auto& a : sets) {
        Equation probe(a, 0);
        const i64 S = probe.S();
        for (i64 c = -6; c <= S * (S - 1) + 6; ++c) {
            if ((c * S) % 2 != 0) continue;
            Equation eq(a, c);
            auto out = rado_by_theorems(eq);
            CAPTURE(equation_to_string(eq));
            if (out.kind == OutcomeKind::DoesNotExist) {
                CHECK(nonexistence_guard(eq));
                SearchConfig cfg;
                cfg.n_max = 30;
                CHECK(rado_search(eq, cfg).kind == SearchKind::NotFound);
            } else if (out.kind == OutcomeKind::Exact) {
                SearchConfig cfg;
                cfg.n_max = out.value();
                auto got = rado_search(eq, cfg);
                REQUIRE(got.kind == SearchKind::Found);
                CHECK(got.n == out.value());
            } else {
                REQUIRE(out.kind == OutcomeKind::Bounds);
                SearchConfig cfg;
                cfg.n_max = out.upper ? *out.upper : *out.lower + 8;
                auto got = rado_search(eq, cfg);
                if (got.kind == SearchKind::Found) {
                    CHECK(got.n >= *out.lower);
                    if (out.upper) CHECK(got.n <= *out.upper);
                } else {
                    // no Rado number up to the cap: an upper bound would be wrong
                    CHECK(got.kind == SearchKind::NotFound);
                    CHECK_FALSE(out.upper.has_value());
                }
            }
        }
    }
}
