#pragma once

// Set distribution coefficients and t-distributability: a closed-form test
// plus independent brute-force checkers used to validate it.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rado/core.hpp"

namespace rado {

using u128 = unsigned __int128;

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// counts ordered partitions of the coefficient positions into labelled
// blocks 1..t with prescribed block sums; empty coefficient lists are allowed
struct SdcQuery {
    std::vector<i64> coeffs;
    std::vector<i64> targets;

    SdcQuery(std::vector<i64> cs, std::vector<i64> ts)
        : coeffs(std::move(cs)), targets(std::move(ts)) {
        for (i64 a : coeffs)
            if (a < 1) throw std::invalid_argument("SdcQuery: coefficients must be positive");
        for (i64 t : targets)
            if (t < 0) throw std::invalid_argument("SdcQuery: targets must be nonnegative");
        if (targets.empty()) throw std::invalid_argument("SdcQuery: need at least one target");
    }
};

namespace detail {

inline u128 checked_add(u128 a, u128 b) {
    u128 s = a + b;
    if (s < a) throw overflow_error("sdc: count overflows 128 bits");
    return s;
}

struct SdcMemo {
    // key: (number of coefficients still unplaced, remaining targets sorted
    // descending) -- target order is irrelevant to the count
    std::map<std::pair<std::size_t, std::vector<i64>>, u128> table;
};

inline u128 sdc_rec(const std::vector<i64>& coeffs, std::size_t k, std::vector<i64> remaining,
                    SdcMemo& memo) {
    if (k == 0) {
        for (i64 t : remaining)
            if (t != 0) return 0;
        return 1;
    }
    std::sort(remaining.begin(), remaining.end(), std::greater<i64>());
    auto key = std::make_pair(k, remaining);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;

    i64 a = coeffs[k - 1];
    u128 total = 0;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (remaining[j] < a) continue;
        std::vector<i64> next = remaining;
        next[j] -= a;
        total = checked_add(total, sdc_rec(coeffs, k - 1, std::move(next), memo));
    }
    memo.table.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

inline u128 sdc(const SdcQuery& q) {
    i64 csum = 0, tsum = 0;
    for (i64 a : q.coeffs) csum += a;
    for (i64 t : q.targets) tsum += t;
    if (csum != tsum) return 0;
    std::vector<i64> coeffs = q.coeffs;
    std::sort(coeffs.begin(), coeffs.end());
    detail::SdcMemo memo;
    return detail::sdc_rec(coeffs, coeffs.size(), q.targets, memo);
}

// literal enumeration of all t^k position->block assignments
inline u128 sdc_bruteforce(const SdcQuery& q, std::size_t k_cap = 16) {
    const std::size_t k = q.coeffs.size(), t = q.targets.size();
    if (k > k_cap) throw capacity_error("sdc_bruteforce: too many coefficients");
    std::vector<std::size_t> block(k, 0);
    u128 count = 0;
    while (true) {
        std::vector<i64> sums(t, 0);
        for (std::size_t i = 0; i < k; ++i) sums[block[i]] += q.coeffs[i];
        if (sums == q.targets) count = detail::checked_add(count, 1);
        std::size_t p = 0;
        while (p < k && ++block[p] == t) block[p++] = 0;
        if (p == k) break;
    }
    return count;
}

struct DistributabilityReport {
    std::vector<i64> coeffs;  // sorted nondecreasing, as checked
    i64 t = 1;
    bool holds = false;
    std::optional<std::size_t> failing_index;  // 1-based, first i with a_i > ceil(s_i/t)
    std::vector<i64> partial_sums;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["coeffs"] = coeffs;
        j["t"] = t;
        j["holds"] = holds;
        if (failing_index)
            j["failing_index"] = *failing_index;
        else
            j["failing_index"] = nullptr;
        return j;
    }
};

// closed-form criterion: with coeffs sorted nondecreasing and prefix sums
// s_i, the multiset is t-distributable iff a_i <= ceil(s_i/t) for every i
inline DistributabilityReport is_t_distributable(std::vector<i64> coeffs, i64 t) {
    if (coeffs.empty()) throw std::invalid_argument("is_t_distributable: empty coefficient list");
    if (t < 1) throw std::invalid_argument("is_t_distributable: need t >= 1");
    for (i64 a : coeffs)
        if (a < 1) throw std::invalid_argument("is_t_distributable: coefficients must be positive");
    std::sort(coeffs.begin(), coeffs.end());
    DistributabilityReport rep;
    rep.t = t;
    rep.holds = true;
    i64 s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        s += coeffs[i];
        rep.partial_sums.push_back(s);
        if (rep.holds && coeffs[i] > (s + t - 1) / t) {
            rep.holds = false;
            rep.failing_index = i + 1;
        }
    }
    rep.coeffs = std::move(coeffs);
    return rep;
}

namespace detail {

// existence-only exhaustive assignment search with capacity pruning; stays
// independent of the closed-form criterion
inline bool can_fill(const std::vector<i64>& coeffs, std::size_t next, std::vector<i64>& room) {
    if (next == coeffs.size()) {
        for (i64 r : room)
            if (r != 0) return false;
        return true;
    }
    i64 a = coeffs[next];  // coeffs sorted descending
    for (std::size_t j = 0; j < room.size(); ++j) {
        if (room[j] < a) continue;
        bool seen = false;  // identical residual capacity => identical subtree
        for (std::size_t p = 0; p < j; ++p)
            if (room[p] == room[j]) { seen = true; break; }
        if (seen) continue;
        room[j] -= a;
        if (can_fill(coeffs, next + 1, room)) { room[j] += a; return true; }
        room[j] += a;
    }
    return false;
}

}  // namespace detail

// definition-level check: every tuple of t nonnegative block sums adding up
// to the coefficient total must be achievable by some ordered partition
inline bool is_t_distributable_bruteforce(std::vector<i64> coeffs, i64 t, i64 sum_cap = 64) {
    if (coeffs.empty())
        throw std::invalid_argument("is_t_distributable_bruteforce: empty coefficient list");
    if (t < 1) throw std::invalid_argument("is_t_distributable_bruteforce: need t >= 1");
    i64 S = 0;
    for (i64 a : coeffs) {
        if (a < 1)
            throw std::invalid_argument(
                "is_t_distributable_bruteforce: coefficients must be positive");
        S += a;
    }
    if (S > sum_cap) throw capacity_error("is_t_distributable_bruteforce: sum too large");
    std::sort(coeffs.begin(), coeffs.end(), std::greater<i64>());

    // enumerate nondecreasing tuples (t1 <= ... <= tt) summing to S
    std::vector<i64> tuple(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, std::size_t pos, i64 remaining, i64 min_part) -> bool {
        if (pos + 1 == tuple.size()) {
            tuple[pos] = remaining;
            std::vector<i64> room = tuple;
            return detail::can_fill(coeffs, 0, room);
        }
        for (i64 v = min_part; v * static_cast<i64>(tuple.size() - pos) <= remaining; ++v) {
            tuple[pos] = v;
            if (!self(self, pos + 1, remaining - v, v)) return false;
        }
        return true;
    };
    return rec(rec, 0, S, 0);
}

// Brown's criterion, applied to the sorted multiset: u1 = 1 and every
// element is at most (sum of the earlier elements) + 1
inline bool is_complete_sequence(std::vector<i64> u) {
    if (u.empty()) throw std::invalid_argument("is_complete_sequence: empty sequence");
    for (i64 v : u)
        if (v < 1) throw std::invalid_argument("is_complete_sequence: elements must be positive");
    std::sort(u.begin(), u.end());
    if (u[0] != 1) return false;
    i64 s = u[0];
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i] > s + 1) return false;
        s += u[i];
    }
    return true;
}

}  // namespace rado
