#pragma once
// Core types and the validity oracle for equations
//   a1*x1 + ... + a_{m-1}*x_{m-1} - x_m = c
// over integer intervals: colourings, reachable sums, monochromatic
// solution detection, and the shift / reflection transforms every other
// module leans on.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rado {

using i64 = std::int64_t;

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// thrown when two closed-form rules contradict each other (should never fire)
struct contradiction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// default guard on |sum| for the reachable-sum machinery
inline constexpr i64 kSumCapacity = i64{1} << 24;
// guard on colouring interval width (allocation safety)
inline constexpr i64 kMaxIntervalWidth = i64{1} << 26;

// a1*x1 + ... + a_k*x_k - x_m = c with all a_i >= 1; coefficients are a
// multiset, kept sorted ascending.
class Equation {
  public:
    Equation(std::vector<i64> coeffs, i64 c) : coeffs_(std::move(coeffs)), c_(c) {
        if (coeffs_.empty())
            throw std::invalid_argument("Equation: coefficient list must be nonempty");
        for (i64 a : coeffs_)
            if (a < 1)
                throw std::invalid_argument("Equation: coefficients must be positive");
        std::sort(coeffs_.begin(), coeffs_.end());
        S_ = 0;
        for (i64 a : coeffs_) S_ += a;
    }

    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 c() const { return c_; }
    i64 S() const { return S_; }          // sum of the positive coefficients
    i64 sigma() const { return S_ - 1; }  // S - 1 (includes the trailing -1)
    std::size_t m() const { return coeffs_.size() + 1; }

    bool operator==(const Equation& o) const { return coeffs_ == o.coeffs_ && c_ == o.c_; }

  private:
    std::vector<i64> coeffs_;
    i64 c_;
    i64 S_;
};

// arbitrary nonzero integer coefficients, full form sum a_i*x_i = c;
// only the search oracle accepts this generality.
struct GeneralEquation {
    std::vector<i64> coeffs;
    i64 c = 0;

    GeneralEquation(std::vector<i64> cs, i64 cc) : coeffs(std::move(cs)), c(cc) {
        if (coeffs.empty())
            throw std::invalid_argument("GeneralEquation: coefficient list must be nonempty");
        for (i64 a : coeffs)
            if (a == 0)
                throw std::invalid_argument("GeneralEquation: coefficients must be nonzero");
    }
};

inline GeneralEquation general_form(const Equation& eq) {
    std::vector<i64> cs = eq.coeffs();
    cs.push_back(-1);
    return GeneralEquation(std::move(cs), eq.c());
}

// colouring of the integer interval [lo, hi] with colours 0..r-1;
// bit-packed for r = 2, byte-per-point otherwise.
class Colouring {
  public:
    Colouring(i64 lo, i64 hi, int r = 2) : lo_(lo), hi_(hi), r_(r) {
        if (lo > hi) throw std::invalid_argument("Colouring: lo > hi");
        if (r < 1) throw std::invalid_argument("Colouring: need r >= 1");
        i64 n = hi - lo + 1;
        if (n > kMaxIntervalWidth) throw capacity_error("Colouring: interval too wide");
        if (r_ == 2)
            bits_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
        else
            bytes_.assign(static_cast<std::size_t>(n), 0);
    }

    i64 lo() const { return lo_; }
    i64 hi() const { return hi_; }
    int r() const { return r_; }
    i64 size() const { return hi_ - lo_ + 1; }

    int colour(i64 x) const {
        check_range(x);
        std::size_t i = static_cast<std::size_t>(x - lo_);
        if (r_ == 2) return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1u);
        return bytes_[i];
    }

    void set(i64 x, int q) {
        check_range(x);
        if (q < 0 || q >= r_) throw std::invalid_argument("Colouring: colour out of range");
        std::size_t i = static_cast<std::size_t>(x - lo_);
        if (r_ == 2) {
            uint64_t m = uint64_t{1} << (i & 63);
            if (q)
                bits_[i >> 6] |= m;
            else
                bits_[i >> 6] &= ~m;
        } else {
            bytes_[i] = static_cast<std::uint8_t>(q);
        }
    }

    // "lo..hi:digits", one digit per point; only defined for r <= 10
    std::string to_text() const {
        if (r_ > 10) throw std::invalid_argument("Colouring: text format needs r <= 10");
        std::string s = std::to_string(lo_) + ".." + std::to_string(hi_) + ":";
        for (i64 x = lo_; x <= hi_; ++x) s.push_back(static_cast<char>('0' + colour(x)));
        return s;
    }

    static Colouring from_text(const std::string& text) {
        auto dots = text.find("..");
        auto colon = text.find(':');
        if (dots == std::string::npos || colon == std::string::npos || colon < dots)
            throw std::invalid_argument("Colouring: malformed text, want lo..hi:digits");
        i64 lo = parse_i64(text.substr(0, dots));
        i64 hi = parse_i64(text.substr(dots + 2, colon - dots - 2));
        std::string digits = text.substr(colon + 1);
        if (lo > hi) throw std::invalid_argument("Colouring: lo > hi");
        if (static_cast<i64>(digits.size()) != hi - lo + 1)
            throw std::invalid_argument("Colouring: digit count does not match interval");
        int maxd = 0;
        for (char ch : digits) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("Colouring: colours must be digits 0-9");
            maxd = std::max(maxd, ch - '0');
        }
        Colouring col(lo, hi, std::max(2, maxd + 1));
        for (i64 x = lo; x <= hi; ++x) col.set(x, digits[static_cast<std::size_t>(x - lo)] - '0');
        return col;
    }

    bool operator==(const Colouring& o) const {
        if (lo_ != o.lo_ || hi_ != o.hi_ || r_ != o.r_) return false;
        for (i64 x = lo_; x <= hi_; ++x)
            if (colour(x) != o.colour(x)) return false;
        return true;
    }

  private:
    void check_range(i64 x) const {
        if (x < lo_ || x > hi_) throw std::invalid_argument("Colouring: point outside interval");
    }
    static i64 parse_i64(const std::string& s) {
        i64 v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw std::invalid_argument("Colouring: bad integer '" + s + "'");
        return v;
    }

    i64 lo_, hi_;
    int r_;
    std::vector<uint64_t> bits_;
    std::vector<std::uint8_t> bytes_;
};

// one monochromatic solution: values[i] pairs with coeffs()[i], xm is the
// subtracted variable, everything carries the stated colour.
struct MonoSolution {
    std::vector<i64> values;
    i64 xm = 0;
    int colour = 0;
};

inline bool solution_satisfies(const Equation& eq, const MonoSolution& s) {
    if (s.values.size() != eq.coeffs().size()) return false;
    i64 acc = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i) acc += eq.coeffs()[i] * s.values[i];
    return acc - s.xm == eq.c();
}

inline bool solution_monochromatic(const MonoSolution& s, const Colouring& col) {
    for (i64 v : s.values)
        if (v < col.lo() || v > col.hi() || col.colour(v) != s.colour) return false;
    return s.xm >= col.lo() && s.xm <= col.hi() && col.colour(s.xm) == s.colour;
}

inline std::vector<i64> class_points(const Colouring& col, int q) {
    std::vector<i64> v;
    for (i64 x = col.lo(); x <= col.hi(); ++x)
        if (col.colour(x) == q) v.push_back(x);
    return v;
}

namespace detail {

// layered set-convolution over the positive coefficients: layer j holds the
// sums a1*v1+...+aj*vj with all v in the class.  pred (optional) remembers,
// per newly reached sum, the smallest class value that reached it first, so
// witnesses back-trace deterministically.
struct SumDp {
    std::vector<i64> lo, hi;                      // per-layer sum range, layer 0..k
    std::vector<std::vector<uint64_t>> bits;      // layer bitsets
    std::vector<std::vector<std::int32_t>> pred;  // class-value index per bit, -1 unset

    bool test(std::size_t layer, i64 sum) const {
        if (sum < lo[layer] || sum > hi[layer]) return false;
        std::size_t b = static_cast<std::size_t>(sum - lo[layer]);
        return (bits[layer][b >> 6] >> (b & 63)) & 1u;
    }
};

inline SumDp run_sum_dp(const std::vector<i64>& coeffs, const std::vector<i64>& values,
                        bool want_pred, i64 cap) {
    const std::size_t k = coeffs.size();
    SumDp dp;
    dp.lo.resize(k + 1);
    dp.hi.resize(k + 1);
    dp.bits.resize(k + 1);
    if (want_pred) dp.pred.resize(k + 1);
    dp.lo[0] = dp.hi[0] = 0;
    dp.bits[0] = {1};  // just the empty sum 0
    for (std::size_t j = 1; j <= k; ++j) {
        dp.lo[j] = dp.lo[j - 1] + coeffs[j - 1] * values.front();
        dp.hi[j] = dp.hi[j - 1] + coeffs[j - 1] * values.back();
        if (std::max(std::llabs(dp.lo[j]), std::llabs(dp.hi[j])) > cap)
            throw capacity_error("reachable sums exceed the configured capacity");
        i64 width = dp.hi[j] - dp.lo[j] + 1;
        dp.bits[j].assign(static_cast<std::size_t>((width + 63) / 64), 0);
        if (want_pred) dp.pred[j].assign(static_cast<std::size_t>(width), -1);
        const auto& src = dp.bits[j - 1];
        const i64 src_width = dp.hi[j - 1] - dp.lo[j - 1] + 1;
        auto& dst = dp.bits[j];
        for (std::size_t vi = 0; vi < values.size(); ++vi) {
            // shift the previous layer by a_j * v and OR it in; values scan
            // ascending so the first setter of a bit is the smallest value
            i64 delta = dp.lo[j - 1] + coeffs[j - 1] * values[vi] - dp.lo[j];
            std::size_t word_off = static_cast<std::size_t>(delta >> 6);
            unsigned bit_off = static_cast<unsigned>(delta & 63);
            std::size_t src_words = src.size();
            for (std::size_t w = 0; w < src_words; ++w) {
                uint64_t chunk = src[w];
                if (!chunk) continue;
                uint64_t lo_part = chunk << bit_off;
                uint64_t hi_part = bit_off ? (chunk >> (64 - bit_off)) : 0;
                for (int half = 0; half < 2; ++half) {
                    uint64_t piece = half ? hi_part : lo_part;
                    std::size_t dw = word_off + w + static_cast<std::size_t>(half);
                    if (!piece || dw >= dst.size()) continue;
                    if (want_pred) {
                        uint64_t fresh = piece & ~dst[dw];
                        dst[dw] |= piece;
                        while (fresh) {
                            unsigned b = static_cast<unsigned>(__builtin_ctzll(fresh));
                            fresh &= fresh - 1;
                            dp.pred[j][(dw << 6) + b] = static_cast<std::int32_t>(vi);
                        }
                    } else {
                        dst[dw] |= piece;
                    }
                }
            }
            (void)src_width;
        }
        // clear slack bits in the last word so later layers see no phantom sums
        unsigned tail = static_cast<unsigned>(width & 63);
        if (tail) dst.back() &= (uint64_t{1} << tail) - 1;
    }
    return dp;
}

inline std::vector<i64> collect_sums(const SumDp& dp) {
    const auto& top = dp.bits.back();
    std::vector<i64> out;
    for (std::size_t w = 0; w < top.size(); ++w) {
        uint64_t chunk = top[w];
        while (chunk) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(chunk));
            chunk &= chunk - 1;
            i64 sum = dp.lo.back() + static_cast<i64>((w << 6) + b);
            if (sum <= dp.hi.back()) out.push_back(sum);
        }
    }
    return out;
}

}  // namespace detail

// all sums a1*v1+...+ak*vk with every v_i drawn from the class (repetition
// allowed), as a sorted vector
inline std::vector<i64> reachable_sums(const Equation& eq, std::vector<i64> cls,
                                       i64 cap = kSumCapacity) {
    if (cls.empty()) throw std::invalid_argument("reachable_sums: class must be nonempty");
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    return detail::collect_sums(detail::run_sum_dp(eq.coeffs(), cls, false, cap));
}

// deterministic monochromatic-solution finder: colours ascending, then the
// smallest reachable sum whose x_m lands in the same class, witness values
// back-traced smallest-first per layer.
inline std::optional<MonoSolution> find_mono_solution(const Equation& eq, const Colouring& col,
                                                      i64 cap = kSumCapacity) {
    const auto& coeffs = eq.coeffs();
    const std::size_t k = coeffs.size();
    for (int q = 0; q < col.r(); ++q) {
        std::vector<i64> cls = class_points(col, q);
        if (cls.empty()) continue;
        detail::SumDp dp = detail::run_sum_dp(coeffs, cls, true, cap);
        const auto& top = dp.bits[k];
        for (std::size_t w = 0; w < top.size(); ++w) {
            uint64_t chunk = top[w];
            while (chunk) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(chunk));
                chunk &= chunk - 1;
                i64 s = dp.lo[k] + static_cast<i64>((w << 6) + b);
                if (s > dp.hi[k]) break;
                i64 xm = s - eq.c();
                if (xm < col.lo() || xm > col.hi() || col.colour(xm) != q) continue;
                MonoSolution sol;
                sol.colour = q;
                sol.xm = xm;
                sol.values.assign(k, 0);
                i64 rest = s;
                for (std::size_t j = k; j >= 1; --j) {
                    std::int32_t vi = dp.pred[j][static_cast<std::size_t>(rest - dp.lo[j])];
                    sol.values[j - 1] = cls[static_cast<std::size_t>(vi)];
                    rest -= coeffs[j - 1] * cls[static_cast<std::size_t>(vi)];
                }
                return sol;
            }
        }
    }
    return std::nullopt;
}

inline bool is_valid_colouring(const Equation& eq, const Colouring& col, i64 cap = kSumCapacity) {
    return !find_mono_solution(eq, col, cap).has_value();
}

// a colouring of [1,N] is valid for constant c exactly when its shift to
// [0,N-1] is valid for constant c - sigma
inline Equation shift_down(const Equation& eq) {
    return Equation(eq.coeffs(), eq.c() - eq.sigma());
}

inline Colouring shift_down(const Colouring& col) {
    Colouring out(col.lo() - 1, col.hi() - 1, col.r());
    for (i64 x = col.lo(); x <= col.hi(); ++x) out.set(x - 1, col.colour(x));
    return out;
}

inline Colouring shift_up(const Colouring& col) {
    Colouring out(col.lo() + 1, col.hi() + 1, col.r());
    for (i64 x = col.lo(); x <= col.hi(); ++x) out.set(x + 1, col.colour(x));
    return out;
}

// reflect the interval through pivot = lo + hi; solutions for constant c map
// to solutions for constant reflected_constant(eq, pivot)
inline Colouring complement(const Colouring& col, i64 pivot) {
    if (pivot != col.lo() + col.hi())
        throw std::invalid_argument("complement: pivot must be lo + hi");
    Colouring out(col.lo(), col.hi(), col.r());
    for (i64 x = col.lo(); x <= col.hi(); ++x) out.set(x, col.colour(pivot - x));
    return out;
}

inline i64 reflected_constant(const Equation& eq, i64 pivot) {
    return eq.sigma() * pivot - eq.c();
}

inline std::string equation_to_string(const Equation& eq) {
    std::string s;
    for (std::size_t i = 0; i < eq.coeffs().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(eq.coeffs()[i]);
    }
    s += "; c=" + std::to_string(eq.c());
    return s;
}

}  // namespace rado
