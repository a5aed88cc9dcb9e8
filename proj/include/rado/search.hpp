#pragma once

// Exhaustive search oracle.  A depth-first scan over colourings of 1..n_max
// rejects a branch as soon as the newest point completes a monochromatic
// solution; reachable partial sums per colour class are kept in windowed
// bitsets indexed by sub-multisets of the coefficients, so the per-node check
// and update are a handful of word operations.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "rado/core.hpp"

namespace rado {

struct SearchConfig {
    int r = 2;
    i64 n_max = 1;
    bool parallel = false;
    i64 node_budget = 1'000'000'000;
    int split_depth = 8;  // prefix length for parallel subtree splitting
    int threads = 0;      // 0 = hardware concurrency
};

// callers only consult the repair probe when the budget signals a serious
// search; tiny-budget runs keep the plain DFS outcome
inline constexpr i64 kProbeMinBudget = 200'000'000;

enum class SearchKind { Found, NotFound, BudgetExceeded };

struct SearchOutcome {
    SearchKind kind = SearchKind::NotFound;
    // Found: the minimal N with no valid colouring of [1,N]
    // BudgetExceeded: frontier depth when the budget ran out
    i64 n = 0;
    // Found with N > 1: lexicographically first valid colouring of [1,N-1];
    // NotFound: lexicographically first valid colouring of [1,n_max]
    std::optional<Colouring> certificate;
    i64 nodes = 0;
};

namespace detail {

// 64 bits of `w` (a bitset of `nbits` valid bits) starting at signed bit
// position `start`; out-of-range positions read as zero
inline uint64_t funnel_read(const uint64_t* w, i64 nwords, i64 start) {
    if (start <= -64 || start >= (nwords << 6)) return 0;
    i64 wi = start >> 6;  // floor division
    unsigned off = static_cast<unsigned>(start & 63);
    auto get = [&](i64 idx) -> uint64_t {
        return (idx < 0 || idx >= nwords) ? 0 : w[idx];
    };
    uint64_t out = get(wi) >> off;
    if (off) out |= get(wi + 1) << (64 - off);
    return out;
}

// One colour class's state: a stack of frames (one per inserted point), each
// frame holding every sub-multiset node's reachable-sum bitset.
class Engine {
  public:
    // coeffs: the multiset the reachability lattice ranges over.  With
    // virtual_xm the equation is sum(coeffs_i * x_i) - x_m = c (coeffs all
    // positive); otherwise sum(coeffs_i * x_i) = c with arbitrary signs.
    Engine(std::vector<i64> coeffs, bool virtual_xm, i64 c, i64 n_max, int r)
        : virtual_xm_(virtual_xm), c_(c), n_max_(n_max), r_(r) {
        if (n_max < 1) throw std::invalid_argument("Engine: need n_max >= 1");
        if (r < 1) throw std::invalid_argument("Engine: need r >= 1");
        std::sort(coeffs.begin(), coeffs.end());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) throw std::invalid_argument("Engine: zero coefficient");
            if (virtual_xm && coeffs[i] < 1)
                throw std::invalid_argument("Engine: expected positive coefficients");
            if (i && coeffs[i] == coeffs[i - 1])
                ++mult_.back();
            else {
                vals_.push_back(coeffs[i]);
                mult_.push_back(1);
            }
        }
        build_lattice();
        mem_words_ = static_cast<std::size_t>((n_max_ + 63) / 64);
        classes_.assign(static_cast<std::size_t>(r_), ClassState{});
        for (auto& cs : classes_) {
            cs.frames.assign(static_cast<std::size_t>(frame_words_) *
                                 static_cast<std::size_t>(n_max_ + 2),
                             0);
            cs.mem.assign(mem_words_, 0);
            seed_base_frame(cs.frames.data());
        }
    }

    i64 n_max() const { return n_max_; }
    int r() const { return r_; }

    // would colouring point n with colour q complete a monochromatic solution
    // whose maximum element is n?
    bool creates_solution(i64 n, int q) const {
        if (n < threshold_) return false;  // no solution fits inside [1, n] at all
        const ClassState& cs = classes_[static_cast<std::size_t>(q)];
        const uint64_t* top = cs.frames.data() +
                              static_cast<std::size_t>(cs.depth) *
                                  static_cast<std::size_t>(frame_words_);
        i64 p = cs.values.empty() ? 0 : cs.values.back();  // largest point in class
        for (const Node& nd : nodes_) {
            if (nd.nwords == 0) continue;
            if (nd.probe_xm) {
                i64 t = c_ + nd.xm_mult * n;
                if (t >= nd.wlo && t <= nd.whi) {
                    i64 b = t - nd.wlo;
                    if ((top[nd.off + (b >> 6)] >> (b & 63)) & 1u) return true;
                }
            }
            if (nd.probe_bit) {
                i64 t = c_ + nd.bit_mult * n;
                if (t >= nd.wlo && t <= nd.whi) {
                    i64 b = t - nd.wlo;
                    if ((top[nd.off + (b >> 6)] >> (b & 63)) & 1u) return true;
                }
            }
            if (nd.probe_arg && p > 0) {
                // x_m = s + arg_smult*n - c must be an existing class point;
                // intersect from whichever side holds fewer words
                i64 base = nd.wlo + nd.arg_smult * n - c_ - 1;
                i64 hi_word = active_hi_word(nd, p);
                const uint64_t* words = top + nd.off;
                i64 mem_hi = (p - 1) >> 6;
                if (mem_hi < hi_word) {
                    for (i64 w = 0; w <= mem_hi; ++w) {
                        uint64_t chunk = cs.mem[static_cast<std::size_t>(w)];
                        if (!chunk) continue;
                        uint64_t rc = funnel_read(words, nd.nwords, (w << 6) - base);
                        if (chunk & rc) return true;
                    }
                } else {
                    for (i64 w = 0; w <= hi_word; ++w) {
                        uint64_t chunk = words[w];
                        if (!chunk) continue;
                        uint64_t memc = funnel_read(cs.mem.data(),
                                                    static_cast<i64>(mem_words_),
                                                    base + (w << 6));
                        if (chunk & memc) return true;
                    }
                }
            }
        }
        return false;
    }

    void insert(i64 n, int q) {
        ClassState& cs = classes_[static_cast<std::size_t>(q)];
        const uint64_t* src = cs.frames.data() +
                              static_cast<std::size_t>(cs.depth) *
                                  static_cast<std::size_t>(frame_words_);
        uint64_t* dst = cs.frames.data() +
                        static_cast<std::size_t>(cs.depth + 1) *
                            static_cast<std::size_t>(frame_words_);
        std::memcpy(dst, src, static_cast<std::size_t>(frame_words_) * 8);
        // nodes in ascending lattice order: each step folds one copy of a
        // value-n point into the reach set, reusing the already-updated
        // smaller node of the same frame
        for (const Node& nd : nodes_) {
            if (nd.nwords == 0 || nd.pairs.empty()) continue;
            uint64_t* d = dst + nd.off;
            bool touched = false;
            for (const Pair& pr : nd.pairs) {
                const Node& sn = nodes_[static_cast<std::size_t>(pr.src)];
                if (sn.nwords == 0) continue;
                i64 src_hi = (pr.src == 0) ? 0 : active_hi_word(sn, n);
                // src bit 0 represents sum sn.wlo; adding one value-n point
                // with coefficient v lands at dst bit sn.wlo + v*n - nd.wlo
                i64 base = sn.wlo + pr.val * n - nd.wlo;
                const uint64_t* s = dst + sn.off;  // same frame: already final
                i64 dw = base >> 6;
                unsigned offb = static_cast<unsigned>(base & 63);
                uint64_t carry = 0;
                for (i64 w = 0; w <= src_hi; ++w, ++dw) {
                    uint64_t v = s[w];
                    uint64_t out = (offb ? (v << offb) : v) | carry;
                    carry = offb ? (v >> (64 - offb)) : 0;
                    if (out && dw >= 0 && dw < nd.nwords) {
                        d[dw] |= out;
                        touched = true;
                    }
                }
                if (carry && dw >= 0 && dw < nd.nwords) {
                    d[dw] |= carry;
                    touched = true;
                }
            }
            if (touched) d[nd.nwords - 1] &= nd.tailmask;
        }
        cs.depth++;
        cs.values.push_back(n);
        cs.mem[static_cast<std::size_t>((n - 1) >> 6)] |= uint64_t{1} << ((n - 1) & 63);
    }

    void remove(int q) {
        ClassState& cs = classes_[static_cast<std::size_t>(q)];
        i64 n = cs.values.back();
        cs.values.pop_back();
        cs.depth--;
        cs.mem[static_cast<std::size_t>((n - 1) >> 6)] &= ~(uint64_t{1} << ((n - 1) & 63));
    }

    void reset() {
        for (auto& cs : classes_) {
            while (!cs.values.empty()) {
                cs.mem[static_cast<std::size_t>((cs.values.back() - 1) >> 6)] &=
                    ~(uint64_t{1} << ((cs.values.back() - 1) & 63));
                cs.values.pop_back();
            }
            cs.depth = 0;
        }
    }

  private:
    struct Pair {
        int src;  // lattice index with one copy of this value removed
        i64 val;  // the removed coefficient value
    };
    struct Node {
        i64 wlo = 0, whi = -1;  // inclusive window of stored sums, empty if whi < wlo
        int off = 0, nwords = 0;
        i64 pos_sum = 0, neg_sum = 0;  // coefficient sums split by sign
        uint64_t tailmask = ~uint64_t{0};
        bool probe_xm = false, probe_arg = false, probe_bit = false;
        i64 xm_mult = 0, arg_smult = 0, bit_mult = 0;
        std::vector<Pair> pairs;
    };
    struct ClassState {
        std::vector<uint64_t> frames;
        std::vector<uint64_t> mem;
        std::vector<i64> values;
        int depth = 0;
    };

    // highest frame word of `nd` that can hold a sum when all class points
    // are <= p
    i64 active_hi_word(const Node& nd, i64 p) const {
        i64 hi = std::min(nd.whi, nd.pos_sum * p + nd.neg_sum);
        if (hi < nd.wlo) return -1;
        return (hi - nd.wlo) >> 6;
    }

    void build_lattice() {
        const std::size_t g = vals_.size();
        std::vector<int> stride(g, 1);
        int count = 1;
        for (std::size_t i = 0; i < g; ++i) {
            stride[i] = count;
            count *= mult_[i] + 1;
        }
        nodes_.assign(static_cast<std::size_t>(count), Node{});

        i64 total = 0;
        for (std::size_t i = 0; i < g; ++i) total += vals_[i] * mult_[i];

        std::vector<int> digits(g, 0);
        for (int idx = 0; idx < count; ++idx) {
            Node& nd = nodes_[static_cast<std::size_t>(idx)];
            i64 pos = 0, neg = 0;
            {
                int rem = idx;
                for (std::size_t i = g; i-- > 0;) {
                    int d = rem / stride[i];
                    rem %= stride[i];
                    digits[i] = d;
                    if (vals_[i] > 0)
                        pos += vals_[i] * d;
                    else
                        neg += vals_[i] * d;
                }
            }
            nd.pos_sum = pos;
            nd.neg_sum = neg;

            // natural sum range for values in [1, n_max]
            i64 natlo = pos + neg * n_max_;
            i64 nathi = pos * n_max_ + neg;
            // complement's natural range, used to keep only sums that can
            // still be completed to c
            i64 cpos = 0, cneg = 0;
            for (std::size_t i = 0; i < g; ++i) {
                int cd = mult_[i] - digits[i];
                if (vals_[i] > 0)
                    cpos += vals_[i] * cd;
                else
                    cneg += vals_[i] * cd;
            }
            i64 comp_lo = cpos + cneg * n_max_;
            i64 comp_hi = cpos * n_max_ + cneg;
            if (virtual_xm_) {  // the subtracted variable ranges over [1, n_max]
                comp_lo -= n_max_;
                comp_hi -= 1;
            }
            nd.wlo = std::max(natlo, c_ - comp_hi);
            nd.whi = std::min(nathi, c_ - comp_lo);
            if (idx == 0) {
                // the empty node must keep its zero bit whenever any sum is
                // wanted at all
                if (nd.wlo <= 0 && nd.whi >= 0) nd.wlo = nd.whi = 0;
            }
            if (nd.whi >= nd.wlo) {
                i64 width = nd.whi - nd.wlo + 1;
                if (width > kSumCapacity)
                    throw capacity_error("Engine: sum window exceeds capacity");
                nd.nwords = static_cast<int>((width + 63) / 64);
                unsigned tail = static_cast<unsigned>(width & 63);
                nd.tailmask = tail ? (uint64_t{1} << tail) - 1 : ~uint64_t{0};
            } else {
                nd.nwords = 0;
            }

            // update pairs: drop one copy of each distinct value present, so
            // repeated application inside one frame covers every sub-multiset
            for (std::size_t i = 0; i < g; ++i)
                if (digits[i] > 0)
                    nd.pairs.push_back(Pair{idx - stride[i], vals_[i]});

            // probes: this node plays the role of the sums drawn from old
            // points while the removed complement D takes the new value n
            i64 dsum = total - (pos + neg);
            if (virtual_xm_) {
                nd.probe_xm = true;
                nd.xm_mult = 1 - dsum;  // solve  s + dsum*n = c + n
                if (idx != count - 1) {
                    nd.probe_arg = true;
                    nd.arg_smult = dsum;  // x_m = s + dsum*n - c
                }
            } else if (idx != count - 1) {
                nd.probe_bit = true;
                nd.bit_mult = -dsum;  // test  s = c - dsum*n
            }
        }

        frame_words_ = 0;
        for (Node& nd : nodes_) {
            nd.off = frame_words_;
            frame_words_ += nd.nwords;
        }

        // smallest point value any monochromatic solution can have as its
        // maximum; probes below it can never fire
        i64 pos_total = 0, neg_total = 0;
        for (std::size_t i = 0; i < vals_.size(); ++i) {
            if (vals_[i] > 0)
                pos_total += vals_[i] * mult_[i];
            else
                neg_total += vals_[i] * mult_[i];
        }
        threshold_ = n_max_ + 1;
        for (i64 n = 1; n <= n_max_; ++n) {
            i64 lo = pos_total + neg_total * n;
            i64 hi = pos_total * n + neg_total;
            if (virtual_xm_) {
                lo -= n;
                hi -= 1;
            }
            if (lo <= c_ && c_ <= hi) {
                threshold_ = n;
                break;
            }
        }
        // frames for every depth, per colour class
        double bytes = static_cast<double>(frame_words_) * 8.0 *
                       static_cast<double>(n_max_ + 2) * static_cast<double>(r_);
        if (bytes > 1.5e9) throw capacity_error("Engine: frame storage exceeds capacity");
    }

    void seed_base_frame(uint64_t* frame) {
        const Node& nd = nodes_[0];
        if (nd.nwords > 0 && nd.wlo <= 0 && 0 <= nd.whi) {
            i64 b = -nd.wlo;
            frame[nd.off + (b >> 6)] |= uint64_t{1} << (b & 63);
        }
    }

    bool virtual_xm_;
    i64 c_, n_max_;
    i64 threshold_ = 1;
    int r_;
    std::vector<i64> vals_;
    std::vector<int> mult_;
    std::vector<Node> nodes_;
    int frame_words_ = 0;
    std::size_t mem_words_ = 0;
    std::vector<ClassState> classes_;
};

struct DfsResult {
    i64 best_depth = 0;             // deepest valid prefix reached
    std::vector<int> best_colours;  // lexicographically first colouring at that depth
    bool reached_full = false;      // some valid colouring of [1, n_max] found
    std::vector<int> full_colours;  // lexicographically first such colouring
    bool budget_hit = false;
    i64 budget_depth = 0;
    i64 nodes = 0;
};

// lexicographic DFS from a fixed valid prefix; explores extensions only.
// floor = length of the fixed prefix (backtracking stops there).  max_used =
// highest colour among prefix points (-1 if none).  Stops early when a full
// valid colouring is found.
inline void dfs_run(Engine& eng, std::vector<int>& chi, i64 floor, int max_used_prefix,
                    i64 node_budget, DfsResult& out) {
    const i64 n_max = eng.n_max();
    const int r = eng.r();
    std::vector<int> max_used(static_cast<std::size_t>(n_max + 2), 0);
    std::vector<int> next_try(static_cast<std::size_t>(n_max + 2), 0);
    max_used[static_cast<std::size_t>(floor)] = max_used_prefix;

    if (out.best_depth < floor) {
        out.best_depth = floor;
        out.best_colours.assign(chi.begin(), chi.begin() + floor);
    }
    if (floor == n_max) {
        out.reached_full = true;
        out.full_colours.assign(chi.begin(), chi.begin() + n_max);
        return;
    }

    i64 n = floor + 1;
    next_try[static_cast<std::size_t>(n)] = 0;
    while (n > floor) {
        std::size_t un = static_cast<std::size_t>(n);
        int limit = std::min(r - 1, max_used[un - 1] + 1);
        int q = next_try[un];
        if (q > limit) {  // colours exhausted: backtrack
            --n;
            if (n > floor) eng.remove(chi[static_cast<std::size_t>(n - 1)]);
            continue;
        }
        next_try[un] = q + 1;
        ++out.nodes;
        if (out.nodes >= node_budget) {
            out.budget_hit = true;
            out.budget_depth = n;
            return;
        }
        if (eng.creates_solution(n, q)) continue;
        eng.insert(n, q);
        chi[un - 1] = q;
        max_used[un] = std::max(max_used[un - 1], q);
        if (n > out.best_depth) {
            out.best_depth = n;
            out.best_colours.assign(chi.begin(), chi.begin() + n);
        }
        if (n == n_max) {
            out.reached_full = true;
            out.full_colours.assign(chi.begin(), chi.begin() + n_max);
            // unwind engine state back to the prefix
            for (i64 k = n; k > floor; --k) eng.remove(chi[static_cast<std::size_t>(k - 1)]);
            return;
        }
        ++n;
        next_try[static_cast<std::size_t>(n)] = 0;
    }
}

inline SearchOutcome outcome_from(const DfsResult& res, i64 n_max, int r) {
    SearchOutcome out;
    out.nodes = res.nodes;
    if (res.budget_hit) {
        out.kind = SearchKind::BudgetExceeded;
        out.n = res.budget_depth;
        return out;
    }
    if (res.reached_full) {
        out.kind = SearchKind::NotFound;
        Colouring col(1, n_max, std::max(2, r));
        for (i64 x = 1; x <= n_max; ++x) col.set(x, res.full_colours[static_cast<std::size_t>(x - 1)]);
        out.certificate = col;
        return out;
    }
    out.kind = SearchKind::Found;
    out.n = res.best_depth + 1;
    if (res.best_depth > 0) {
        Colouring col(1, res.best_depth, std::max(2, r));
        for (i64 x = 1; x <= res.best_depth; ++x)
            col.set(x, res.best_colours[static_cast<std::size_t>(x - 1)]);
        out.certificate = col;
    }
    return out;
}

// enumerate all valid colourings of [1, depth] in lexicographic order
// (symmetry-restricted), recording each as a vector of colours
inline void enumerate_prefixes(Engine& eng, i64 depth, i64 node_budget, DfsResult& phase,
                               std::vector<std::vector<int>>& prefixes) {
    const int r = eng.r();
    std::vector<int> chi(static_cast<std::size_t>(depth), 0);
    std::vector<int> max_used(static_cast<std::size_t>(depth + 2), 0);
    std::vector<int> next_try(static_cast<std::size_t>(depth + 2), 0);
    max_used[0] = -1;
    i64 n = 1;
    next_try[1] = 0;
    while (n >= 1) {
        std::size_t un = static_cast<std::size_t>(n);
        int limit = std::min(r - 1, max_used[un - 1] + 1);
        int q = next_try[un];
        if (q > limit) {
            --n;
            if (n >= 1) eng.remove(chi[static_cast<std::size_t>(n - 1)]);
            continue;
        }
        next_try[un] = q + 1;
        ++phase.nodes;
        if (phase.nodes >= node_budget) {
            phase.budget_hit = true;
            phase.budget_depth = n;
            return;
        }
        if (eng.creates_solution(n, q)) continue;
        eng.insert(n, q);
        chi[un - 1] = q;
        max_used[un] = std::max(max_used[un - 1], q);
        if (n > phase.best_depth) {
            phase.best_depth = n;
            phase.best_colours.assign(chi.begin(), chi.begin() + n);
        }
        if (n == depth) {
            prefixes.push_back(chi);
            eng.remove(q);
            continue;
        }
        ++n;
        next_try[static_cast<std::size_t>(n)] = 0;
    }
}

inline SearchOutcome search_sequential(Engine& eng, i64 node_budget) {
    DfsResult res;
    std::vector<int> chi(static_cast<std::size_t>(eng.n_max()), 0);
    dfs_run(eng, chi, 0, -1, node_budget, res);
    return outcome_from(res, eng.n_max(), eng.r());
}

// pre: cfg.n_max > split depth (shallower searches run sequentially)
inline SearchOutcome search_parallel(const std::vector<i64>& coeffs, bool virtual_xm, i64 c,
                                     const SearchConfig& cfg) {
    Engine root(coeffs, virtual_xm, c, cfg.n_max, cfg.r);
    i64 depth = std::min<i64>(cfg.split_depth, cfg.n_max - 1);
    DfsResult phase;
    std::vector<std::vector<int>> prefixes;
    enumerate_prefixes(root, depth, cfg.node_budget, phase, prefixes);
    if (phase.budget_hit) return outcome_from(phase, cfg.n_max, cfg.r);
    if (prefixes.empty()) return outcome_from(phase, cfg.n_max, cfg.r);

    i64 worker_budget = cfg.node_budget - phase.nodes;
    unsigned hw = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
    unsigned nthreads = static_cast<unsigned>(
        std::min<std::size_t>(hw, prefixes.size()));
    std::vector<DfsResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_full{prefixes.size()};

    auto work = [&]() {
        Engine eng(coeffs, virtual_xm, c, cfg.n_max, cfg.r);
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            if (i > first_full.load()) continue;  // a lex-smaller subtree already finished
            const std::vector<int>& pre = prefixes[i];
            eng.reset();
            int max_used = -1;
            for (i64 k = 1; k <= depth; ++k) {
                int q = pre[static_cast<std::size_t>(k - 1)];
                eng.insert(k, q);
                max_used = std::max(max_used, q);
            }
            std::vector<int> chi(static_cast<std::size_t>(cfg.n_max), 0);
            std::copy(pre.begin(), pre.end(), chi.begin());
            dfs_run(eng, chi, depth, max_used, worker_budget, results[i]);
            if (results[i].reached_full) {
                std::size_t cur = first_full.load();
                while (i < cur && !first_full.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    // deterministic merge in prefix (lexicographic) order
    DfsResult merged = phase;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        const DfsResult& res = results[i];
        merged.nodes += res.nodes;
        if (res.budget_hit && !merged.budget_hit) {
            merged.budget_hit = true;
            merged.budget_depth = res.budget_depth;
        }
        if (res.best_depth > merged.best_depth) {
            merged.best_depth = res.best_depth;
            merged.best_colours = res.best_colours;
        }
        if (res.reached_full && !merged.reached_full) {
            merged.reached_full = true;
            merged.full_colours = res.full_colours;
        }
    }
    if (merged.reached_full) merged.budget_hit = false;  // a certificate trumps later budget trips
    return outcome_from(merged, cfg.n_max, cfg.r);
}

inline SearchOutcome dispatch_search(const std::vector<i64>& coeffs, bool virtual_xm, i64 c,
                                     const SearchConfig& cfg) {
    if (cfg.parallel && cfg.split_depth >= 1 && cfg.n_max > cfg.split_depth)
        return search_parallel(coeffs, virtual_xm, c, cfg);
    Engine eng(coeffs, virtual_xm, c, cfg.n_max, cfg.r);
    return search_sequential(eng, cfg.node_budget);
}

}  // namespace detail

inline SearchOutcome rado_search(const Equation& eq, const SearchConfig& cfg) {
    return detail::dispatch_search(eq.coeffs(), true, eq.c(), cfg);
}

inline SearchOutcome rado_search(const GeneralEquation& eq, const SearchConfig& cfg) {
    return detail::dispatch_search(eq.coeffs, false, eq.c, cfg);
}

// Randomized repair probe: try to exhibit a valid r-colouring of [1, n_max]
// (a witness that the Rado number exceeds n_max) without exhausting the
// search tree.  Start from a random colouring and repeatedly recolour one
// point of the current monochromatic solution; restart on stagnation.  The
// result is checked before it is returned, so a success is always sound; a
// nullopt says nothing.  Deterministic: the generator is seeded from the
// equation and the parameters.
inline std::optional<Colouring> probe_valid_colouring(const Equation& eq, i64 n_max, int r = 2,
                                                      int restarts = 8, i64 max_flips = 0) {
    if (n_max < 1 || r < 2) return std::nullopt;
    if (max_flips <= 0) max_flips = 40 * n_max;
    std::uint64_t seed = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) { seed = (seed ^ v) * 1099511628211ULL; };
    for (i64 a : eq.coeffs()) mix(static_cast<std::uint64_t>(a));
    mix(static_cast<std::uint64_t>(eq.c()));
    mix(static_cast<std::uint64_t>(n_max));
    mix(static_cast<std::uint64_t>(r));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> colour_step(1, r - 1);
    for (int t = 0; t < restarts; ++t) {
        Colouring col(1, n_max, r);
        for (i64 x = 1; x <= n_max; ++x)
            col.set(x, static_cast<int>(rng() % static_cast<std::uint64_t>(r)));
        for (i64 f = 0; f < max_flips; ++f) {
            auto sol = find_mono_solution(eq, col);
            if (!sol) return col;
            std::vector<i64> pts = sol->values;
            pts.push_back(sol->xm);
            i64 p = pts[rng() % pts.size()];
            col.set(p, (col.colour(p) + colour_step(rng)) % r);
        }
    }
    return std::nullopt;
}

// does colouring point n = partial.hi() its assigned colour complete a
// monochromatic solution lying entirely inside [1, n]?
inline bool incremental_check(const Equation& eq, const Colouring& partial) {
    if (partial.lo() != 1) throw std::invalid_argument("incremental_check: interval must start at 1");
    i64 n = partial.hi();
    int q = partial.colour(n);
    detail::Engine eng(eq.coeffs(), true, eq.c(), n, partial.r());
    for (i64 x = 1; x < n; ++x)
        if (partial.colour(x) == q) eng.insert(x, q);
    return eng.creates_solution(n, q);
}

// true when gcd(sigma, lcm(2..r)) does not divide c: no r-colouring of the
// positive integers ever contains a monochromatic solution, so no Rado number
// exists
inline bool nonexistence_guard(const Equation& eq, int r = 2) {
    if (r < 1) throw std::invalid_argument("nonexistence_guard: need r >= 1");
    i64 L = 1;
    for (i64 k = 2; k <= r; ++k) L = std::lcm(L, k);
    i64 g = std::gcd(eq.sigma(), L);  // >= 1 since L >= 1
    return eq.c() % g != 0;
}

// count of valid r-colourings of [1, n]; with_symmetry restricts point k to
// colours <= 1 + max colour used before it (the search's canonical form)
inline i64 count_valid_colourings(const Equation& eq, i64 n, int r, bool with_symmetry) {
    detail::Engine eng(eq.coeffs(), true, eq.c(), n, r);
    i64 count = 0;
    auto rec = [&](auto&& self, i64 k, int max_used) -> void {
        if (k > n) {
            ++count;
            return;
        }
        int limit = with_symmetry ? std::min(r - 1, max_used + 1) : r - 1;
        for (int q = 0; q <= limit; ++q) {
            if (eng.creates_solution(k, q)) continue;
            eng.insert(k, q);
            self(self, k + 1, std::max(max_used, q));
            eng.remove(q);
        }
    };
    rec(rec, 1, -1);
    return count;
}

// ---------------------------------------------------------------------------
// CNF export

struct CnfDocument {
    i64 vars = 0;
    std::vector<std::vector<i64>> clauses;

    std::string to_dimacs() const {
        std::string out = "p cnf " + std::to_string(vars) + " " +
                          std::to_string(clauses.size()) + "\n";
        for (const auto& cl : clauses) {
            for (i64 lit : cl) {
                out += std::to_string(lit);
                out += ' ';
            }
            out += "0\n";
        }
        return out;
    }
};

namespace detail {

// all distinct support sets {x_1..x_{m-1}, x_m} of solutions inside [1, N],
// enumerated positionally with values nondecreasing inside equal-coefficient
// runs (other orders repeat the same support)
inline std::set<std::vector<i64>> solution_supports(const Equation& eq, i64 N) {
    const auto& a = eq.coeffs();
    std::set<std::vector<i64>> supports;
    std::vector<i64> x(a.size(), 0);
    std::vector<i64> suffix_min(a.size() + 1, 0), suffix_max(a.size() + 1, 0);
    for (std::size_t i = a.size(); i-- > 0;) {
        suffix_min[i] = suffix_min[i + 1] + a[i];
        suffix_max[i] = suffix_max[i + 1] + a[i] * N;
    }
    auto rec = [&](auto&& self, std::size_t i, i64 partial) -> void {
        if (i == a.size()) {
            i64 xm = partial - eq.c();
            if (xm < 1 || xm > N) return;
            std::vector<i64> sup(x.begin(), x.end());
            sup.push_back(xm);
            std::sort(sup.begin(), sup.end());
            sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
            supports.insert(std::move(sup));
            return;
        }
        i64 vlo = 1;
        if (i > 0 && a[i] == a[i - 1]) vlo = x[i - 1];
        for (i64 v = vlo; v <= N; ++v) {
            i64 part = partial + a[i] * v;
            if (part + suffix_min[i + 1] > eq.c() + N) break;
            if (part + suffix_max[i + 1] < eq.c() + 1) continue;
            x[i] = v;
            self(self, i + 1, part);
        }
    };
    rec(rec, 0, 0);
    return supports;
}

}  // namespace detail

// propositional encoding of "some valid r-colouring of [1, N] exists".
// r = 2: one variable per point (true = colour 1); per solution support the
// clause pair (all-1 forbidden), (all-0 forbidden).
// r > 2: one-hot variables var(p,q) = (p-1)*r + q + 1 with at-least-one and
// pairwise at-most-one clauses per point, then one clause per support and
// colour.
inline CnfDocument export_cnf(const Equation& eq, i64 N, int r = 2,
                              i64 clause_cap = 5'000'000) {
    if (N < 1) throw std::invalid_argument("export_cnf: need N >= 1");
    if (r < 2) throw std::invalid_argument("export_cnf: need r >= 2");
    auto supports = detail::solution_supports(eq, N);
    CnfDocument doc;
    if (r == 2) {
        doc.vars = N;
        for (const auto& sup : supports) {
            std::vector<i64> neg, pos;
            for (i64 p : sup) {
                neg.push_back(-p);
                pos.push_back(p);
            }
            doc.clauses.push_back(std::move(neg));
            doc.clauses.push_back(std::move(pos));
        }
    } else {
        doc.vars = N * r;
        auto var = [r](i64 p, int q) { return (p - 1) * r + q + 1; };
        for (i64 p = 1; p <= N; ++p) {
            std::vector<i64> alo;
            for (int q = 0; q < r; ++q) alo.push_back(var(p, q));
            doc.clauses.push_back(std::move(alo));
            for (int q = 0; q < r; ++q)
                for (int q2 = q + 1; q2 < r; ++q2)
                    doc.clauses.push_back({-var(p, q), -var(p, q2)});
        }
        for (const auto& sup : supports)
            for (int q = 0; q < r; ++q) {
                std::vector<i64> cl;
                for (i64 p : sup) cl.push_back(-var(p, q));
                doc.clauses.push_back(std::move(cl));
            }
    }
    if (static_cast<i64>(doc.clauses.size()) > clause_cap)
        throw capacity_error("export_cnf: clause cap exceeded");
    return doc;
}

// checks DIMACS shape: header counts match the body, literals in range,
// clauses 0-terminated
inline bool cnf_syntax_ok(const std::string& text) {
    std::size_t pos = 0;
    auto next_line = [&](std::string& line) -> bool {
        if (pos >= text.size()) return false;
        std::size_t e = text.find('\n', pos);
        if (e == std::string::npos) e = text.size();
        line = text.substr(pos, e - pos);
        pos = e + 1;
        return true;
    };
    std::string line;
    if (!next_line(line)) return false;
    i64 vars = 0, nclauses = 0;
    if (std::sscanf(line.c_str(), "p cnf %ld %ld", &vars, &nclauses) != 2) return false;
    i64 seen = 0;
    while (next_line(line)) {
        if (line.empty()) continue;
        std::size_t lp = 0;
        bool terminated = false;
        while (lp < line.size()) {
            while (lp < line.size() && line[lp] == ' ') ++lp;
            if (lp >= line.size()) break;
            if (terminated) return false;  // content after the 0 terminator
            i64 lit = 0;
            auto [p, ec] = std::from_chars(line.data() + lp, line.data() + line.size(), lit);
            if (ec != std::errc{}) return false;
            lp = static_cast<std::size_t>(p - line.data());
            if (lit == 0)
                terminated = true;
            else if (lit < -vars || lit > vars)
                return false;
        }
        if (!terminated) return false;
        ++seen;
    }
    return seen == nclauses;
}

}  // namespace rado
