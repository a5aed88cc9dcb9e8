#pragma once

// Command-line front end. All commands are thin wrappers over the library;
// run() is the testable entry point (argv semantics, streams injected).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rado/core.hpp"
#include "rado/distrib.hpp"
#include "rado/search.hpp"
#include "rado/sweep.hpp"
#include "rado/theorems.hpp"
#include "rado/witness.hpp"

namespace rado::cli {

namespace detail {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<i64> parse_i64_list(const std::string& text) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        i64 v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw io_error("write to '" + path + "' failed");
}

inline i64 node_budget_from_env() {
    const char* env = std::getenv("RADO_NODE_BUDGET");
    if (!env) return 1'000'000'000;
    std::string s(env);
    std::size_t used = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("RADO_NODE_BUDGET is not an integer");
    }
    if (used != s.size() || v < 1)
        throw std::invalid_argument("RADO_NODE_BUDGET is not a positive integer");
    return v;
}

// for r > 2 only knowledge valid for every colour count survives
inline RadoOutcome restrict_to_all_r(const RadoOutcome& o) {
    if (o.all_r && (o.kind == OutcomeKind::Exact || o.kind == OutcomeKind::DoesNotExist))
        return o;
    RadoOutcome none;
    none.kind = OutcomeKind::Unknown;
    return none;
}

struct OracleCheck {
    OracleNote note = OracleNote::None;
    i64 n = 0;
    std::optional<bool> agree;  // empty when there is nothing to cross-check
};

inline OracleCheck run_oracle(const Equation& eq, const RadoOutcome& o, int r, i64 cap,
                              i64 check_n, i64 budget) {
    OracleCheck res;
    SearchConfig cfg;
    cfg.r = r;
    cfg.node_budget = budget;
    auto run = [&](i64 n_max) {
        cfg.n_max = n_max;
        return rado_search(eq, cfg);
    };
    switch (o.kind) {
        case OutcomeKind::DoesNotExist:
            res.note = OracleNote::None;
            res.agree = is_valid_colouring(eq, witness_mod_p(eq, r).instantiate(check_n));
            break;
        case OutcomeKind::Exact: {
            auto got = run(o.value());
            if (got.kind == SearchKind::Found) {
                res.note = OracleNote::Value;
                res.n = got.n;
                res.agree = got.n == o.value();
            } else if (got.kind == SearchKind::NotFound) {
                res.note = OracleNote::AboveCap;
                res.n = o.value();
                res.agree = false;
            } else {
                res.note = OracleNote::Unknown;
            }
            break;
        }
        case OutcomeKind::Bounds: {
            const i64 n_max = o.upper ? *o.upper : cap;
            if (!o.upper && budget >= kProbeMinBudget && probe_valid_colouring(eq, n_max, r)) {
                res.note = OracleNote::AboveCap;
                res.n = n_max;
                res.agree = true;
                break;
            }
            auto got = run(n_max);
            if (got.kind == SearchKind::Found) {
                res.note = OracleNote::Value;
                res.n = got.n;
                res.agree = got.n >= *o.lower && (!o.upper || got.n <= *o.upper);
            } else if (got.kind == SearchKind::NotFound) {
                res.note = OracleNote::AboveCap;
                res.n = n_max;
                res.agree = !o.upper.has_value();
            } else {
                res.note = OracleNote::Unknown;
            }
            break;
        }
        default: {  // no claim: report what the search sees up to the cap
            if (budget >= kProbeMinBudget && probe_valid_colouring(eq, cap, r)) {
                res.note = OracleNote::AboveCap;
                res.n = cap;
                break;
            }
            auto got = run(cap);
            if (got.kind == SearchKind::Found) {
                res.note = OracleNote::Value;
                res.n = got.n;
            } else if (got.kind == SearchKind::NotFound) {
                res.note = OracleNote::AboveCap;
                res.n = cap;
            } else {
                res.note = OracleNote::Unknown;
            }
            break;
        }
    }
    return res;
}

inline std::string oracle_note_text(OracleNote note, i64 n) {
    switch (note) {
        case OracleNote::Value: return std::to_string(n);
        case OracleNote::AboveCap: return ">" + std::to_string(n);
        case OracleNote::Unknown: return "unknown";
        default: return "none";
    }
}

inline std::string provenance_text(const RadoOutcome& o) {
    std::string s;
    for (std::size_t i = 0; i < o.provenance.size(); ++i) {
        if (i) s.push_back('+');
        s += o.provenance[i].tag;
    }
    return s;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-colour Rado numbers: closed forms, bounds, witnesses, exhaustive search"};
    app.require_subcommand(1);

    std::string coeffs_s, t_list_s, csv_path, json_path, cnf_path, filter_s = "any";
    i64 c_val = 0, n_max = 0, t_single = 0;
    i64 s_max = 4, coeff_max = 4;
    std::optional<i64> c_lo, c_hi;
    int r = 2, threads = 0;
    bool with_oracle = false, as_json = false;

    auto* compute = app.add_subcommand("compute", "evaluate the dispatcher for one equation");
    compute->add_option("-a,--coeffs", coeffs_s, "comma-separated positive coefficients")
        ->required();
    compute->add_option("-c", c_val, "constant term")->required();
    compute->add_option("-r", r, "number of colours (default 2)");
    compute->add_flag("--oracle", with_oracle, "also run the exhaustive search");
    compute->add_option("--n-max", n_max, "search cap when no upper bound exists");
    compute->add_flag("--json", as_json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "sweep multisets and compare against the oracle");
    verify->add_option("--s-max", s_max, "largest coefficient sum (default 4)");
    verify->add_option("--coeff-max", coeff_max, "largest single coefficient (default 4)");
    verify->add_option("--c-lo", c_lo, "lowest constant (default -3S per multiset)");
    verify->add_option("--c-hi", c_hi, "highest constant (default S(S-1)+3S per multiset)");
    verify->add_option("--filter", filter_s, "restrict multisets: any|2|3 (default any)");
    verify->add_option("--n-max", n_max, "oracle cap for rows without an upper bound");
    verify->add_option("--threads", threads, "worker threads (default: hardware)");
    verify->add_option("--csv", csv_path, "write the CSV report here");
    verify->add_option("--json", json_path, "write the JSON report here");

    auto* sdc = app.add_subcommand("sdc", "count subset-distinct colourings");
    sdc->add_option("-a,--coeffs", coeffs_s, "comma-separated positive coefficients")->required();
    sdc->add_option("--t", t_list_s, "comma-separated target tuple")->required();
    sdc->add_flag("--json", as_json, "emit JSON");

    auto* distributable = app.add_subcommand("distributable", "check t-distributability");
    distributable->add_option("-a,--coeffs", coeffs_s, "comma-separated positive coefficients")
        ->required();
    distributable->add_option("--t", t_single, "the t to check")->required();
    distributable->add_flag("--json", as_json, "emit JSON");

    auto* witness = app.add_subcommand("witness", "construct the certifying colouring");
    witness->add_option("-a,--coeffs", coeffs_s, "comma-separated positive coefficients")
        ->required();
    witness->add_option("-c", c_val, "constant term")->required();
    witness->add_option("-r", r, "number of colours (default 2)");
    witness->add_option("--n-max", n_max, "validation depth for mod-p witnesses (default 200)");
    witness->add_flag("--json", as_json, "emit JSON");

    auto* cnf = app.add_subcommand("cnf", "export the colourability instance as DIMACS");
    cnf->add_option("-a,--coeffs", coeffs_s, "comma-separated positive coefficients")->required();
    cnf->add_option("-c", c_val, "constant term")->required();
    cnf->add_option("-r", r, "number of colours (default 2)");
    cnf->add_option("--n-max", n_max, "colour the interval [1, n-max]")->required();
    cnf->add_option("--cnf", cnf_path, "write the DIMACS text here (default: stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const i64 budget = detail::node_budget_from_env();

        if (app.got_subcommand(compute)) {
            if (r < 2) throw std::invalid_argument("need r >= 2");
            Equation eq(detail::parse_i64_list(coeffs_s), c_val);
            RadoOutcome o = rado_by_theorems(eq);
            if (r > 2) o = detail::restrict_to_all_r(o);

            detail::OracleCheck oc;
            if (with_oracle)
                oc = detail::run_oracle(eq, o, r, n_max > 0 ? n_max : 64,
                                        n_max > 0 ? n_max : 200, budget);

            if (as_json) {
                auto j = outcome_to_json(eq, o);
                if (r != 2) j["r"] = r;
                if (with_oracle) {
                    j["oracle"] = detail::oracle_note_text(oc.note, oc.n);
                    j["agree"] = oc.agree ? nlohmann::json(*oc.agree) : nlohmann::json();
                }
                out << j.dump(2) << "\n";
            } else {
                out << "equation: " << equation_to_string(eq) << "\n";
                if (r != 2) out << "colours: " << r << "\n";
                out << "kind: " << outcome_kind_name(o.kind) << "\n";
                if (o.kind == OutcomeKind::Exact) {
                    out << "value: " << o.value() << "\n";
                } else if (o.kind == OutcomeKind::Bounds) {
                    out << "lower: " << *o.lower << "\n";
                    if (o.upper) out << "upper: " << *o.upper << "\n";
                }
                if (o.kind == OutcomeKind::Exact || o.kind == OutcomeKind::DoesNotExist)
                    out << "all-r: " << (o.all_r ? "yes" : "no") << "\n";
                if (!o.provenance.empty())
                    out << "provenance: " << detail::provenance_text(o) << "\n";
                if (with_oracle) {
                    out << "oracle: " << detail::oracle_note_text(oc.note, oc.n) << "\n";
                    if (oc.note == OracleNote::Unknown)
                        out << "agree: unknown\n";
                    else if (oc.agree)
                        out << "agree: " << (*oc.agree ? "yes" : "no") << "\n";
                }
            }
            return (oc.agree && !*oc.agree) ? 1 : 0;
        }

        if (app.got_subcommand(verify)) {
            if (c_lo.has_value() != c_hi.has_value())
                throw std::invalid_argument("--c-lo and --c-hi must be given together");
            SweepSpec spec;
            spec.s_max = s_max;
            spec.coeff_max = coeff_max;
            if (c_lo) spec.c_range = {{*c_lo, *c_hi}};
            if (filter_s == "any")
                spec.filter = 0;
            else if (filter_s == "2" || filter_s == "3")
                spec.filter = filter_s[0] - '0';
            else
                throw std::invalid_argument("--filter must be any, 2 or 3");
            if (n_max > 0) spec.oracle_cap = n_max;
            spec.node_budget = budget;
            spec.threads = threads;

            auto rep = run_sweep(spec);
            if (!csv_path.empty()) detail::write_file(csv_path, sweep_csv(rep));
            if (!json_path.empty()) detail::write_file(json_path, sweep_json(rep).dump(2) + "\n");
            out << "rows: " << rep.rows.size() << "\n";
            out << "disagreements: " << rep.disagreements << "\n";
            return rep.disagreements > 0 ? 1 : 0;
        }

        if (app.got_subcommand(sdc)) {
            SdcQuery q(detail::parse_i64_list(coeffs_s), detail::parse_i64_list(t_list_s));
            const u128 v = rado::sdc(q);
            if (as_json) {
                nlohmann::json j;
                j["coeffs"] = q.coeffs;
                j["targets"] = q.targets;
                j["value"] = u128_to_string(v);
                out << j.dump(2) << "\n";
            } else {
                out << u128_to_string(v) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(distributable)) {
            auto rep = is_t_distributable(detail::parse_i64_list(coeffs_s), t_single);
            if (as_json) {
                out << rep.to_json().dump(2) << "\n";
            } else {
                out << "t-distributable: " << (rep.holds ? "true" : "false") << "\n";
                if (rep.failing_index) out << "failing-index: " << *rep.failing_index << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(witness)) {
            if (r < 2) throw std::invalid_argument("need r >= 2");
            Equation eq(detail::parse_i64_list(coeffs_s), c_val);
            const i64 check_n = n_max > 0 ? n_max : 200;

            std::optional<Witness> w;
            if (r == 2) {
                w = witness_for_lower(eq);
            } else {
                RadoOutcome o = detail::restrict_to_all_r(rado_by_theorems(eq));
                if (o.kind != OutcomeKind::Unknown) w = witness_for_lower(eq);
            }
            if (!w) {
                out << "witness: none\n";
                return 0;
            }
            if (w->nonexistence) {
                ModPRule rule = witness_mod_p(eq, r);
                if (!is_valid_colouring(eq, rule.instantiate(check_n)))
                    throw contradiction_error("mod-p witness failed validation");
                out << "kind: " << witness_kind_name(w->kind) << "\n";
                out << "params: " << rule.p << "\n";
                out << "claim: does-not-exist\n";
                out << "checked-n: " << check_n << "\n";
                return 0;
            }
            if (!w->colouring || !is_valid_colouring(eq, *w->colouring))
                throw contradiction_error("witness failed validation");
            if (as_json) {
                out << witness_to_json(eq, *w).dump(2) << "\n";
            } else {
                out << "kind: " << witness_kind_name(w->kind) << "\n";
                out << "witness: " << w->colouring->to_text() << "\n";
                out << "claim: Rad >= " << w->claim_lower << "\n";
                if (!w->params.empty())
                    out << "params: " << rado::detail::join_i64(w->params, ',') << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cnf)) {
            if (r < 2) throw std::invalid_argument("need r >= 2");
            if (n_max < 1) throw std::invalid_argument("need --n-max >= 1");
            Equation eq(detail::parse_i64_list(coeffs_s), c_val);
            auto doc = export_cnf(eq, n_max, r);
            auto text = doc.to_dimacs();
            if (!cnf_syntax_ok(text)) throw contradiction_error("generated DIMACS fails check");
            if (cnf_path.empty()) {
                out << text;
            } else {
                detail::write_file(cnf_path, text);
                out << "cnf: vars=" << doc.vars << " clauses=" << doc.clauses.size()
                    << " path=" << cnf_path << "\n";
            }
            return 0;
        }
    } catch (const detail::io_error& e) {
        err << "io error: " << e.what() << "\n";
        return 4;
    } catch (const contradiction_error& e) {
        err << "contradiction: " << e.what() << "\n";
        return 3;
    } catch (const capacity_error& e) {
        err << "contradiction: " << e.what() << "\n";
        return 3;
    } catch (const overflow_error& e) {
        err << "contradiction: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rado::cli
