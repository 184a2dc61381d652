// Command-line front end: info, resolve, verify (with grid sweep).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter
// error, 3 broken internal identity.
#include <cstdint>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repunit/complex.hpp"
#include "repunit/export.hpp"
#include "repunit/oracle.hpp"
#include "repunit/semigroup.hpp"
#include "repunit/verify.hpp"

namespace {

using namespace repunit;

enum class Format { text, json, macaulay2, singular };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::text},
    {"json", Format::json},
    {"macaulay2", Format::macaulay2},
    {"singular", Format::singular},
};

struct RunConfig {
    std::int64_t b = 0;
    int n = 0;
    std::int64_t a = 0;
    std::uint32_t prime = 32003;
    int trials = 5;
    std::optional<std::int64_t> margin;
    std::uint64_t seed = 20250815;
    Format format = Format::text;
    std::string fault;

    bool grid = false;
    std::vector<std::int64_t> grid_b{2, 3};
    std::vector<int> grid_n{2, 3, 4, 5};
    std::vector<std::int64_t> grid_a{1, 2, 3, 4, 5, 6, 7, 8};
};

std::string generator_list(const RepunitSemigroup& s) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
        os << (i ? ", " : "") << s.generators()[i];
    }
    os << ">";
    return os.str();
}

RepunitSemigroup make_semigroup(const RunConfig& cfg) {
    RepunitSemigroup s =
        RepunitSemigroup::construct({cfg.b, cfg.n, cfg.a});
    if (cfg.a == 1) {
        std::cerr << "note: a = 1 sits on the boundary of the parameter "
                     "range; all checks run as usual\n";
    }
    return s;
}

VerifyOptions verify_options(const RunConfig& cfg) {
    VerifyOptions opts;
    opts.prime = cfg.prime;
    opts.trials = cfg.trials;
    if (cfg.margin) opts.margin = Int(*cfg.margin);
    opts.seed = cfg.seed;
    return opts;
}

GradedComplex build_maybe_faulted(const RepunitSemigroup& s,
                                  const std::string& fault) {
    GradedComplex gc = build_resolution(s);
    if (!fault.empty()) inject_fault(gc, parse_fault_kind(fault));
    return gc;
}

int cmd_info(const RunConfig& cfg) {
    RepunitSemigroup s = make_semigroup(cfg);
    if (cfg.format == Format::json) {
        std::cout << dump_json(info_to_json(s));
        return 0;
    }
    std::cout << "semigroup:       " << generator_list(s) << "\n";
    std::cout << "b, n, a:         " << cfg.b << ", " << cfg.n << ", "
              << cfg.a << "\n";
    std::cout << "extended:        " << s.extended() << "\n";
    std::cout << "c:               " << s.c() << "\n";
    std::cout << "betti:           (";
    for (int j = 1; j <= s.nvars() - 1; ++j) {
        std::cout << (j > 1 ? ", " : "") << betti_number(s.nvars(), j);
    }
    std::cout << ")\n";
    std::cout << "pseudo-frobenius: {";
    const auto pf = s.pf_formula();
    for (std::size_t i = 0; i < pf.size(); ++i) {
        std::cout << (i ? ", " : "") << pf[i];
    }
    std::cout << "}\n";
    std::cout << "frobenius:       " << s.frobenius() << "\n";
    return 0;
}

int cmd_resolve(const RunConfig& cfg) {
    RepunitSemigroup s = make_semigroup(cfg);
    switch (cfg.format) {
        case Format::macaulay2:
            std::cout << macaulay2_script(s);
            return 0;
        case Format::singular:
            std::cout << singular_script(s);
            return 0;
        default:
            break;
    }
    GradedComplex gc = build_maybe_faulted(s, cfg.fault);
    if (cfg.format == Format::json) {
        std::cout << dump_json(resolution_to_json(gc));
        return 0;
    }
    std::cout << "semigroup " << generator_list(s) << "  (b = " << cfg.b
              << ", n = " << cfg.n << ", a = " << cfg.a << ")\n";
    for (const ResolutionLevel& level : gc.levels) {
        std::cout << "level " << level.j << ": betti "
                  << level.shifts.size() << ", shifts [";
        for (std::size_t i = 0; i < level.shifts.size(); ++i) {
            std::cout << (i ? ", " : "") << level.shifts[i];
        }
        std::cout << "]\n";
        for (const auto& [pos, poly] : level.delta.entries()) {
            std::cout << "  (" << pos.first << ", " << pos.second << ")  "
                      << to_string(poly) << "\n";
        }
    }
    return 0;
}

int report_checks(const RunConfig& cfg, const RepunitSemigroup& s,
                  const std::vector<NamedCheck>& checks) {
    if (cfg.format == Format::json) {
        Json doc;
        doc["schema"] = "repunit-verify/1";
        doc["params"] = {{"b", cfg.b}, {"n", cfg.n}, {"a", cfg.a}};
        Json arr = Json::array();
        for (const NamedCheck& c : checks) {
            Json one;
            one["name"] = c.name;
            one["pass"] = c.report.pass;
            one["detail"] = c.report.detail;
            arr.push_back(std::move(one));
        }
        doc["checks"] = std::move(arr);
        doc["pass"] = all_passed(checks);
        std::cout << dump_json(doc);
    } else {
        std::cout << "semigroup " << generator_list(s) << "  (b = " << cfg.b
                  << ", n = " << cfg.n << ", a = " << cfg.a << ")\n";
        int passed = 0;
        for (const NamedCheck& c : checks) {
            if (c.report.pass) {
                ++passed;
                std::cout << "PASS " << c.name << "\n";
            } else {
                std::cout << "FAIL " << c.name << ": " << c.report.detail
                          << "\n";
            }
        }
        std::cout << passed << "/" << checks.size() << " checks passed\n";
    }
    return all_passed(checks) ? 0 : 1;
}

int cmd_verify_single(const RunConfig& cfg) {
    RepunitSemigroup s = make_semigroup(cfg);
    GradedComplex gc = build_maybe_faulted(s, cfg.fault);
    return report_checks(cfg, s, run_all_checks(gc, verify_options(cfg)));
}

struct GridRow {
    std::string text;
    bool ok = false;
};

GridRow grid_instance(std::int64_t b, int n, std::int64_t a,
                      const VerifyOptions& opts) {
    std::ostringstream os;
    os << "b=" << b << " n=" << n << " a=" << a;
    GridRow row;
    try {
        RepunitSemigroup s = RepunitSemigroup::construct({b, n, a});
        os << " " << generator_list(s);
        const auto checks = run_all_checks(build_resolution(s), opts);
        if (all_passed(checks)) {
            row.ok = true;
            os << " PASS";
        } else {
            os << " FAIL(";
            bool first = true;
            for (const auto& c : checks) {
                if (c.report.pass) continue;
                os << (first ? "" : ",") << c.name;
                first = false;
            }
            os << ")";
        }
    } catch (const CheckError& e) {
        os << " ERROR: " << e.what();
    }
    row.text = os.str();
    return row;
}

int cmd_verify_grid(const RunConfig& cfg) {
    const VerifyOptions opts = verify_options(cfg);
    struct Cell {
        std::int64_t b;
        int n;
        std::int64_t a;
        std::future<GridRow> result;
    };
    std::vector<Cell> cells;
    int skipped = 0;
    for (std::int64_t b : cfg.grid_b) {
        for (int n : cfg.grid_n) {
            for (std::int64_t a : cfg.grid_a) {
                // Same admissibility filter as construct(); combos that
                // are invalid by design are skipped, not reported.
                if (b < 2 || n < 2 || a < 1) {
                    ++skipped;
                    continue;
                }
                Int a1 = 0, p = 1;
                for (int j = 0; j < n; ++j, p *= b) a1 += p;
                if (boost::multiprecision::gcd(Int(a), a1) != 1) {
                    ++skipped;
                    continue;
                }
                cells.push_back({b, n, a,
                                 std::async(std::launch::async, grid_instance,
                                            b, n, a, opts)});
            }
        }
    }
    int failed = 0;
    for (Cell& cell : cells) {
        GridRow row = cell.result.get();
        if (!row.ok) ++failed;
        std::cout << row.text << "\n";
    }
    std::cout << cells.size() << " instances: " << cells.size() - failed
              << " passed, " << failed << " failed, " << skipped
              << " combinations skipped (not admissible)\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resolutions of generalized repunit numerical semigroups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_params = [&cfg](CLI::App* sub, bool required) {
        auto* b = sub->add_option("--b", cfg.b, "base (>= 2)");
        auto* n = sub->add_option("--n", cfg.n, "embedding dimension (>= 2)");
        auto* a = sub->add_option("--a", cfg.a, "step factor (>= 1)");
        if (required) {
            b->required();
            n->required();
            a->required();
        }
    };
    auto add_format = [&cfg](CLI::App* sub,
                             std::vector<std::string> allowed) {
        std::map<std::string, Format> names;
        for (const auto& key : allowed) names[key] = kFormatNames.at(key);
        sub->add_option("--format", cfg.format, "output format")
            ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
    };

    CLI::App* info = app.add_subcommand(
        "info", "print semigroup invariants and the betti vector");
    add_params(info, true);
    add_format(info, {"text", "json"});

    CLI::App* resolve = app.add_subcommand(
        "resolve", "build the graded resolution and emit it");
    add_params(resolve, true);
    add_format(resolve, {"text", "json", "macaulay2", "singular"});
    resolve->add_option("--inject-fault", cfg.fault,
                        "corrupt the build for testing (sign, constant, "
                        "shift, zero, claim)");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the full check battery against the resolution");
    add_params(verify, false);
    add_format(verify, {"text", "json"});
    verify->add_option("--prime", cfg.prime,
                       "field characteristic for the oracles");
    verify->add_option("--trials", cfg.trials,
                       "random points for the rank check");
    verify->add_option("--margin", cfg.margin,
                       "extra homology scan distance past the top shift");
    verify->add_option("--seed", cfg.seed, "seed for the rank check points");
    verify->add_option("--inject-fault", cfg.fault,
                       "corrupt the build for testing (sign, constant, "
                       "shift, zero, claim)");
    verify->add_flag("--grid", cfg.grid,
                     "sweep a parameter lattice instead of one instance");
    verify->add_option("--grid-b", cfg.grid_b, "bases for --grid")
        ->delimiter(',');
    verify->add_option("--grid-n", cfg.grid_n, "dimensions for --grid")
        ->delimiter(',');
    verify->add_option("--grid-a", cfg.grid_a, "step factors for --grid")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return cmd_info(cfg);
        if (resolve->parsed()) return cmd_resolve(cfg);
        if (cfg.grid) {
            if (verify->count("--b") || verify->count("--n") ||
                verify->count("--a")) {
                std::cerr << "error: --grid replaces --b/--n/--a\n";
                return 2;
            }
            return cmd_verify_grid(cfg);
        }
        if (!verify->count("--b") || !verify->count("--n") ||
            !verify->count("--a")) {
            std::cerr << "error: verify needs --b, --n and --a "
                         "(or --grid)\n";
            return 2;
        }
        return cmd_verify_single(cfg);
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
