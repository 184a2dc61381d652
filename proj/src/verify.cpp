#include "repunit/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "repunit/oracle.hpp"

namespace repunit {

namespace {

CheckReport check_betti_counts(const GradedComplex& gc) {
    const RepunitSemigroup& s = gc.semigroup;
    const int n = s.nvars();
    if (static_cast<int>(gc.levels.size()) != n - 1) {
        std::ostringstream os;
        os << "resolution has " << gc.levels.size() << " levels, expected "
           << n - 1;
        return {false, os.str()};
    }
    for (std::size_t i = 0; i < gc.levels.size(); ++i) {
        const ResolutionLevel& level = gc.levels[i];
        const Int expected = betti_number(n, level.j);
        if (Int(level.shifts.size()) != expected ||
            Int(level.delta.cols()) != expected) {
            std::ostringstream os;
            os << "level " << level.j << " has " << level.shifts.size()
               << " shifts and " << level.delta.cols()
               << " columns, rank formula gives " << expected;
            return {false, os.str()};
        }
        const std::size_t want_rows =
            i == 0 ? 1 : gc.levels[i - 1].shifts.size();
        if (level.delta.rows() != want_rows) {
            std::ostringstream os;
            os << "delta_" << level.j << " has " << level.delta.rows()
               << " rows, previous level has rank " << want_rows;
            return {false, os.str()};
        }
        // The shift multiset must agree with its closed-form
        // enumeration, not just have the right size.
        const std::multiset<Int> claimed(level.shifts.begin(),
                                         level.shifts.end());
        if (claimed != level_shifts_direct(s, level.j)) {
            std::ostringstream os;
            os << "level " << level.j
               << " shifts differ from the direct enumeration";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

CheckReport check_pseudo_frobenius(const GradedComplex& gc) {
    const RepunitSemigroup& s = gc.semigroup;
    const std::vector<Int> formula = s.pf_formula();
    const std::vector<Int> brute = s.pf_bruteforce();
    if (formula != brute) {
        std::ostringstream os;
        os << "closed form gives {";
        for (const Int& v : formula) os << " " << v;
        os << " }, gap scan gives {";
        for (const Int& v : brute) os << " " << v;
        os << " }";
        return {false, os.str()};
    }
    // Top-level shifts, each reduced by the sum of the generators, must
    // reproduce the pseudo-Frobenius numbers.
    Int gen_sum = 0;
    for (const Int& g : s.generators()) gen_sum += g;
    std::multiset<Int> reduced;
    for (const Int& d : gc.levels.back().shifts) reduced.insert(d - gen_sum);
    const std::multiset<Int> expected(formula.begin(), formula.end());
    if (reduced != expected) {
        std::ostringstream os;
        os << "top-level shifts minus " << gen_sum
           << " do not match the pseudo-Frobenius numbers";
        return {false, os.str()};
    }
    return {true, ""};
}

}  // namespace

std::vector<NamedCheck> run_all_checks(const GradedComplex& gc,
                                       const VerifyOptions& options) {
    Int margin = options.margin.value_or(gc.semigroup.generators().back());
    std::vector<NamedCheck> checks;
    checks.push_back({"complex", verify_complex(gc)});
    checks.push_back({"homogeneity", verify_homogeneity(gc)});
    checks.push_back({"minimality", verify_minimality(gc)});
    checks.push_back({"betti-counts", check_betti_counts(gc)});
    checks.push_back({"pseudo-frobenius", check_pseudo_frobenius(gc)});
    checks.push_back(
        {"betti-oracle", betti_oracle_check(gc, margin, options.prime)});
    checks.push_back({"hilbert-series", hilbert_check(gc.semigroup, gc)});
    checks.push_back({"generic-rank",
                      generic_rank_check(gc, options.prime, options.trials,
                                         options.seed)});
    return checks;
}

bool all_passed(const std::vector<NamedCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const NamedCheck& c) { return c.report.pass; });
}

}  // namespace repunit
