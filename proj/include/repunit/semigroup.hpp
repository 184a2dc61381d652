// Generalized repunit numerical semigroups: construction, membership,
// Apery sets, gaps, pseudo-Frobenius elements and the Frobenius number.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "repunit/types.hpp"

namespace repunit {

/// Defining parameter triple (b, n, a).
///
/// Valid iff b >= 2, n >= 2, a >= 1 and gcd(a, a1) = 1 where
/// a1 = 1 + b + ... + b^(n-1).
struct RepunitParams {
    std::int64_t b = 0;
    int n = 0;
    std::int64_t a = 0;
};

/// The numerical semigroup S = <a_1, ..., a_n> with
///   a_1 = sum_{j<n} b^j,   a_i - a_{i-1} = a * b^(i-2).
///
/// Alongside the minimal generators the object carries the extended
/// generator a_{n+1} = (a+1) * a_1 and the constant c = b^n - 1 - a,
/// which satisfy b * a_i = c + a_{i+1} for i = 1..n. c is negative for
/// large a; it is never zero for valid parameters.
///
/// Instances are immutable after construction; all const queries are
/// safe to call from concurrent threads.
class RepunitSemigroup {
  public:
    /// Validates the parameters and evaluates the closed formulas.
    /// Throws ParamError with a distinct diagnostic per violated
    /// precondition, CheckError if a defining identity fails to hold.
    static RepunitSemigroup construct(const RepunitParams& params);

    const RepunitParams& params() const { return params_; }
    int nvars() const { return params_.n; }

    /// Minimal generators a_1..a_n, strictly increasing.
    const std::vector<Int>& generators() const { return gens_; }

    /// a_i for 1 <= i <= n+1; index n+1 yields the extended generator.
    const Int& generator(int i) const;

    /// a_{n+1} = (a+1) * a_1.
    const Int& extended() const { return extended_; }

    /// c = b^n - 1 - a (possibly negative, never zero).
    const Int& c() const { return c_; }

    /// Membership test. O(1) after the per-residue table is built.
    /// Throws ParamError for s < 0.
    bool contains(const Int& s) const;

    /// Least element of S in every residue class modulo m. Entry r is
    /// the least s in S with s === r (mod m). Requires m > 0 and m in S.
    std::vector<Int> apery_set(const Int& m) const;

    /// apery_set(a_1).
    std::vector<Int> apery_set() const;

    /// The finite complement N \ S, sorted ascending.
    std::vector<Int> gaps() const;

    /// { k*c + a*a_1 : k = 1..n-1 }, sorted ascending. Every element is
    /// checked to be positive and outside S; a violation would falsify
    /// the closed form for these parameters and raises CheckError.
    std::vector<Int> pf_formula() const;

    /// Pseudo-Frobenius elements computed from the gap list by
    /// definition: x is kept iff x + a_i lies in S for every generator.
    std::vector<Int> pf_bruteforce() const;

    /// Largest gap, computed from the Apery set of a_1.
    Int frobenius() const;

  private:
    RepunitSemigroup() = default;

    // Least element per residue class mod a_1, built on first use.
    struct ResidueTable {
        std::once_flag once;
        std::vector<Int> least;
    };
    const std::vector<Int>& residue_table() const;

    RepunitParams params_;
    std::vector<Int> gens_;
    Int extended_;
    Int c_;
    std::shared_ptr<ResidueTable> table_ = std::make_shared<ResidueTable>();
};

}  // namespace repunit
