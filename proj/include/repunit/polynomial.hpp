// Exact sparse multivariate polynomials under the semigroup grading
// deg(x_i) = a_i, plus sparse matrices of them.
//
// Values are immutable in spirit: every operation returns a fresh,
// canonically ordered polynomial. Terms are kept in descending
// graded-lex order of exponent vectors, which makes serialization
// byte-stable.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repunit/semigroup.hpp"
#include "repunit/types.hpp"

namespace repunit {

/// Exponent vector of a monomial x_1^e1 ... x_n^en.
struct Monomial {
    std::vector<std::int64_t> exps;

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool is_constant() const;
    Int total_degree() const;
};

/// Descending graded-lex: higher total degree first, ties broken by
/// lexicographic comparison with the larger vector first.
struct TermOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

class SparsePolynomial {
  public:
    using TermMap = std::map<Monomial, Int, TermOrder>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, Int value);
    /// x_i^exp with 1-based variable index.
    static SparsePolynomial variable(int nvars, int i, std::int64_t exp = 1);
    static SparsePolynomial from_monomial(Monomial m, Int coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the all-zero exponent vector (0 if absent).
    Int constant_term() const;

    SparsePolynomial operator-() const;
    SparsePolynomial operator+(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-(const SparsePolynomial& rhs) const;
    SparsePolynomial operator*(const SparsePolynomial& rhs) const;
    bool operator==(const SparsePolynomial& rhs) const = default;

  private:
    void add_term(const Monomial& m, const Int& coeff);

    int nvars_ = 0;
    TermMap terms_;
};

/// True iff all terms of p share one S-degree (zero counts as
/// homogeneous).
bool is_homogeneous(const SparsePolynomial& p, const RepunitSemigroup& s);

/// The common S-degree of a homogeneous polynomial. Throws ParamError
/// on the zero polynomial and on non-homogeneous input (the diagnostic
/// names two offending degrees).
Int sdegree(const SparsePolynomial& p, const RepunitSemigroup& s);

Int monomial_sdegree(const Monomial& m, const RepunitSemigroup& s);

/// Evaluation over the prime field F_p at the given point (one
/// coordinate per variable, each already reduced mod p).
std::uint64_t evaluate(const SparsePolynomial& p, const std::vector<std::uint64_t>& point,
                       std::uint64_t prime);

/// Trial-division primality for the field moduli used here. Moduli are
/// restricted to < 2^31 so products fit in 64 bits.
bool is_field_prime(std::uint64_t p);

/// Maps a 0-based variable index to its display name.
using VariableNamer = std::function<std::string(int)>;

/// "x1", "x2", ... (the canonical textual syntax).
std::string default_variable_name(int index);

/// Canonical text form: terms in descending graded-lex order, joined by
/// +/-, coefficient magnitudes printed only when != 1, factors joined
/// by '*', exponent 1 omitted. The zero polynomial prints as "0".
std::string to_string(const SparsePolynomial& p, const VariableNamer& namer = default_variable_name);

/// Parses the canonical syntax (tolerating whitespace). Inverse of
/// to_string for every polynomial in nvars variables.
SparsePolynomial parse_polynomial(const std::string& text, int nvars);

/// Sparse matrix over the polynomial ring. Stored entries are nonzero.
class PolyMatrix {
  public:
    using Key = std::pair<std::size_t, std::size_t>;  // (row, col)
    using EntryMap = std::map<Key, SparsePolynomial>;

    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars) {}

    static PolyMatrix identity(std::size_t n, int nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int nvars() const { return nvars_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    /// Stores p at (r, c); storing zero erases the entry.
    void set(std::size_t r, std::size_t c, SparsePolynomial p);
    /// nullptr when the entry is (structurally) zero.
    const SparsePolynomial* find(std::size_t r, std::size_t c) const;
    /// The entry value, materializing zero for absent cells.
    SparsePolynomial at(std::size_t r, std::size_t c) const;

    void clear_entries() { entries_.clear(); }

    bool operator==(const PolyMatrix& rhs) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    int nvars_ = 0;
    EntryMap entries_;
};

/// Exact product; zero entries are dropped. Throws ParamError on shape
/// or variable-count mismatch.
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

/// Dense image of the matrix over F_p at the given point.
std::vector<std::vector<std::uint64_t>> evaluate(const PolyMatrix& m,
                                                 const std::vector<std::uint64_t>& point,
                                                 std::uint64_t prime);

}  // namespace repunit
