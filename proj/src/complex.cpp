#include "repunit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace repunit {

namespace {

// C(n, k) as an exact integer; small arguments only (k <= n <= ~60).
Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Strictly increasing k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int q = pos + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
    }
    return out;
}

std::string describe_entry(int j, std::size_t row, std::size_t col) {
    std::ostringstream os;
    os << "delta_" << j << " entry (" << row << ", " << col << ")";
    return os.str();
}

}  // namespace

Int basis_shift(const ENBasisElement& e, const RepunitSemigroup& s) {
    Int shift = (Int(e.u1) + 1) * s.c();
    for (int i : e.indices) shift += s.generator(i + 1);
    return shift;
}

Int betti_number(int n, int j) {
    if (j < 1 || j > n - 1) {
        std::ostringstream os;
        os << "homological level " << j << " outside [1, " << n - 1 << "]";
        throw ParamError(os.str());
    }
    return Int(j) * binomial(n, j + 1);
}

std::vector<ENBasisElement> en_basis(const RepunitSemigroup& s, int j) {
    betti_number(s.nvars(), j);  // validates the range of j
    std::vector<ENBasisElement> basis;
    for (const auto& sub : subsets_lex(s.nvars(), j + 1)) {
        for (std::int64_t u1 = j - 1; u1 >= 0; --u1) {
            basis.push_back({sub, u1, j - 1 - u1});
        }
    }
    return basis;
}

std::multiset<Int> level_shifts(const RepunitSemigroup& s, int j) {
    std::multiset<Int> shifts;
    for (const auto& e : en_basis(s, j)) {
        Int d = basis_shift(e, s);
        if (d <= 0) {
            std::ostringstream os;
            os << "nonpositive shift " << d << " at level " << j;
            throw CheckError(os.str());
        }
        shifts.insert(d);
    }
    return shifts;
}

std::multiset<Int> level_shifts_direct(const RepunitSemigroup& s, int j) {
    betti_number(s.nvars(), j);
    std::multiset<Int> shifts;
    // (j+1)-subsets of the generator indices {2, ..., n+1}.
    for (const auto& sub : subsets_lex(s.nvars(), j + 1)) {
        Int base = 0;
        for (int i : sub) base += s.generator(i + 1);
        for (int k = 1; k <= j; ++k) shifts.insert(Int(k) * s.c() + base);
    }
    return shifts;
}

PolyMatrix matrix_x(const RepunitSemigroup& s) {
    const int n = s.nvars();
    PolyMatrix x(2, static_cast<std::size_t>(n), n);
    for (int i = 0; i < n; ++i) {
        x.set(0, i, SparsePolynomial::variable(n, i + 1, s.params().b));
    }
    for (int i = 0; i + 1 < n; ++i) {
        x.set(1, i, SparsePolynomial::variable(n, i + 2, 1));
    }
    x.set(1, n - 1, SparsePolynomial::variable(n, 1, s.params().a + 1));
    return x;
}

PolyMatrix d1_matrix(const RepunitSemigroup& s) {
    const PolyMatrix x = matrix_x(s);
    const auto basis = en_basis(s, 1);
    PolyMatrix d(1, basis.size(), s.nvars());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const int i = basis[col].indices[0] - 1;
        const int k = basis[col].indices[1] - 1;
        d.set(0, col, x.at(0, i) * x.at(1, k) - x.at(1, i) * x.at(0, k));
    }
    return d;
}

PolyMatrix dj_matrix(const RepunitSemigroup& s, int j) {
    if (j < 2) throw ParamError("dj_matrix needs level >= 2");
    const PolyMatrix x = matrix_x(s);
    const auto domain = en_basis(s, j);
    const auto codomain = en_basis(s, j - 1);

    // Row lookup. The basis order is deterministic, so the map is only
    // a convenience over a linear scan.
    std::map<std::pair<std::vector<int>, std::int64_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r) {
        row_of[{codomain[r].indices, codomain[r].u1}] = r;
    }

    PolyMatrix d(codomain.size(), domain.size(), s.nvars());
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const ENBasisElement& e = domain[col];
        for (int k = 1; k <= 2; ++k) {
            const std::int64_t uk = (k == 1) ? e.u1 : e.u2;
            if (uk == 0) continue;
            for (std::size_t l = 0; l < e.indices.size(); ++l) {
                ENBasisElement target;
                target.indices = e.indices;
                target.indices.erase(target.indices.begin() +
                                     static_cast<std::ptrdiff_t>(l));
                target.u1 = e.u1 - (k == 1 ? 1 : 0);
                target.u2 = e.u2 - (k == 2 ? 1 : 0);
                // Distinct (k, l) always hit distinct rows: k changes
                // the y-part, l changes the subset.
                const std::size_t row = row_of.at({target.indices, target.u1});
                SparsePolynomial entry = x.at(k - 1, e.indices[l] - 1);
                if (l % 2 == 1) entry = -entry;
                d.set(row, col, std::move(entry));
            }
        }
    }
    return d;
}

std::vector<SparsePolynomial> toric_minors(const RepunitSemigroup& s) {
    const PolyMatrix d = d1_matrix(s);
    const Int expected = betti_number(s.nvars(), 1);
    if (Int(d.cols()) != expected) {
        throw CheckError("generator count differs from n(n-1)/2");
    }
    std::vector<SparsePolynomial> gens;
    for (std::size_t col = 0; col < d.cols(); ++col) {
        const SparsePolynomial& p = d.at(0, col);
        if (p.term_count() != 2) {
            throw CheckError("toric generator is not a binomial: " +
                             to_string(p));
        }
        std::vector<Int> degrees;
        for (const auto& [mono, coeff] : p.terms()) {
            if (coeff != 1 && coeff != -1) {
                throw CheckError("toric generator has a coefficient != +-1: " +
                                 to_string(p));
            }
            degrees.push_back(monomial_sdegree(mono, s));
        }
        if (degrees[0] != degrees[1]) {
            throw CheckError("toric generator is not S-homogeneous: " +
                             to_string(p));
        }
        gens.push_back(p);
    }
    return gens;
}

GradedComplex build_resolution(const RepunitSemigroup& s) {
    GradedComplex gc{s, {}};
    const int n = s.nvars();
    for (int j = 1; j <= n - 1; ++j) {
        ResolutionLevel level;
        level.j = j;
        level.basis = en_basis(s, j);
        for (const auto& e : level.basis) {
            Int d = basis_shift(e, s);
            if (d <= 0) {
                std::ostringstream os;
                os << "nonpositive shift " << d << " at level " << j;
                throw CheckError(os.str());
            }
            level.shifts.push_back(d);
        }
        level.delta = (j == 1) ? d1_matrix(s) : dj_matrix(s, j);
        if (Int(level.delta.cols()) != betti_number(n, j)) {
            throw CheckError("differential width differs from the rank "
                             "formula");
        }
        gc.levels.push_back(std::move(level));
    }
    return gc;
}

CheckReport verify_complex(const GradedComplex& gc) {
    for (std::size_t i = 0; i + 1 < gc.levels.size(); ++i) {
        const PolyMatrix prod =
            matmul(gc.levels[i].delta, gc.levels[i + 1].delta);
        for (const auto& [pos, poly] : prod.entries()) {
            if (!poly.is_zero()) {
                std::ostringstream os;
                os << "delta_" << gc.levels[i].j << " * delta_"
                   << gc.levels[i + 1].j << " has nonzero entry ("
                   << pos.first << ", " << pos.second
                   << ") = " << to_string(poly);
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

CheckReport verify_homogeneity(const GradedComplex& gc) {
    const RepunitSemigroup& s = gc.semigroup;
    for (std::size_t i = 0; i < gc.levels.size(); ++i) {
        const ResolutionLevel& level = gc.levels[i];
        const std::vector<Int>* row_shifts =
            (i == 0) ? nullptr : &gc.levels[i - 1].shifts;
        for (const auto& [pos, poly] : level.delta.entries()) {
            if (poly.is_zero()) continue;
            const Int row_shift = row_shifts ? (*row_shifts)[pos.first] : 0;
            const Int expected = level.shifts[pos.second] - row_shift;
            Int actual;
            try {
                actual = sdegree(poly, s);
            } catch (const ParamError& err) {
                return {false, describe_entry(level.j, pos.first, pos.second) +
                                   " is not homogeneous: " + err.what()};
            }
            if (actual != expected) {
                std::ostringstream os;
                os << describe_entry(level.j, pos.first, pos.second)
                   << " has degree " << actual << ", shifts demand "
                   << expected;
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

CheckReport verify_minimality(const GradedComplex& gc) {
    for (const ResolutionLevel& level : gc.levels) {
        for (const auto& [pos, poly] : level.delta.entries()) {
            if (poly.constant_term() != 0) {
                std::ostringstream os;
                os << describe_entry(level.j, pos.first, pos.second)
                   << " has constant term " << poly.constant_term();
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

BettiTable betti_table(const GradedComplex& gc) {
    BettiTable table;
    for (const ResolutionLevel& level : gc.levels) {
        table[level.j] =
            std::multiset<Int>(level.shifts.begin(), level.shifts.end());
    }
    return table;
}

FaultKind parse_fault_kind(const std::string& name) {
    if (name == "sign") return FaultKind::sign;
    if (name == "constant") return FaultKind::constant;
    if (name == "shift") return FaultKind::shift;
    if (name == "zero") return FaultKind::zero;
    if (name == "claim") return FaultKind::claim;
    throw ParamError("unknown fault kind '" + name +
                     "' (expected sign, constant, shift, zero or claim)");
}

void inject_fault(GradedComplex& gc, FaultKind kind) {
    if (kind == FaultKind::claim) {
        throw CheckError("injected claim fault");
    }
    if (gc.levels.empty()) throw ParamError("empty complex");
    switch (kind) {
        case FaultKind::sign: {
            // Prefer a level-2 entry so that a composition with delta_1
            // exists and can notice the flip.
            ResolutionLevel& level =
                gc.levels.size() > 1 ? gc.levels[1] : gc.levels[0];
            if (level.delta.entries().empty()) {
                throw ParamError("no entry to mutate");
            }
            const auto& [pos, poly] = *level.delta.entries().begin();
            level.delta.set(pos.first, pos.second, -poly);
            break;
        }
        case FaultKind::constant: {
            PolyMatrix& delta = gc.levels[0].delta;
            if (delta.entries().empty()) throw ParamError("no entry to mutate");
            const auto& [pos, poly] = *delta.entries().begin();
            delta.set(pos.first, pos.second,
                      poly + SparsePolynomial::constant(poly.nvars(), 1));
            break;
        }
        case FaultKind::shift: {
            if (gc.levels[0].shifts.empty()) {
                throw ParamError("no shift to mutate");
            }
            gc.levels[0].shifts[0] += 1;
            break;
        }
        case FaultKind::zero: {
            ResolutionLevel& level =
                gc.levels.size() > 1 ? gc.levels[1] : gc.levels[0];
            level.delta.clear_entries();
            break;
        }
        case FaultKind::claim:
            break;  // handled above
    }
}

namespace {

bool match_under(const PolyMatrix& a, const PolyMatrix& b,
                 const std::vector<std::size_t>& row_perm,
                 const std::vector<int>& row_sign,
                 const std::vector<std::size_t>& col_perm,
                 const std::vector<int>& col_sign) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            SparsePolynomial lhs = a.at(row_perm[r], col_perm[c]);
            if (row_sign[r] * col_sign[c] < 0) lhs = -lhs;
            if (!(lhs == b.at(r, c))) return false;
        }
    }
    return true;
}

// Enumerates sign vectors as bitmasks; dimension stays tiny (<= ~6).
bool search_signs(const PolyMatrix& a, const PolyMatrix& b,
                  const std::vector<std::size_t>& row_perm,
                  const std::vector<std::size_t>& col_perm) {
    const std::size_t nr = b.rows();
    const std::size_t nc = b.cols();
    for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << nr); ++rm) {
        std::vector<int> row_sign(nr);
        for (std::size_t r = 0; r < nr; ++r) {
            row_sign[r] = (rm >> r) & 1 ? -1 : 1;
        }
        for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << nc); ++cm) {
            std::vector<int> col_sign(nc);
            for (std::size_t c = 0; c < nc; ++c) {
                col_sign[c] = (cm >> c) & 1 ? -1 : 1;
            }
            if (match_under(a, b, row_perm, row_sign, col_perm, col_sign)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

bool signed_permutation_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.rows() > 6 || a.cols() > 6) {
        throw ParamError("signed_permutation_equal limited to 6 x 6");
    }
    for (const auto& rp : all_permutations(a.rows())) {
        for (const auto& cp : all_permutations(a.cols())) {
            if (search_signs(a, b, rp, cp)) return true;
        }
    }
    return false;
}

bool signed_permutation_equal_pair(const PolyMatrix& d1a, const PolyMatrix& d2a,
                                   const PolyMatrix& d1b,
                                   const PolyMatrix& d2b) {
    if (d1a.rows() != 1 || d1b.rows() != 1 || d1a.cols() != d2a.rows() ||
        d1b.cols() != d2b.rows() || d1a.cols() != d1b.cols() ||
        d2a.cols() != d2b.cols()) {
        return false;
    }
    const std::size_t mid = d1a.cols();
    if (mid > 6 || d2a.cols() > 6) {
        throw ParamError("signed_permutation_equal_pair limited to 6 x 6");
    }
    const std::vector<std::size_t> one_row{0};
    for (const auto& mp : all_permutations(mid)) {
        for (std::uint64_t mm = 0; mm < (std::uint64_t{1} << mid); ++mm) {
            std::vector<int> mid_sign(mid);
            for (std::size_t i = 0; i < mid; ++i) {
                mid_sign[i] = (mm >> i) & 1 ? -1 : 1;
            }
            // The middle permutation and signs act on d1's columns and
            // d2's rows at once; only d2's column action remains free.
            if (!match_under(d1a, d1b, one_row, {1}, mp, mid_sign)) continue;
            bool found = false;
            for (const auto& cp : all_permutations(d2a.cols())) {
                for (std::uint64_t cm = 0;
                     cm < (std::uint64_t{1} << d2a.cols()) && !found; ++cm) {
                    std::vector<int> col_sign(d2a.cols());
                    for (std::size_t c = 0; c < d2a.cols(); ++c) {
                        col_sign[c] = (cm >> c) & 1 ? -1 : 1;
                    }
                    if (match_under(d2a, d2b, mp, mid_sign, cp, col_sign)) {
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) return true;
        }
    }
    return false;
}

}  // namespace repunit
