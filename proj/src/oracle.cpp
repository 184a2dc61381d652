#include "repunit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

namespace repunit {

namespace {

// Large enough for every parameter set the tools accept, small enough
// to keep an accidental huge scan from exhausting memory.
constexpr std::int64_t kMaxScan = 8'000'000;

void require_prime(std::uint32_t prime) {
    if (!is_field_prime(prime)) {
        std::ostringstream os;
        os << prime << " is not a usable field characteristic";
        throw ParamError(os.str());
    }
}

std::size_t to_index(const Int& v, const char* what) {
    if (v < 0 || v > kMaxScan) {
        std::ostringstream os;
        os << what << " " << v << " outside [0, " << kMaxScan << "]";
        throw CheckError(os.str());
    }
    return v.convert_to<std::size_t>();
}

}  // namespace

SimplicialComplex divisor_complex(const RepunitSemigroup& s,
                                  const Int& degree) {
    SimplicialComplex complex;
    complex.nverts = s.nvars();
    if (degree < 0 || !s.contains(degree)) return complex;

    const auto& gens = s.generators();
    const std::uint32_t full = (std::uint32_t{1} << s.nvars()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        Int rest = degree;
        for (int i = 0; i < s.nvars(); ++i) {
            if (mask >> i & 1) rest -= gens[static_cast<std::size_t>(i)];
        }
        if (rest >= 0 && s.contains(rest)) complex.faces.insert(mask);
    }
    return complex;
}

std::vector<int> reduced_homology_dims(const SimplicialComplex& complex,
                                       std::uint32_t prime) {
    require_prime(prime);
    const int n = complex.nverts;
    // chains[d+1] lists the faces with d+1 vertices, in mask order.
    std::vector<std::vector<std::uint32_t>> chains(
        static_cast<std::size_t>(n) + 2);
    std::vector<std::map<std::uint32_t, std::size_t>> index(
        static_cast<std::size_t>(n) + 2);
    for (std::uint32_t face : complex.faces) {
        const int d = std::popcount(face) - 1;
        index[static_cast<std::size_t>(d) + 1][face] =
            chains[static_cast<std::size_t>(d) + 1].size();
        chains[static_cast<std::size_t>(d) + 1].push_back(face);
    }

    // boundary_rank[d+1] = rank of the map from d-chains to (d-1)-chains.
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(n) + 2, 0);
    for (int d = 0; d <= n - 1; ++d) {
        const auto& cols = chains[static_cast<std::size_t>(d) + 1];
        const auto& rows = index[static_cast<std::size_t>(d)];
        if (cols.empty() || rows.empty()) continue;
        std::vector<std::vector<std::uint64_t>> m(
            rows.size(), std::vector<std::uint64_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int sign_parity = 0;
            for (int v = 0; v < n; ++v) {
                if (!(cols[c] >> v & 1)) continue;
                const std::uint32_t sub = cols[c] & ~(std::uint32_t{1} << v);
                const std::size_t r = rows.at(sub);
                m[r][c] = (sign_parity % 2 == 0) ? 1 : prime - 1;
                ++sign_parity;
            }
        }
        boundary_rank[static_cast<std::size_t>(d) + 1] = rank_mod_p(m, prime);
    }

    std::vector<int> dims(static_cast<std::size_t>(n) + 1, 0);
    for (int d = -1; d <= n - 1; ++d) {
        const std::size_t i = static_cast<std::size_t>(d) + 1;
        dims[i] = static_cast<int>(chains[i].size() - boundary_rank[i] -
                                   boundary_rank[i + 1]);
    }
    return dims;
}

BettiTable graded_betti_oracle(const RepunitSemigroup& s, int max_level,
                               const Int& bound, std::uint32_t prime) {
    require_prime(prime);
    to_index(bound, "oracle scan bound");
    BettiTable table;
    for (Int degree = 1; degree <= bound; ++degree) {
        if (!s.contains(degree)) continue;
        const auto dims = reduced_homology_dims(divisor_complex(s, degree),
                                                prime);
        for (int j = 1; j <= max_level && j < static_cast<int>(dims.size());
             ++j) {
            for (int m = 0; m < dims[static_cast<std::size_t>(j)]; ++m) {
                table[j].insert(degree);
            }
        }
    }
    return table;
}

Int max_claimed_shift(const GradedComplex& gc) {
    Int top = 0;
    for (const auto& level : gc.levels) {
        for (const Int& d : level.shifts) top = std::max(top, d);
    }
    return top;
}

CheckReport betti_oracle_check(const GradedComplex& gc, const Int& margin,
                               std::uint32_t prime) {
    if (margin < 0) throw ParamError("negative scan margin");
    const int n = gc.semigroup.nvars();
    const Int bound = max_claimed_shift(gc) + margin;
    // Scan one level past the claimed length: homology there means the
    // claimed resolution is too short, which multiset comparison of the
    // existing levels would never see.
    const BettiTable oracle =
        graded_betti_oracle(gc.semigroup, n, bound, prime);
    const BettiTable claimed = betti_table(gc);

    for (int j = 1; j <= n; ++j) {
        const auto claimed_it = claimed.find(j);
        const auto oracle_it = oracle.find(j);
        static const std::multiset<Int> empty;
        const auto& want = claimed_it == claimed.end() ? empty
                                                       : claimed_it->second;
        const auto& got = oracle_it == oracle.end() ? empty
                                                    : oracle_it->second;
        if (want == got) continue;
        std::ostringstream os;
        os << "level " << j << ": claimed {";
        for (const Int& d : want) os << " " << d;
        os << " }, homology scan to " << bound << " found {";
        for (const Int& d : got) os << " " << d;
        os << " }";
        return {false, os.str()};
    }
    return {true, ""};
}

CheckReport hilbert_check(const RepunitSemigroup& s, const GradedComplex& gc) {
    const Int frobenius = s.frobenius();
    const std::size_t top =
        to_index(frobenius + max_claimed_shift(gc) + 1, "series truncation");

    std::vector<Int> coef(top + 1, 0);
    coef[0] = 1;
    for (const auto& level : gc.levels) {
        const Int sign = (level.j % 2 == 0) ? 1 : -1;
        for (const Int& d : level.shifts) {
            const std::size_t i = to_index(d, "shift");
            if (i <= top) coef[i] += sign;
        }
    }
    // Multiply by each 1/(1 - t^g) as a truncated power series.
    for (const Int& gen : s.generators()) {
        const std::size_t g = to_index(gen, "generator");
        for (std::size_t d = g; d <= top; ++d) coef[d] += coef[d - g];
    }
    for (std::size_t d = 0; d <= top; ++d) {
        const Int want = s.contains(Int(d)) ? 1 : 0;
        if (coef[d] != want) {
            std::ostringstream os;
            os << "series coefficient at t^" << d << " is " << coef[d]
               << ", membership says " << want;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

CheckReport generic_rank_check(const GradedComplex& gc, std::uint32_t prime,
                               int trials, std::uint64_t seed) {
    require_prime(prime);
    if (trials < 1) throw ParamError("rank check needs at least one trial");
    const int n = gc.semigroup.nvars();

    std::vector<std::size_t> best(gc.levels.size(), 0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coord(1, prime - 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::uint64_t> point(static_cast<std::size_t>(n));
        for (auto& c : point) c = coord(rng);
        for (std::size_t i = 0; i < gc.levels.size(); ++i) {
            best[i] = std::max(
                best[i],
                rank_mod_p(evaluate(gc.levels[i].delta, point, prime), prime));
        }
    }

    auto fail = [&](const std::string& head) {
        std::ostringstream os;
        os << head << "; observed ranks";
        for (std::size_t i = 0; i < best.size(); ++i) {
            os << " r_" << gc.levels[i].j << "=" << best[i];
        }
        return CheckReport{false, os.str()};
    };
    if (best.empty() || best[0] != 1) {
        return fail("rank of delta_1 should be 1");
    }
    for (std::size_t i = 0; i < gc.levels.size(); ++i) {
        const Int expected = betti_number(n, gc.levels[i].j);
        const std::size_t next = (i + 1 < best.size()) ? best[i + 1] : 0;
        if (Int(best[i]) + Int(next) != expected) {
            std::ostringstream os;
            os << "rank sum at level " << gc.levels[i].j << " is "
               << best[i] + next << ", module rank is " << expected;
            return fail(os.str());
        }
    }
    return {true, ""};
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m,
                       std::uint32_t prime) {
    if (m.empty() || m[0].empty()) return 0;
    const std::uint64_t p = prime;
    const std::size_t nrows = m.size();
    const std::size_t ncols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][col] % p == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[rank], m[pivot]);
        // Normalize the pivot row via Fermat inverse.
        std::uint64_t inv = 1, base = m[rank][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t c = col; c < ncols; ++c) {
            m[rank][c] = m[rank][c] % p * inv % p;
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] % p == 0) continue;
            const std::uint64_t f = m[r][col] % p;
            for (std::size_t c = col; c < ncols; ++c) {
                m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace repunit
