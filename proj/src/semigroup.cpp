#include "repunit/semigroup.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <utility>

namespace repunit {

namespace {

// Residue tables are held in plain vectors; this bounds their size,
// not the magnitude of any value.
constexpr std::size_t kMaxResidues = 4'000'000;

std::size_t checked_modulus(const Int& m) {
    if (m > Int(kMaxResidues))
        throw ParamError("modulus " + m.str() + " exceeds the residue-table limit " +
                         std::to_string(kMaxResidues));
    return m.convert_to<std::size_t>();
}

// Least element of the semigroup generated by `gens` in every residue
// class mod m, by shortest-path relaxation over the residue graph
// (edge r -> r + g mod m of length g). Edge lengths are positive, so
// the first settled value per residue is the least one.
std::vector<Int> least_per_residue(const std::vector<Int>& gens, const Int& m) {
    const std::size_t mod = checked_modulus(m);
    std::vector<Int> least(mod, Int(-1));
    using Node = std::pair<Int, std::size_t>;
    auto cmp = [](const Node& x, const Node& y) { return x.first > y.first; };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> queue(cmp);
    queue.emplace(Int(0), 0);
    std::size_t settled = 0;
    while (!queue.empty() && settled < mod) {
        auto [value, r] = queue.top();
        queue.pop();
        if (least[r] >= 0)
            continue;
        least[r] = value;
        ++settled;
        for (const Int& g : gens) {
            const std::size_t step = (g % m).convert_to<std::size_t>();
            const std::size_t nr = (r + step) % mod;
            if (least[nr] < 0)
                queue.emplace(value + g, nr);
        }
    }
    return least;
}

}  // namespace

RepunitSemigroup RepunitSemigroup::construct(const RepunitParams& params) {
    if (params.b < 2)
        throw ParamError("b must be at least 2 (got " + std::to_string(params.b) + ")");
    if (params.n < 2)
        throw ParamError("n must be at least 2 (got " + std::to_string(params.n) + ")");
    if (params.a < 1)
        throw ParamError("a must be at least 1 (got " + std::to_string(params.a) + ")");

    const Int b(params.b), a(params.a);
    Int a1 = 0, power = 1;
    for (int j = 0; j < params.n; ++j) {
        a1 += power;
        power *= b;
    }
    const Int g = gcd(a, a1);
    if (g != 1)
        throw ParamError("gcd(a, a1) = gcd(" + a.str() + ", " + a1.str() + ") = " + g.str() +
                         ", must be 1");

    RepunitSemigroup s;
    s.params_ = params;
    s.gens_.push_back(a1);
    Int step = a;  // a * b^(i-2) for i = 2..n
    for (int i = 2; i <= params.n; ++i) {
        s.gens_.push_back(s.gens_.back() + step);
        step *= b;
    }
    s.extended_ = (a + 1) * a1;
    s.c_ = pow(b, static_cast<unsigned>(params.n)) - 1 - a;

    // Defining identities; a failure here means the formulas above are wrong.
    for (int i = 1; i <= params.n; ++i)
        if (b * s.generator(i) != s.c_ + s.generator(i + 1))
            throw CheckError("generator recurrence b*a_i = c + a_{i+1} failed at i = " +
                             std::to_string(i));
    Int all = s.gens_.front();
    for (const Int& gen : s.gens_)
        all = gcd(all, gen);
    if (all != 1)
        throw CheckError("generators are not coprime: gcd = " + all.str());
    return s;
}

const Int& RepunitSemigroup::generator(int i) const {
    if (i < 1 || i > params_.n + 1)
        throw ParamError("generator index " + std::to_string(i) + " out of range [1, " +
                         std::to_string(params_.n + 1) + "]");
    return i <= params_.n ? gens_[static_cast<std::size_t>(i - 1)] : extended_;
}

const std::vector<Int>& RepunitSemigroup::residue_table() const {
    std::call_once(table_->once,
                   [this] { table_->least = least_per_residue(gens_, gens_.front()); });
    return table_->least;
}

bool RepunitSemigroup::contains(const Int& s) const {
    if (s < 0)
        throw ParamError("membership is defined for nonnegative integers (got " + s.str() + ")");
    const auto& table = residue_table();
    const std::size_t r = (s % gens_.front()).convert_to<std::size_t>();
    return s >= table[r];
}

std::vector<Int> RepunitSemigroup::apery_set(const Int& m) const {
    if (m <= 0)
        throw ParamError("Apery modulus must be positive (got " + m.str() + ")");
    if (!contains(m))
        throw ParamError("Apery modulus " + m.str() + " is not an element of the semigroup");
    if (m == gens_.front())
        return residue_table();
    return least_per_residue(gens_, m);
}

std::vector<Int> RepunitSemigroup::apery_set() const { return residue_table(); }

Int RepunitSemigroup::frobenius() const {
    const auto& table = residue_table();
    return *std::max_element(table.begin(), table.end()) - gens_.front();
}

std::vector<Int> RepunitSemigroup::gaps() const {
    const Int bound = frobenius();
    std::vector<Int> result;
    for (Int s = 1; s <= bound; ++s)
        if (!contains(s))
            result.push_back(s);
    return result;
}

std::vector<Int> RepunitSemigroup::pf_formula() const {
    std::vector<Int> result;
    const Int base = Int(params_.a) * gens_.front();
    for (int k = 1; k <= params_.n - 1; ++k)
        result.push_back(Int(k) * c_ + base);
    std::sort(result.begin(), result.end());
    for (const Int& x : result) {
        if (x <= 0)
            throw CheckError("pseudo-Frobenius candidate " + x.str() + " is not positive");
        if (contains(x))
            throw CheckError("pseudo-Frobenius candidate " + x.str() +
                             " lies in the semigroup; the closed form is falsified");
    }
    return result;
}

std::vector<Int> RepunitSemigroup::pf_bruteforce() const {
    std::vector<Int> result;
    for (const Int& x : gaps()) {
        bool pf = true;
        for (const Int& gen : gens_) {
            if (!contains(x + gen)) {
                pf = false;
                break;
            }
        }
        if (pf)
            result.push_back(x);
    }
    return result;
}

}  // namespace repunit
