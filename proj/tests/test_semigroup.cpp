#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

#include "repunit/semigroup.hpp"

using namespace repunit;

namespace {

RepunitSemigroup make(std::int64_t b, int n, std::int64_t a) {
    return RepunitSemigroup::construct({b, n, a});
}

std::vector<Int> ints(std::initializer_list<long> vs) {
    return std::vector<Int>(vs.begin(), vs.end());
}

// Membership by bounded exhaustive search over coefficient vectors,
// sharing nothing with the residue-table implementation.
bool naive_member(const std::vector<Int>& gens, const Int& s) {
    if (s == 0) return true;
    if (s < 0) return false;
    for (const Int& g : gens) {
        if (g <= s && naive_member(gens, s - g)) return true;
    }
    return false;
}

// Apery set by a plain sieve up to a caller-chosen bound.
std::vector<Int> sieve_apery(const std::vector<Int>& gens, long m, long bound) {
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (long s = 1; s <= bound; ++s) {
        for (const Int& g : gens) {
            const long gl = g.convert_to<long>();
            if (gl <= s && member[static_cast<std::size_t>(s - gl)]) {
                member[static_cast<std::size_t>(s)] = 1;
                break;
            }
        }
    }
    std::vector<Int> least(static_cast<std::size_t>(m), Int(-1));
    for (long s = 0; s <= bound; ++s) {
        auto& slot = least[static_cast<std::size_t>(s % m)];
        if (member[static_cast<std::size_t>(s)] && slot < 0) slot = s;
    }
    return least;
}

}  // namespace

TEST_CASE("construction evaluates the closed formulas") {
    const auto s = make(2, 3, 3);
    CHECK(s.generators() == ints({7, 10, 16}));
    CHECK(s.extended() == 28);
    CHECK(s.c() == 4);
    CHECK(s.nvars() == 3);
    CHECK(s.generator(1) == 7);
    CHECK(s.generator(3) == 16);
    CHECK(s.generator(4) == 28);
    CHECK_THROWS_AS(s.generator(0), ParamError);
    CHECK_THROWS_AS(s.generator(5), ParamError);

    const auto t = make(2, 2, 5);
    CHECK(t.generators() == ints({3, 8}));
    CHECK(t.extended() == 18);
    CHECK(t.c() == -2);

    const auto u = make(3, 4, 7);
    CHECK(u.generators() == ints({40, 47, 68, 131}));
    CHECK(u.extended() == 320);
    CHECK(u.c() == 73);
}

TEST_CASE("construction rejects each bad parameter with its own message") {
    CHECK_THROWS_WITH_AS(make(1, 3, 2), "b must be at least 2 (got 1)",
                         ParamError);
    CHECK_THROWS_WITH_AS(make(2, 1, 2), "n must be at least 2 (got 1)",
                         ParamError);
    CHECK_THROWS_WITH_AS(make(2, 3, 0), "a must be at least 1 (got 0)",
                         ParamError);
    CHECK_THROWS_WITH_AS(make(2, 3, 7),
                         "gcd(a, a1) = gcd(7, 7) = 7, must be 1", ParamError);
    // All four generators of this combination would be even.
    CHECK_THROWS_WITH_AS(make(3, 4, 2),
                         "gcd(a, a1) = gcd(2, 40) = 2, must be 1", ParamError);
}

using ParamTriple = std::tuple<std::int64_t, int, std::int64_t>;

TEST_CASE("generator recurrence b*a_i = c + a_{i+1}") {
    const std::vector<ParamTriple> cases{
        {2, 3, 3}, {2, 2, 5}, {3, 5, 8}, {2, 3, 8}, {5, 4, 7}};
    for (const auto& [b, n, a] : cases) {
        const auto s = make(b, n, a);
        for (int i = 1; i <= n; ++i) {
            CHECK(Int(b) * s.generator(i) == s.c() + s.generator(i + 1));
        }
    }
}

TEST_CASE("membership agrees with exhaustive search") {
    const auto s = make(2, 3, 3);
    CHECK(s.contains(0));
    CHECK(!s.contains(29));
    CHECK(s.contains(30));
    CHECK_THROWS_AS(s.contains(-1), ParamError);
    for (long v = 0; v <= 120; ++v) {
        CAPTURE(v);
        CHECK(s.contains(v) == naive_member(s.generators(), v));
    }
    const auto t = make(2, 2, 5);
    for (long v = 0; v <= 60; ++v) {
        CAPTURE(v);
        CHECK(t.contains(v) == naive_member(t.generators(), v));
    }
}

TEST_CASE("Apery sets are least per residue class") {
    const auto s = make(2, 3, 3);
    CHECK(s.apery_set() == ints({0, 36, 16, 10, 32, 26, 20}));
    CHECK(s.apery_set() == sieve_apery(s.generators(), 7, 200));

    // An arbitrary modulus from the semigroup works too.
    const auto ap10 = s.apery_set(10);
    CHECK(ap10 == sieve_apery(s.generators(), 10, 200));
    for (std::size_t r = 0; r < ap10.size(); ++r) {
        CHECK(ap10[r] % 10 == Int(r));
        CHECK(s.contains(ap10[r]));
        if (ap10[r] >= 10) CHECK(!s.contains(ap10[r] - 10));
    }

    CHECK_THROWS_AS(s.apery_set(0), ParamError);
    CHECK_THROWS_AS(s.apery_set(9), ParamError);  // 9 is a gap
}

TEST_CASE("gaps, Frobenius number and genus") {
    const auto t = make(2, 2, 5);
    CHECK(t.gaps() == ints({1, 2, 4, 5, 7, 10, 13}));
    CHECK(t.frobenius() == 13);

    const auto s = make(2, 3, 3);
    const auto gaps = s.gaps();
    CHECK(gaps.size() == 17);  // (sum of Apery values)/7 - 3
    CHECK(gaps.back() == 29);
    CHECK(s.frobenius() == 29);
    CHECK(std::is_sorted(gaps.begin(), gaps.end()));
    for (const Int& g : gaps) CHECK(!s.contains(g));
}

TEST_CASE("pseudo-Frobenius closed form equals the gap-scan definition") {
    const std::vector<ParamTriple> cases{{2, 3, 3}, {2, 2, 5}, {2, 4, 7},
                                         {3, 3, 5}, {2, 3, 8}, {3, 4, 7}};
    for (const auto& [b, n, a] : cases) {
        CAPTURE(b);
        CAPTURE(n);
        CAPTURE(a);
        const auto s = make(b, n, a);
        CHECK(s.pf_formula() == s.pf_bruteforce());
        CHECK(s.frobenius() == s.pf_formula().back());
        // The k = n-1 element is the largest exactly when c > 0; with
        // c < 0 the formula values descend in k and the max sits at
        // k = 1.
        if (s.c() > 0) {
            CHECK(s.frobenius() ==
                  Int(n - 1) * s.c() + Int(a) * s.generators().front());
        } else {
            CHECK(s.frobenius() ==
                  s.c() + Int(a) * s.generators().front());
        }
    }
    CHECK(make(2, 3, 3).pf_formula() == ints({25, 29}));
    CHECK(make(2, 2, 5).pf_formula() == ints({13}));
    CHECK(make(3, 4, 7).pf_formula() == ints({353, 426, 499}));
    // Negative c: the formula values descend in k and still work out.
    CHECK(make(2, 3, 8).pf_formula() == ints({54, 55}));
}

TEST_CASE("residue tables refuse absurd moduli instead of allocating") {
    // Valid parameters, but a_1 = 2^22 - 1 exceeds the table limit.
    const auto s = make(2, 22, 1);
    CHECK(s.generators().front() == (1 << 22) - 1);
    CHECK_THROWS_AS(s.contains(1), ParamError);
}
