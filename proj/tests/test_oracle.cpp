#include <doctest.h>

#include <set>
#include <tuple>
#include <vector>

#include "repunit/oracle.hpp"
#include "repunit/verify.hpp"

using namespace repunit;

namespace {

RepunitSemigroup make(std::int64_t b, int n, std::int64_t a) {
    return RepunitSemigroup::construct({b, n, a});
}

SimplicialComplex complex_of(int nverts,
                             std::initializer_list<std::uint32_t> faces) {
    SimplicialComplex c;
    c.nverts = nverts;
    c.faces = faces;
    return c;
}

}  // namespace

TEST_CASE("reduced homology of the small standard complexes") {
    // Void complex: no faces at all, homology vanishes everywhere.
    CHECK(reduced_homology_dims(complex_of(3, {}), 32003) ==
          std::vector<int>{0, 0, 0, 0});

    // Just the empty face: one dimension in degree -1.
    CHECK(reduced_homology_dims(complex_of(3, {0}), 32003) ==
          std::vector<int>{1, 0, 0, 0});

    // Two isolated vertices: connected components minus one.
    CHECK(reduced_homology_dims(complex_of(2, {0b00, 0b01, 0b10}), 32003) ==
          std::vector<int>{0, 1, 0});

    // Hollow triangle: a single loop.
    CHECK(reduced_homology_dims(
              complex_of(3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101,
                             0b110}),
              32003) == std::vector<int>{0, 0, 1, 0});

    // Filled triangle: contractible.
    CHECK(reduced_homology_dims(
              complex_of(3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110,
                             0b111}),
              32003) == std::vector<int>{0, 0, 0, 0});

    CHECK_THROWS_AS(reduced_homology_dims(complex_of(3, {0}), 6), ParamError);
}

TEST_CASE("rank over a prime field") {
    using M = std::vector<std::vector<std::uint64_t>>;
    CHECK(rank_mod_p(M{}, 5) == 0);
    CHECK(rank_mod_p(M{{0, 0}, {0, 0}}, 5) == 0);
    CHECK(rank_mod_p(M{{1, 2}, {2, 4}}, 5) == 1);
    CHECK(rank_mod_p(M{{1, 2}, {2, 5}}, 5) == 2);
    CHECK(rank_mod_p(M{{1, 0, 3}, {0, 1, 4}}, 7) == 2);
    // 2 vanishes mod 2, so the rank drops with the field.
    CHECK(rank_mod_p(M{{2}}, 2) == 0);
    CHECK(rank_mod_p(M{{2}}, 5) == 1);
}

TEST_CASE("divisor complexes of the running example") {
    const auto s = make(2, 3, 3);  // <7, 10, 16>

    // Degree outside the semigroup: void.
    CHECK(divisor_complex(s, 29).is_void());
    CHECK(divisor_complex(s, -5).is_void());

    // Degree 30 = 7+7+16 = 10+10+10: vertex 2 is separated from the
    // edge {1,3}, giving one extra connected component.
    const auto d30 = divisor_complex(s, 30);
    CHECK(d30.faces ==
          std::set<std::uint32_t>{0b000, 0b001, 0b010, 0b100, 0b101});
    CHECK(reduced_homology_dims(d30, 32003) == std::vector<int>{0, 1, 0, 0});

    // Degree 58: the hollow triangle (58 - 7 - 10 - 16 = 25 is a gap).
    const auto d58 = divisor_complex(s, 58);
    CHECK(d58.faces == std::set<std::uint32_t>{0b000, 0b001, 0b010, 0b100,
                                               0b011, 0b101, 0b110});
    CHECK(reduced_homology_dims(d58, 32003) == std::vector<int>{0, 0, 1, 0});

    // Deep in the semigroup everything is a face and homology is zero.
    const auto deep = divisor_complex(s, 500);
    CHECK(deep.faces.size() == 8);
    CHECK(reduced_homology_dims(deep, 32003) ==
          std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("graded Betti numbers from homology scans") {
    const auto s = make(2, 3, 3);
    const auto table = graded_betti_oracle(s, 3, 100, 32003);
    CHECK(table.at(1) == std::multiset<Int>{30, 42, 48});
    CHECK(table.at(2) == std::multiset<Int>{58, 62});
    CHECK(table.count(3) == 0);  // no homology past the top level

    CHECK_THROWS_AS(graded_betti_oracle(s, 3, Int(9'000'000), 32003),
                    CheckError);
}

TEST_CASE("homology dimensions do not depend on the prime here") {
    using ParamTriple = std::tuple<std::int64_t, int, std::int64_t>;
    const std::vector<ParamTriple> cases{
        {2, 3, 3}, {2, 4, 1}, {3, 3, 2}, {2, 2, 7}, {2, 5, 3}};
    for (const auto& [b, n, a] : cases) {
        CAPTURE(b);
        CAPTURE(n);
        CAPTURE(a);
        const auto s = make(b, n, a);
        const auto gc = build_resolution(s);
        const Int bound = max_claimed_shift(gc) + s.generators().back();
        const auto t2 = graded_betti_oracle(s, n, bound, 2);
        const auto t3 = graded_betti_oracle(s, n, bound, 3);
        const auto t32003 = graded_betti_oracle(s, n, bound, 32003);
        CHECK(t2 == t3);
        CHECK(t2 == t32003);
    }
}

TEST_CASE("oracle comparison accepts the construction and spots damage") {
    const auto s = make(2, 3, 3);
    auto gc = build_resolution(s);
    CHECK(max_claimed_shift(gc) == 62);
    CHECK(betti_oracle_check(gc, 16, 32003).pass);
    CHECK(betti_oracle_check(gc, 0, 32003).pass);
    CHECK_THROWS_AS(betti_oracle_check(gc, -1, 32003), ParamError);

    inject_fault(gc, FaultKind::shift);
    const auto report = betti_oracle_check(gc, 16, 32003);
    CHECK(!report.pass);
    CHECK(report.detail.find("level 1") != std::string::npos);
}

TEST_CASE("series identity for membership counting") {
    for (auto [b, n, a] : std::vector<std::tuple<std::int64_t, int,
                                                 std::int64_t>>{
             {2, 3, 3}, {2, 2, 5}, {2, 4, 7}, {3, 3, 4}}) {
        const auto s = make(b, n, a);
        auto gc = build_resolution(s);
        CHECK(hilbert_check(s, gc).pass);
        gc.levels[0].shifts[0] += 1;
        CHECK(!hilbert_check(s, gc).pass);
    }
}

TEST_CASE("generic rank certificate") {
    const auto s = make(2, 3, 3);
    auto gc = build_resolution(s);
    CHECK(generic_rank_check(gc, 32003, 5, 20250815).pass);
    CHECK(generic_rank_check(gc, 101, 5, 1).pass);
    CHECK_THROWS_AS(generic_rank_check(gc, 32003, 0, 1), ParamError);
    CHECK_THROWS_AS(generic_rank_check(gc, 32004, 5, 1), ParamError);

    inject_fault(gc, FaultKind::zero);
    const auto report = generic_rank_check(gc, 32003, 5, 20250815);
    CHECK(!report.pass);
    CHECK(report.detail.find("rank sum") != std::string::npos);
}

TEST_CASE("the full battery names its checks in order") {
    const auto checks = run_all_checks(build_resolution(make(2, 3, 3)));
    REQUIRE(checks.size() == 8);
    const char* names[] = {"complex",          "homogeneity",
                           "minimality",       "betti-counts",
                           "pseudo-frobenius", "betti-oracle",
                           "hilbert-series",   "generic-rank"};
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CHECK(checks[i].name == names[i]);
        CHECK(checks[i].report.pass);
    }
    CHECK(all_passed(checks));

    GradedComplex faulted = build_resolution(make(2, 3, 3));
    inject_fault(faulted, FaultKind::sign);
    CHECK(!all_passed(run_all_checks(faulted)));
}
