#include <doctest.h>

#include <string>
#include <vector>

#include "repunit/export.hpp"

using namespace repunit;

namespace {

RepunitSemigroup make(std::int64_t b, int n, std::int64_t a) {
    return RepunitSemigroup::construct({b, n, a});
}

}  // namespace

TEST_CASE("info document") {
    const auto doc = info_to_json(make(2, 3, 3));
    CHECK(doc.at("schema") == "repunit-info/1");
    CHECK(doc.at("params").at("b") == 2);
    CHECK(doc.at("params").at("n") == 3);
    CHECK(doc.at("params").at("a") == 3);
    CHECK(doc.at("generators") == Json::array({7, 10, 16}));
    CHECK(doc.at("extended") == 28);
    CHECK(doc.at("c") == 4);
    CHECK(doc.at("betti") == Json::array({3, 2}));
    CHECK(doc.at("pseudo_frobenius") == Json::array({25, 29}));
    CHECK(doc.at("frobenius") == 29);
    CHECK(dump_json(doc).back() == '\n');
}

TEST_CASE("resolution document layout") {
    const auto gc = build_resolution(make(2, 3, 3));
    const auto doc = resolution_to_json(gc);
    CHECK(doc.at("schema") == "repunit-resolution/1");
    CHECK(doc.at("generators") == Json::array({7, 10, 16}));
    CHECK(doc.at("extended") == 28);
    CHECK(doc.at("c") == 4);
    REQUIRE(doc.at("levels").size() == 2);

    const auto& l1 = doc.at("levels").at(0);
    CHECK(l1.at("j") == 1);
    CHECK(l1.at("betti") == 3);
    CHECK(l1.at("shifts") == Json::array({30, 42, 48}));
    REQUIRE(l1.at("entries").size() == 3);
    CHECK(l1.at("entries").at(0) == Json::array({0, 0, "x1^2*x3-x2^3"}));

    const auto& l2 = doc.at("levels").at(1);
    CHECK(l2.at("j") == 2);
    CHECK(l2.at("shifts") == Json::array({62, 58}));
    CHECK(l2.at("entries").size() == 6);

    // The key order is part of the format.
    const std::string text = dump_json(doc);
    CHECK(text.find("\"schema\"") < text.find("\"params\""));
    CHECK(text.find("\"params\"") < text.find("\"generators\""));
    CHECK(text.find("\"generators\"") < text.find("\"levels\""));
}

TEST_CASE("round trip is byte-identical") {
    const std::vector<RepunitParams> cases = {{2, 3, 3}, {2, 2, 5}, {3, 4, 7}};
    for (const auto& params : cases) {
        const auto gc = build_resolution(RepunitSemigroup::construct(params));
        const std::string once = dump_json(resolution_to_json(gc));
        const auto parsed = resolution_from_json(Json::parse(once));
        CHECK(dump_json(resolution_to_json(parsed)) == once);
    }

    // Perturbed documents round-trip verbatim too; parsing does not
    // silently repair them.
    auto gc = build_resolution(make(2, 3, 3));
    inject_fault(gc, FaultKind::shift);
    const std::string once = dump_json(resolution_to_json(gc));
    const auto parsed = resolution_from_json(Json::parse(once));
    CHECK(parsed.levels[0].shifts[0] == 31);
    CHECK(dump_json(resolution_to_json(parsed)) == once);
}

TEST_CASE("malformed documents are rejected") {
    const auto gc = build_resolution(make(2, 3, 3));
    const auto good = resolution_to_json(gc);

    auto doc = good;
    doc["schema"] = "something/9";
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["generators"][0] = 8;
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["c"] = 5;
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc.erase("levels");
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["levels"].erase(1);
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["levels"][0]["j"] = 2;
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["levels"][0]["shifts"].erase(2);
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["levels"][1]["entries"][0][0] = 99;
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["levels"][1]["entries"][0][2] = "x9";
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);

    doc = good;
    doc["params"]["b"] = 1;
    CHECK_THROWS_AS(resolution_from_json(doc), ParamError);
}

TEST_CASE("computer algebra scripts carry the grading and the ideal") {
    const auto m2 = macaulay2_script(make(2, 3, 3));
    CHECK(m2.find("QQ[x_1..x_3, Degrees => {7, 10, 16}]") !=
          std::string::npos);
    CHECK(m2.find("x_1^2*x_3-x_2^3") != std::string::npos);
    CHECK(m2.find("res(R^1/I)") != std::string::npos);
    CHECK(m2.find("betti C") != std::string::npos);

    const auto sg = singular_script(make(2, 3, 3));
    CHECK(sg.find("ring R = 0, (x(1..3)), wp(7, 10, 16);") !=
          std::string::npos);
    CHECK(sg.find("x(1)^2*x(3)-x(2)^3") != std::string::npos);
    CHECK(sg.find("mres(I, 0);") != std::string::npos);
    CHECK(sg.back() == '\n');

    // The principal case emits exactly one ideal generator.
    const auto one = singular_script(make(2, 2, 5));
    CHECK(one.find("x(1)^8-x(2)^3;") != std::string::npos);
}
