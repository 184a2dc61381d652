#include "repunit/export.hpp"

#include <limits>
#include <sstream>

namespace repunit {

namespace {

constexpr const char* kResolutionSchema = "repunit-resolution/1";
constexpr const char* kInfoSchema = "repunit-info/1";

std::int64_t json_int(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max()) {
        std::ostringstream os;
        os << v << " does not fit the 64-bit JSON integer range";
        throw ParamError(os.str());
    }
    return v.convert_to<std::int64_t>();
}

Json int_array(const std::vector<Int>& values) {
    Json arr = Json::array();
    for (const Int& v : values) arr.push_back(json_int(v));
    return arr;
}

Json params_json(const RepunitSemigroup& s) {
    Json p;
    p["b"] = s.params().b;
    p["n"] = s.params().n;
    p["a"] = s.params().a;
    return p;
}

RepunitSemigroup semigroup_from_params(const Json& doc) {
    if (!doc.contains("params")) throw ParamError("missing params object");
    const Json& p = doc.at("params");
    RepunitParams params{p.at("b").get<std::int64_t>(),
                         p.at("n").get<int>(),
                         p.at("a").get<std::int64_t>()};
    return RepunitSemigroup::construct(params);
}

void expect_field(const Json& doc, const char* key, const Json& want) {
    if (!doc.contains(key) || doc.at(key) != want) {
        throw ParamError(std::string("field '") + key +
                         "' disagrees with the declared parameters");
    }
}

}  // namespace

Json resolution_to_json(const GradedComplex& gc) {
    const RepunitSemigroup& s = gc.semigroup;
    Json doc;
    doc["schema"] = kResolutionSchema;
    doc["params"] = params_json(s);
    doc["generators"] = int_array(s.generators());
    doc["extended"] = json_int(s.extended());
    doc["c"] = json_int(s.c());
    Json levels = Json::array();
    for (const ResolutionLevel& level : gc.levels) {
        Json lv;
        lv["j"] = level.j;
        lv["betti"] = static_cast<std::int64_t>(level.shifts.size());
        lv["shifts"] = int_array(level.shifts);
        Json entries = Json::array();
        for (const auto& [pos, poly] : level.delta.entries()) {
            entries.push_back(Json::array(
                {pos.first, pos.second, to_string(poly)}));
        }
        lv["entries"] = std::move(entries);
        levels.push_back(std::move(lv));
    }
    doc["levels"] = std::move(levels);
    return doc;
}

GradedComplex resolution_from_json(const Json& doc) {
    if (!doc.contains("schema") || doc.at("schema") != kResolutionSchema) {
        throw ParamError("unrecognized resolution document schema");
    }
    RepunitSemigroup s = semigroup_from_params(doc);
    expect_field(doc, "generators", int_array(s.generators()));
    expect_field(doc, "extended", Json(json_int(s.extended())));
    expect_field(doc, "c", Json(json_int(s.c())));

    GradedComplex gc{s, {}};
    if (!doc.contains("levels") || !doc.at("levels").is_array()) {
        throw ParamError("missing levels array");
    }
    const int n = s.nvars();
    int j = 0;
    for (const Json& lv : doc.at("levels")) {
        ++j;
        if (!lv.contains("j") || lv.at("j").get<int>() != j) {
            throw ParamError("levels must appear as j = 1, 2, ... in order");
        }
        ResolutionLevel level;
        level.j = j;
        level.basis = en_basis(s, j);
        for (const Json& d : lv.at("shifts")) {
            level.shifts.push_back(Int(d.get<std::int64_t>()));
        }
        if (level.shifts.size() != level.basis.size() ||
            lv.at("betti").get<std::int64_t>() !=
                static_cast<std::int64_t>(level.basis.size())) {
            throw ParamError("level size disagrees with the rank formula");
        }
        const std::size_t rows =
            j == 1 ? 1 : gc.levels.back().shifts.size();
        level.delta = PolyMatrix(rows, level.basis.size(), n);
        for (const Json& e : lv.at("entries")) {
            if (!e.is_array() || e.size() != 3) {
                throw ParamError("entries must be [row, col, polynomial]");
            }
            const auto row = e.at(0).get<std::size_t>();
            const auto col = e.at(1).get<std::size_t>();
            if (row >= rows || col >= level.basis.size()) {
                throw ParamError("entry position out of range");
            }
            level.delta.set(row, col,
                            parse_polynomial(e.at(2).get<std::string>(), n));
        }
        gc.levels.push_back(std::move(level));
    }
    if (j != n - 1) {
        throw ParamError("document has the wrong number of levels");
    }
    return gc;
}

Json info_to_json(const RepunitSemigroup& s) {
    Json doc;
    doc["schema"] = kInfoSchema;
    doc["params"] = params_json(s);
    doc["generators"] = int_array(s.generators());
    doc["extended"] = json_int(s.extended());
    doc["c"] = json_int(s.c());
    Json betti = Json::array();
    for (int j = 1; j <= s.nvars() - 1; ++j) {
        betti.push_back(json_int(betti_number(s.nvars(), j)));
    }
    doc["betti"] = std::move(betti);
    doc["pseudo_frobenius"] = int_array(s.pf_formula());
    doc["frobenius"] = json_int(s.frobenius());
    return doc;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string macaulay2_script(const RepunitSemigroup& s) {
    const int n = s.nvars();
    std::ostringstream os;
    os << "-- Toric ideal of the numerical semigroup <";
    for (int i = 0; i < n; ++i) {
        os << (i ? ", " : "") << s.generators()[static_cast<std::size_t>(i)];
    }
    os << ">\n";
    os << "-- (b = " << s.params().b << ", n = " << n << ", a = "
       << s.params().a << "); the kernel of x_i |-> t^(a_i).\n";
    os << "R = QQ[x_1..x_" << n << ", Degrees => {";
    for (int i = 0; i < n; ++i) {
        os << (i ? ", " : "") << s.generators()[static_cast<std::size_t>(i)];
    }
    os << "}];\n";
    os << "I = ideal(\n";
    const auto gens = toric_minors(s);
    auto name = [](int i) { return "x_" + std::to_string(i + 1); };
    for (std::size_t k = 0; k < gens.size(); ++k) {
        os << "  " << to_string(gens[k], name)
           << (k + 1 < gens.size() ? "," : "") << "\n";
    }
    os << ");\n";
    os << "C = res(R^1/I)\n";
    os << "betti C\n";
    os << "C.dd\n";
    return os.str();
}

std::string singular_script(const RepunitSemigroup& s) {
    const int n = s.nvars();
    std::ostringstream os;
    os << "// Toric ideal of the numerical semigroup <";
    for (int i = 0; i < n; ++i) {
        os << (i ? ", " : "") << s.generators()[static_cast<std::size_t>(i)];
    }
    os << ">\n";
    os << "// (b = " << s.params().b << ", n = " << n << ", a = "
       << s.params().a << "); the kernel of x(i) |-> t^(a_i).\n";
    os << "ring R = 0, (x(1.." << n << ")), wp(";
    for (int i = 0; i < n; ++i) {
        os << (i ? ", " : "") << s.generators()[static_cast<std::size_t>(i)];
    }
    os << ");\n";
    os << "ideal I =\n";
    const auto gens = toric_minors(s);
    auto name = [](int i) { return "x(" + std::to_string(i + 1) + ")"; };
    for (std::size_t k = 0; k < gens.size(); ++k) {
        os << "  " << to_string(gens[k], name)
           << (k + 1 < gens.size() ? "," : ";") << "\n";
    }
    os << "resolution C = mres(I, 0);\n";
    os << "print(betti(C), \"betti\");\n";
    os << "exit;\n";
    return os.str();
}

}  // namespace repunit
