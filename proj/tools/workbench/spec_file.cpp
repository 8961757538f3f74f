#include "spec_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace envbounds::workbench {

using nlohmann::json;

namespace {

double number_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw SpecParseError(where + "." + key + ": missing");
    const auto& v = obj[key];
    if (!v.is_number()) throw SpecParseError(where + "." + key + ": expected a number");
    return v.get<double>();
}

bool bool_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) return false;
    const auto& v = obj[key];
    if (!v.is_boolean()) throw SpecParseError(where + "." + key + ": expected true or false");
    return v.get<bool>();
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    for (const auto& [k, v] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || k == a;
        if (!ok) throw SpecParseError(where + ": unknown field '" + k + "'");
    }
}

}  // namespace

PotentialSpec parse_potential_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError(std::string("spec: ") + e.what());
    }
    if (!doc.is_object()) throw SpecParseError("spec: top level must be an object");
    reject_unknown(doc, {"d", "terms", "extensions"}, "spec");

    if (!doc.contains("d")) throw SpecParseError("spec.d: missing");
    if (!doc["d"].is_number_integer()) throw SpecParseError("spec.d: expected an integer");
    const int d = doc["d"].get<int>();

    if (!doc.contains("terms")) throw SpecParseError("spec.terms: missing");
    if (!doc["terms"].is_array()) throw SpecParseError("spec.terms: expected an array");
    std::vector<PowerTerm> terms;
    for (std::size_t i = 0; i < doc["terms"].size(); ++i) {
        const auto& t = doc["terms"][i];
        const std::string where = "spec.terms[" + std::to_string(i) + "]";
        if (!t.is_object()) throw SpecParseError(where + ": expected an object {a, q}");
        reject_unknown(t, {"a", "q"}, where);
        terms.push_back({number_field(t, "a", where), number_field(t, "q", where)});
    }

    Extensions ext;
    if (doc.contains("extensions")) {
        const auto& e = doc["extensions"];
        if (!e.is_object()) throw SpecParseError("spec.extensions: expected an object");
        reject_unknown(e, {"allow_coulomb", "allow_fractional"}, "spec.extensions");
        ext.allow_coulomb = bool_field(e, "allow_coulomb", "spec.extensions");
        ext.allow_fractional = bool_field(e, "allow_fractional", "spec.extensions");
    }

    try {
        return PotentialSpec(d, std::move(terms), ext);
    } catch (const DomainError& e) {
        throw SpecParseError(std::string("spec: ") + e.what());
    }
}

PotentialSpec load_potential_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("spec: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_potential_spec(buf.str());
}

}  // namespace envbounds::workbench
