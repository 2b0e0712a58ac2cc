#include "carpetlab/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace carpetlab {

namespace {

using nlohmann::json;

int require_int(const json& node, const char* field, const std::string& where) {
    if (!node.contains(field))
        throw SpecError(where + ": missing field '" + field + "'");
    const json& v = node.at(field);
    if (!v.is_number_integer())
        throw SpecError(where + ": field '" + field + "' must be an integer");
    return v.get<int>();
}

int optional_sign(const json& node, const char* field, const std::string& where) {
    if (!node.contains(field)) return +1;
    const json& v = node.at(field);
    if (!v.is_number_integer())
        throw SpecError(where + ": field '" + field + "' must be an integer");
    return v.get<int>();
}

json parse_document(std::istream& in, const char* what) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string(what) + ": " + e.what());
    }
    return doc;
}

}  // namespace

CarpetSpec load_spec(std::istream& in) {
    const json doc = parse_document(in, "spec document");
    if (!doc.is_object()) throw SpecError("spec document: top level must be an object");
    const int n = require_int(doc, "n", "spec document");
    const int m = require_int(doc, "m", "spec document");
    if (!doc.contains("digits") || !doc.at("digits").is_array())
        throw SpecError("spec document: field 'digits' must be an array");

    std::vector<Digit> digits;
    std::size_t index = 0;
    for (const json& entry : doc.at("digits")) {
        const std::string where = "digit " + std::to_string(index);
        if (!entry.is_object()) throw SpecError(where + ": must be an object");
        Digit d;
        d.column = require_int(entry, "i", where);
        d.row = require_int(entry, "j", where);
        d.sx = optional_sign(entry, "sx", where);
        d.sy = optional_sign(entry, "sy", where);
        digits.push_back(d);
        ++index;
    }
    return validate_spec(n, m, std::move(digits));
}

CarpetSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file " + path);
    try {
        return load_spec(in);
    } catch (const SpecError& e) {
        throw SpecError(path + ": " + e.what());
    }
}

std::string spec_to_json(const CarpetSpec& spec) {
    json doc;
    doc["n"] = spec.n;
    doc["m"] = spec.m;
    doc["digits"] = json::array();
    for (const Digit& d : spec.digits)
        doc["digits"].push_back({{"i", d.column}, {"j", d.row}, {"sx", d.sx}, {"sy", d.sy}});
    return doc.dump(2) + "\n";
}

std::vector<double> load_weight_vector(std::istream& in) {
    json doc = parse_document(in, "weights document");
    if (doc.is_object() && doc.contains("p")) doc = doc.at("p");
    if (!doc.is_array())
        throw SpecError("weights document: expected an array or an object with 'p'");
    std::vector<double> p;
    for (const json& v : doc) {
        if (!v.is_number())
            throw SpecError("weights document: entry " + std::to_string(p.size()) +
                            " is not a number");
        p.push_back(v.get<double>());
    }
    return p;
}

std::vector<double> load_weight_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open weights file " + path);
    try {
        return load_weight_vector(in);
    } catch (const SpecError& e) {
        throw SpecError(path + ": " + e.what());
    }
}

}  // namespace carpetlab
