#pragma once

#include <string>

#include "modcat/modular.hpp"

// single-header nlohmann/json from vendor/
#include "json.hpp"

namespace modcat {

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// {"kind":"table","names":[...],"table":[[...]]} or
/// {"kind":"perms","degree":k,"generators":[[...]]}
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& X);
FiniteGroup load_group_file(const std::string& path);

/// Comma-separated element names -> indices ("e,a3,b,ba3").
std::vector<int> parse_element_list(const FiniteGroup& X, const std::string& csv);

/// Smallest element index per left coset sG.
std::vector<int> default_transversal(const FiniteGroup& X, const Subgroup& G);

/// {"n":6,"coeffs":[["num","den"],...],"approx":[re,im]}
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json class_function_to_json(const FiniteGroup& X, const ClassFunction& chi);

Json matrix_to_json(const CycMatrix& m, const std::vector<std::string>& labels);
std::string matrix_to_csv(const CycMatrix& m, const std::vector<std::string>& labels);

Json factorization_to_json(const CosetFactorization& f);

Json chartable_to_json(const CharacterTable& t);
std::string chartable_to_csv(const CharacterTable& t);

Json simples_to_json(const CategoryD& cat);

/// Ordering file: [{"label":"1_1","class":"e","char":{"e":"1",...}}, ...].
/// Returns the permutation of simple indices plus the labels.
struct Ordering {
    std::vector<int> permutation;
    std::vector<std::string> labels;
};
Ordering ordering_from_json(const CategoryD& cat, const Json& j);

Json report_to_json(const ModularData& md, const ModularityReport& vr);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace modcat
