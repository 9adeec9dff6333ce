#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "highwater/element.hpp"

namespace highwater {

class ParseError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

std::string format_element(const Element& x);

struct ParseResult {
    Element value;
    std::vector<std::string> warnings;  // e.g. p(1,4) silently being zero
};

/// Parses sums of terms such as "a(0) - a(1) + 1/2*s(2) + p(1,3)".
/// Atoms: a(i), s(j), p(r,k), z(r,j), u(i), v(i), w(i), wt(i), c(i); "0" is the zero element.
ParseResult parse_element(const Field& F, const std::string& text);

/// Semicolon-separated list of elements.
std::vector<Element> parse_element_list(const Field& F, const std::string& text, std::vector<std::string>* warnings = nullptr);

nlohmann::json key_to_json(const BasisKey& k);
BasisKey key_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

}  // namespace highwater
