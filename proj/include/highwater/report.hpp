#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace highwater {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Named pass/fail outcomes of a verification routine.
struct Report {
    std::string title;
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {});
    void merge(const Report& other);
    bool passed() const;
    std::size_t failures() const;
    /// Failing checks are listed; passing ones are summarized unless verbose.
    std::string to_text(bool verbose = false) const;
    nlohmann::json to_json() const;
};

}  // namespace highwater
