#include "highwater/report.hpp"

#include <sstream>

namespace highwater {

void Report::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.passed) ++n;
    return n;
}

std::string Report::to_text(bool verbose) const {
    std::ostringstream os;
    os << title << ": " << (checks.size() - failures()) << "/" << checks.size() << " checks passed\n";
    for (const auto& c : checks) {
        if (c.passed && !verbose) continue;
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["passed"] = passed();
    j["total"] = checks.size();
    j["failures"] = failures();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = arr;
    return j;
}

}  // namespace highwater
