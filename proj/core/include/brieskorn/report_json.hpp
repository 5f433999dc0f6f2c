#pragma once

#include "brieskorn/classifier.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace brieskorn {

// indent < 0 renders a single line.
std::string to_json(const InvariantReport& report, int indent = 2);
InvariantReport report_from_json(std::string_view text);

// JSON-lines store of reports keyed by normalized exponents ("2,3,5", "-2,3,5" when reversed).
class ReportCache {
public:
    explicit ReportCache(std::filesystem::path path);

    std::optional<InvariantReport> find(const BrieskornIndex& index, bool reversed = false) const;
    void store(const InvariantReport& report);
    std::size_t size() const { return reports_.size(); }

private:
    std::filesystem::path path_;
    std::map<std::string, InvariantReport> reports_;
};

} // namespace brieskorn
