#include "brieskorn/report_json.hpp"

#include "brieskorn/errors.hpp"

#include <fstream>
#include <json.hpp>

namespace brieskorn {
namespace {

using json = nlohmann::ordered_json;

std::string cache_key(const BrieskornIndex& index, bool reversed) { return (reversed ? "-" : "") + index.key(); }

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

Integer integer_from(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw DomainError("expected an integer, got " + j.dump());
}

json to_object(const InvariantReport& r) {
    json j;
    j["manifold"] = r.manifold();
    j["exponents"] = std::vector<std::int64_t>(r.index.exponents().begin(), r.index.exponents().end());
    j["orientation"] = r.reversed ? "reversed" : "canonical";
    j["seifert"] = r.seifert.to_string();
    j["euler"] = r.euler.to_string();
    j["h1"] = integer_json(r.h1);
    j["negative_definite"] = r.negative_definite;
    j["fillable_count"] = r.fillable_count ? integer_json(*r.fillable_count) : json(nullptr);
    j["fillable_source"] = to_string(r.fillable_source);
    j["d3"] = r.d3 ? json(r.d3->to_string()) : json(nullptr);
    j["d3_source"] = to_string(r.d3_source);
    j["d"] = r.d ? json(r.d->to_string()) : json(nullptr);
    j["d_certification"] = to_string(r.d_certification);
    j["notes"] = r.notes;
    return j;
}

InvariantReport from_object(const json& j) {
    try {
        InvariantReport r{BrieskornIndex(j.at("exponents").get<std::vector<std::int64_t>>()),
                          j.at("orientation").get<std::string>() == "reversed",
                          SeifertData::parse(j.at("seifert").get<std::string>()),
                          Rational::parse(j.at("euler").get<std::string>()),
                          integer_from(j.at("h1")),
                          j.at("negative_definite").get<bool>()};
        if (!j.at("fillable_count").is_null()) r.fillable_count = integer_from(j.at("fillable_count"));
        r.fillable_source = parse_source(j.at("fillable_source").get<std::string>());
        if (!j.at("d3").is_null()) r.d3 = Rational::parse(j.at("d3").get<std::string>());
        r.d3_source = parse_source(j.at("d3_source").get<std::string>());
        if (!j.at("d").is_null()) r.d = Rational::parse(j.at("d").get<std::string>());
        r.d_certification = parse_certification(j.at("d_certification").get<std::string>());
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed report: ") + e.what());
    }
}

} // namespace

std::string to_json(const InvariantReport& report, int indent) { return to_object(report).dump(indent); }

InvariantReport report_from_json(std::string_view text) {
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("report is not valid JSON");
    return from_object(j);
}

ReportCache::ReportCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("key") || !j.contains("report"))
            throw DomainError(path_.string() + ":" + std::to_string(lineno) + ": malformed cache entry");
        reports_.insert_or_assign(j["key"].get<std::string>(), from_object(j["report"]));
    }
}

std::optional<InvariantReport> ReportCache::find(const BrieskornIndex& index, bool reversed) const {
    const auto it = reports_.find(cache_key(index, reversed));
    if (it == reports_.end()) return std::nullopt;
    return it->second;
}

void ReportCache::store(const InvariantReport& report) {
    const std::string key = cache_key(report.index, report.reversed);
    reports_.insert_or_assign(key, report);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw DomainError("cannot write cache file " + path_.string());
    out << json{{"key", key}, {"report", to_object(report)}}.dump() << '\n';
}

} // namespace brieskorn
