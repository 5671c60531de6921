#include "lmlab/report.hpp"

#include "lmlab/error.hpp"
#include "lmlab/text_format.hpp"

namespace lmlab {

using nlohmann::json;

namespace {

std::int64_t int_field(const json& j, const char* key) {
    try {
        return std::stoll(j.at(key).get<std::string>());
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::parse_error, std::string("field '") + key + "': " + ex.what());
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::parse_error, std::string("field '") + key + "' is not an integer");
    }
}

template <class T>
T field(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::parse_error, std::string("field '") + key + "': " + ex.what());
    }
}

}  // namespace

json to_json(const CriterionOutcome& outcome) {
    return json{{"name", outcome.name},
                {"scope", to_string(outcome.scope)},
                {"status", to_string(outcome.status)},
                {"detail", outcome.detail}};
}

json to_json(const ClassificationReport& report) {
    json criteria = json::array();
    for (const auto& c : report.criteria) criteria.push_back(to_json(c));
    return json{{"n", std::to_string(report.n)},
                {"e", std::to_string(report.e)},
                {"s", std::to_string(report.s)},
                {"verdict", to_string(report.verdict)},
                {"lattice_excluded", report.lattice_excluded},
                {"criteria", std::move(criteria)}};
}

json to_json(const VerificationResult& result) {
    json j{{"verdict", to_string(result.verdict)},
           {"volume", to_string(result.volume)},
           {"index", to_string(result.index)},
           {"witness", nullptr}};
    if (result.witness)
        j["witness"] = json::array({format_vector(result.witness->first), format_vector(result.witness->second)});
    return j;
}

CriterionOutcome criterion_from_json(const json& j) {
    return CriterionOutcome{field<std::string>(j, "name"), parse_scope(field<std::string>(j, "scope")),
                            parse_status(field<std::string>(j, "status")), field<std::string>(j, "detail")};
}

ClassificationReport classification_from_json(const json& j) {
    ClassificationReport report;
    report.n = int_field(j, "n");
    report.e = int_field(j, "e");
    report.s = static_cast<int>(int_field(j, "s"));
    report.verdict = parse_existence_verdict(field<std::string>(j, "verdict"));
    report.lattice_excluded = field<bool>(j, "lattice_excluded");
    for (const auto& c : field<json>(j, "criteria")) report.criteria.push_back(criterion_from_json(c));
    return report;
}

VerificationResult verification_from_json(const json& j) {
    VerificationResult result;
    result.verdict = parse_verdict(field<std::string>(j, "verdict"));
    result.volume = Integer(field<std::string>(j, "volume"));
    result.index = Integer(field<std::string>(j, "index"));
    const auto& w = j.at("witness");
    if (!w.is_null()) {
        if (!w.is_array() || w.size() != 2) throw Error(ErrorKind::parse_error, "witness must be a pair");
        result.witness.emplace(parse_vector(w[0].get<std::string>()), parse_vector(w[1].get<std::string>()));
    }
    return result;
}

std::string csv_header() { return "n,e,s,verdict,lattice_excluded,excluded_by"; }

std::string csv_row(const ClassificationReport& report) {
    std::string by;
    for (const auto& c : report.criteria)
        if (c.status == Status::excludes) by += (by.empty() ? "" : ";") + c.name;
    return std::to_string(report.n) + ',' + std::to_string(report.e) + ',' + std::to_string(report.s) + ',' +
           to_string(report.verdict) + ',' + (report.lattice_excluded ? "true" : "false") + ',' + by;
}

}  // namespace lmlab
