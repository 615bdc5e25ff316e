#include "matchbound/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace matchbound {

namespace {

// JSON has no infinities; infinite slack / log of a zero count become null.
nlohmann::json finite_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

}  // namespace

nlohmann::json to_json(const VerificationRecord& record) {
    nlohmann::json j;
    j["id"] = record.graph_id;
    j["n"] = record.n;
    j["count"] = record.count.str();
    j["count_log"] = finite_or_null(record.count_log);
    j["bound_zero"] = record.bound_log.is_zero;
    j["bound_log"] = record.bound_log.is_zero ? nlohmann::json(nullptr)
                                              : nlohmann::json(record.bound_log.log);
    j["slack"] = finite_or_null(record.slack);
    j["tight"] = record.tight;
    j["violated"] = record.violated;
    j["degrees"] = record.degrees;
    return j;
}

nlohmann::json to_json(const LemmaRow& row) {
    nlohmann::json j;
    j["r"] = row.r;
    j["margin"] = row.margin;
    j["concavity_gap"] = row.concavity_gap;
    j["deficit"] = row.deficit;
    j["envelope"] = row.envelope;
    j["theta"] = row.theta;
    return j;
}

nlohmann::json to_json(const SweepChecks& checks) {
    nlohmann::json j;
    j["margin_negative"] = checks.margin_negative;
    j["margin_decreasing_checked"] = checks.margin_decreasing_checked;
    j["margin_decreasing_full_range"] = checks.margin_decreasing_full_range;
    j["margin_limit_near_minus_one"] = checks.margin_limit_near_minus_one;
    j["concavity_gap_positive"] = checks.concavity_gap_positive;
    j["factorial_root_increasing"] = checks.factorial_root_increasing;
    j["deficit_below_envelope"] = checks.deficit_below_envelope;
    j["envelope_decreasing"] = checks.envelope_decreasing;
    j["envelope_below_threshold"] = checks.envelope_below_threshold;
    j["theta_in_unit_interval"] = checks.theta_in_unit_interval;
    j["hard_pass"] = checks.hard_pass();
    return j;
}

nlohmann::json to_json(const CampaignSpec& spec) {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["a"] = spec.a;
    j["b"] = spec.b;
    j["blocks"] = spec.block_sizes;
    j["p"] = spec.p;
    j["seed"] = spec.seed;
    j["samples"] = spec.samples;
    return j;
}

CampaignSpec campaign_from_json(const nlohmann::json& j) {
    CampaignSpec spec;
    const auto family = family_from_name(j.at("family").get<std::string>());
    if (!family) {
        throw std::invalid_argument("campaign_from_json: unknown family '" +
                                    j.at("family").get<std::string>() + "'");
    }
    spec.family = *family;
    spec.n = j.value("n", 0);
    spec.a = j.value("a", 0);
    spec.b = j.value("b", 0);
    spec.block_sizes = j.value("blocks", std::vector<int>{});
    spec.p = j.value("p", 0.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.samples = j.value("samples", 1);
    return spec;
}

}  // namespace matchbound
