#include "deltastar/serialize.hpp"

namespace deltastar {

using nlohmann::json;

namespace {

json array_of(const auto& range) {
    json out = json::array();
    for (const auto& v : range) out.push_back(v);
    return out;
}

}  // namespace

json to_json(const KTuple& tuple, const AdmissibilityVerdict& verdict) {
    return json{
        {"tuple", array_of(tuple)},
        {"k", tuple.size()},
        {"admissible", verdict.admissible},
        {"obstruction", verdict.obstruction ? json(*verdict.obstruction) : json(nullptr)},
    };
}

json to_json(const SieveTrace& trace) {
    json steps = json::array();
    for (const RemovalStep& step : trace) {
        steps.push_back({
            {"p", step.p},
            {"b", step.residue},
            {"removed", step.removed},
            {"remaining", step.remaining},
            {"skipped", step.skipped},
        });
    }
    return steps;
}

json to_json(const ExtractionResult& result) {
    return json{
        {"mode", std::string(to_string(result.mode))},
        {"k", result.k},
        {"steps", to_json(result.trace)},
        {"survivors", array_of(result.survivors)},
        {"tuple", array_of(result.tuple)},
    };
}

json to_json(const BoundReport& report, unsigned decimals) {
    json out{
        {"C", report.c},
        {"r_min", report.r_min.get_str()},
        {"threshold_decimal", threshold_decimal(report, decimals)},
        {"product_num", nullptr},
        {"product_den", nullptr},
        {"exact", report.exact()},
        {"primes", array_of(report.primes)},
    };
    if (report.product) {
        out["product_num"] = report.product->get_num().get_str();
        out["product_den"] = report.product->get_den().get_str();
    } else {
        // 30 places is plenty to show the enclosure width at the default precision.
        out["enclosure"] = {
            {"lower", to_decimal(report.threshold_lower, 30)},
            {"upper", to_decimal(report.threshold_upper, 30)},
        };
    }
    return out;
}

json to_json(const WitnessReport& report) {
    json pairs = json::array();
    for (const auto& [q, q2] : report.pairs) pairs.push_back({q, q2});
    return json{
        {"d", report.d},
        {"N", report.scan_bound},
        {"count", report.count},
        {"pairs", std::move(pairs)},
        {"truncated", report.truncated()},
    };
}

json to_json(const TupleScanHit& hit) {
    return json{{"n", hit.n}, {"offsets", array_of(hit.offsets)}, {"primes", array_of(hit.primes)}};
}

json to_json(const DeltaDemoReport& report) {
    return json{
        {"input_size", report.input_size},
        {"k", report.k},
        {"tuple", array_of(report.tuple)},
        {"hit", to_json(report.hit)},
        {"realized_difference", report.realized_difference},
        {"witness_pair", {report.witness_pair.first, report.witness_pair.second}},
    };
}

}  // namespace deltastar
