#pragma once

#include "deltastar/bounds.hpp"
#include "deltastar/diffsets.hpp"
#include "deltastar/extraction.hpp"
#include "deltastar/tuples.hpp"
#include "deltastar/witness.hpp"

#include <json.hpp>

namespace deltastar {

// JSON payloads. Big integers are rendered as decimal strings.

nlohmann::json to_json(const KTuple& tuple, const AdmissibilityVerdict& verdict);

// {mode, k, steps[] {p, b, removed, remaining, skipped}, survivors[], tuple[]}
nlohmann::json to_json(const ExtractionResult& result);
nlohmann::json to_json(const SieveTrace& trace);

// {C, r_min, threshold_decimal, product_num, product_den, primes[]}; the
// product fields are null and an "enclosure" object is added when the
// product was too large to compute exactly.
nlohmann::json to_json(const BoundReport& report, unsigned decimals = 2);

// {d, N, count, pairs: [[q, q + d], ...], truncated}
nlohmann::json to_json(const WitnessReport& report);

// {n, offsets[], primes[]}
nlohmann::json to_json(const TupleScanHit& hit);

// {input_size, k, tuple[], hit, realized_difference, witness_pair: [q, q2]}
nlohmann::json to_json(const DeltaDemoReport& report);

}  // namespace deltastar
