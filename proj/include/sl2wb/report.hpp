#pragma once

#include "sl2wb/normlab.hpp"
#include "sl2wb/quadfields.hpp"
#include "sl2wb/sandwich.hpp"

#include <json.hpp>

#include <string>

namespace sl2wb {

using Json = nlohmann::ordered_json;

Json ring_json(const FiniteRing& ring);
Json matrix_json(const FiniteRing& ring, const Mat2& m);
Json ideal_json(const Ideal& ideal);
Json group_json(const GroupTable& group, const ClassPartition& classes, const AbelianInvariants& ab);
Json abelianization_json(const GroupTable& group, const AbelianInvariants& ab);
Json norm_json(const GroupTable& group, const NormProfile& profile, const NormalGenerationVerdict& verdict);
Json pi_json(const FiniteRing& ring, std::span<const Mat2> elements);
Json delta_json(const GroupTable& group, const DeltaReport& report);
Json sandwich_json(const GroupTable& group, const SandwichReport& report);
Json generators_json(const FiniteRing& ring, const GeneratorConstruction& construction);
Json splitting_json(const SplittingReport& report);
Json verdict_json(const DeltaVerdict& verdict);
Json scan_json(const ScanTable& table);
std::string scan_tsv(const ScanTable& table);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

} // namespace sl2wb
