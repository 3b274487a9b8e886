#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "moebius/padic_dynamics.hpp"
#include "moebius/real_dynamics.hpp"

namespace moebius::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "moebius-dyn/1";

Json rational(const Rational& x);
/// {"exact": ..., "decimal": ...}; complex values carry decimal_re / decimal_im.
Json value(const QuadExt& x);
/// {"p": p, "exponent": "-v", "decimal": p^(-v)}; norm 0 has exponent "-inf".
Json norm(const PVal& v);
/// Inverse of norm().
PVal norm_from_json(const Json& j);

Json real_classification(const RealClassification& rc, const FixedPointSet& fix);
Json fixed_point_character(const FixedPointCharacter& ch);
Json siegel(const SiegelReport& rep);
Json condition(const ConditionFails& fail);
Json basin(const BasinReport& rep);
Json phi_limit(const PhiLimit& lim);
Json radius_trajectory(const RadiusTrajectory& tr);

/// p-adic block: splitting, characters, Siegel and basin checks, verdict.
Json padic_block(const PadicContext& ctx, std::size_t qmax);

/// Full classification report for the CLI and the Python module.
Json classify(const MoebiusMap& f, std::optional<std::int64_t> p, std::size_t qmax);

/// K_q table.
Json periods(const MoebiusMap& f, std::size_t qmax);

}  // namespace moebius::report
