#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "arithdyn/divisor.hpp"
#include "arithdyn/exact_log.hpp"
#include "arithdyn/selfmap.hpp"
#include "arithdyn/theorem.hpp"

namespace arithdyn {

using Json = nlohmann::ordered_json;

/// {argument_numerator, argument_denominator, approx_decimal[, root]}
Json to_json(const ExactLog& v);
/// Inverse of to_json(ExactLog). Throws SyntaxError.
ExactLog exact_log_from_json(const Json& j);

Json to_json(const Divisor& d);
Json to_json(const IntersectionReport& r);
Json to_json(const MorphismCertificate& c);

// Reports carry a "kind" field so that validate_report can dispatch.
Json pullback_report(const Divisor& input, unsigned n, const Divisor& result, unsigned delta_f);
Json to_json(const CnReport& r);
Json to_json(const OrbitScan& s, const PlaceSet& places, const Rational& epsilon);
Json to_json(const BetaReport& r);
Json to_json(const RvReport& r, const PlaceSet& places);

/// Re-checks the invariants a report states about itself. Empty when valid.
std::vector<std::string> validate_report(const Json& j);

std::string orbit_csv(const OrbitScan& s);

/// Plain-text renderings for --format table.
std::string table(const CnReport& r);
std::string table(const OrbitScan& s);
std::string table(const BetaReport& r);
std::string table(const RvReport& r);

}  // namespace arithdyn
