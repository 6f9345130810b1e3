#pragma once

#include <string>

#include <json.hpp>

#include "zzpa/algebraic.hpp"
#include "zzpa/galois.hpp"
#include "zzpa/poly.hpp"
#include "zzpa/salem.hpp"
#include "zzpa/zigzag.hpp"

namespace zzpa {

// All reports use insertion-ordered JSON so repeated runs serialize
// byte-identically. Every decimal field sits next to its exact counterpart
// (coefficient vectors over Q, rational endpoints, or integer data).
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr int kDecimalPlaces = 12;

std::string rat_string(const Rat& r);

Json to_json(const Int& n);  // number when it fits in 64 bits, else string
Json to_json(const IntPoly& p);
Json to_json(const FieldElement& x);
Json to_json(const AlgebraicReal& x);
Json to_json(const PostcriticalData& orbit);
Json to_json(const Rect& r);
Json to_json(const PeriodicLift& l);
Json to_json(const LimitSet& L);
Json to_json(const NotRectangular& nr);
Json to_json(const SingularityReport& s);
Json to_json(const PAVerdict& v);
Json to_json(const SalemReport& s);

// {"schema_version": ..., "command": ..., "input": ...}
Json envelope(const std::string& command, Json input);

}  // namespace zzpa
