#pragma once

#include <json.hpp>

#include <string>

#include "g2dual/hyperelliptic.hpp"
#include "g2dual/nagell_lutz.hpp"

namespace g2::io {

using json = nlohmann::ordered_json;

// Scalars serialize as decimal-string tuples, polynomials as dense coefficient
// tables (ascending degree) plus a canonical "text" rendering regenerated on
// every serialization, so parse + serialize is byte-stable.
json to_json(const Rational& r);
json to_json(const QuadScalar& c);
json to_json(const TPoly& p);
json to_json(const RatFunc& r);
json to_json(const XPoly& p);
json to_json(const TriPoly& p);
json to_json(const MumfordDivisor& d);

Rational rational_from_json(const json& j);
QuadScalar quad_from_json(const json& j, long disc);
TPoly tpoly_from_json(const json& j, long disc);
RatFunc ratfunc_from_json(const json& j, long disc);
XPoly xpoly_from_json(const json& j, long disc);
TriPoly tripoly_from_json(const json& j, long disc);
MumfordDivisor mumford_from_json(const json& j, long disc);

// {"schema_version":"1","kind":...,"disc":...,"payload":...}
json make_certificate(const std::string& kind, long disc, json payload);

std::string dump_certificate(const json& cert);

// Parses a certificate into typed values and reserializes it; the result is
// byte-identical to dump_certificate of the original for well-formed input.
std::string reserialize_certificate(const std::string& text);

} // namespace g2::io
