#include "g2dual/io/json_cert.hpp"

#include "g2dual/io/print.hpp"

namespace g2::io {

namespace {

mpz_class mpz_from(const json& j) {
    if (!j.is_string()) fail(Errc::InvalidInput, "integer field must be a decimal string");
    try {
        return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        fail(Errc::InvalidInput, "malformed integer '" + j.get<std::string>() + "'");
    }
}

} // namespace

json to_json(const Rational& r) {
    return json::array({r.num().get_str(), r.den().get_str()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) fail(Errc::InvalidInput, "rational must be a 2-tuple");
    return Rational(mpz_from(j[0]), mpz_from(j[1]));
}

json to_json(const QuadScalar& c) {
    return json::array({c.rational_part().num().get_str(), c.rational_part().den().get_str(),
                        c.radical_part().num().get_str(), c.radical_part().den().get_str()});
}

QuadScalar quad_from_json(const json& j, long disc) {
    if (!j.is_array() || j.size() != 4) fail(Errc::InvalidInput, "scalar must be a 4-tuple");
    Rational a(mpz_from(j[0]), mpz_from(j[1]));
    Rational b(mpz_from(j[2]), mpz_from(j[3]));
    return QuadScalar(std::move(a), std::move(b), disc);
}

json to_json(const TPoly& p) {
    json dense = json::array();
    for (const auto& c : p.coeffs()) dense.push_back(to_json(c));
    return json{{"dense", std::move(dense)}, {"text", to_string(p)}};
}

TPoly tpoly_from_json(const json& j, long disc) {
    if (!j.is_object() || !j.contains("dense"))
        fail(Errc::InvalidInput, "t-polynomial must carry a dense table");
    std::vector<QuadScalar> cs;
    for (const auto& e : j.at("dense")) cs.push_back(quad_from_json(e, disc));
    return TPoly(std::move(cs));
}

json to_json(const RatFunc& r) {
    json num = json::array();
    for (const auto& c : r.num().coeffs()) num.push_back(to_json(c));
    json den = json::array();
    for (const auto& c : r.den().coeffs()) den.push_back(to_json(c));
    return json{{"num", std::move(num)}, {"den", std::move(den)}, {"text", to_string(r)}};
}

RatFunc ratfunc_from_json(const json& j, long disc) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        fail(Errc::InvalidInput, "rational function must carry num and den");
    std::vector<QuadScalar> num, den;
    for (const auto& e : j.at("num")) num.push_back(quad_from_json(e, disc));
    for (const auto& e : j.at("den")) den.push_back(quad_from_json(e, disc));
    return RatFunc(TPoly(std::move(num)), TPoly(std::move(den)));
}

json to_json(const XPoly& p) {
    json dense = json::array();
    for (const auto& c : p.coeffs()) dense.push_back(to_json(c));
    return json{{"dense", std::move(dense)}, {"text", to_string(p)}};
}

XPoly xpoly_from_json(const json& j, long disc) {
    if (!j.is_object() || !j.contains("dense"))
        fail(Errc::InvalidInput, "x-polynomial must carry a dense table");
    std::vector<RatFunc> cs;
    for (const auto& e : j.at("dense")) cs.push_back(ratfunc_from_json(e, disc));
    return XPoly(std::move(cs));
}

json to_json(const TriPoly& p) {
    if (!p.is_homogeneous()) fail(Errc::InvalidInput, "trivariate table requires homogeneity");
    int n = p.total_degree().value_or(0);
    json rows = json::array();
    for (int i = 0; i <= n; ++i) {
        json row = json::array();
        for (int j = 0; j <= n - i; ++j) row.push_back(to_json(p.coeff(i, j, n - i - j)));
        rows.push_back(std::move(row));
    }
    return json{{"degree", n}, {"rows", std::move(rows)}, {"text", to_string(p)}};
}

TriPoly tripoly_from_json(const json& j, long disc) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("rows"))
        fail(Errc::InvalidInput, "trivariate polynomial must carry degree and rows");
    int n = j.at("degree").get<int>();
    TriPoly p;
    const json& rows = j.at("rows");
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const json& row = rows[static_cast<size_t>(i)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            QuadScalar c = quad_from_json(row[static_cast<size_t>(k)], disc);
            if (!c.is_zero()) p += TriPoly::monomial(std::move(c), i, k, n - i - k);
        }
    }
    return p;
}

json to_json(const MumfordDivisor& d) {
    return json{{"u", to_json(d.u)}, {"v", to_json(d.v)}};
}

MumfordDivisor mumford_from_json(const json& j, long disc) {
    if (!j.is_object() || !j.contains("u") || !j.contains("v"))
        fail(Errc::InvalidInput, "divisor must carry u and v");
    return MumfordDivisor{xpoly_from_json(j.at("u"), disc), xpoly_from_json(j.at("v"), disc)};
}

json make_certificate(const std::string& kind, long disc, json payload) {
    return json{{"schema_version", "1"},
                {"kind", kind},
                {"disc", disc},
                {"payload", std::move(payload)}};
}

std::string dump_certificate(const json& cert) { return cert.dump(2) + "\n"; }

namespace {

json reserialize_params(const json& p) {
    return json{{"a", to_json(rational_from_json(p.at("a")))},
                {"b", to_json(rational_from_json(p.at("b")))}};
}

json reserialize_payload(const std::string& kind, const json& p, long disc) {
    json out;
    auto xp = [&](const char* key) { return to_json(xpoly_from_json(p.at(key), disc)); };
    auto tp = [&](const char* key) { return to_json(tpoly_from_json(p.at(key), disc)); };
    if (kind == "dual_curve") {
        out["params"] = reserialize_params(p.at("params"));
        out["de"] = xp("de");
        out["g"] = xp("g");
        out["h"] = xp("h");
        out["f"] = xp("f");
        return out;
    }
    if (kind == "quasi_torus") {
        out["params"] = reserialize_params(p.at("params"));
        out["de"] = xp("de");
        out["g"] = xp("g");
        out["h"] = xp("h");
        out["f"] = xp("f");
        out["G"] = to_json(tripoly_from_json(p.at("G"), disc));
        out["H"] = to_json(tripoly_from_json(p.at("H"), disc));
        out["pqr"] = p.at("pqr");
        out["f3"] = p.at("f3");
        out["identity_verified"] = p.at("identity_verified");
        out["pairwise_coprime"] = p.at("pairwise_coprime");
        return out;
    }
    if (kind == "torsion_seed") {
        out["params"] = reserialize_params(p.at("params"));
        out["f"] = xp("f");
        out["u0"] = xp("u0");
        out["v0"] = xp("v0");
        out["certification"] = p.at("certification");
        if (p.contains("order_three")) out["order_three"] = p.at("order_three");
        if (p.contains("reduced"))
            out["reduced"] = to_json(mumford_from_json(p.at("reduced"), disc));
        return out;
    }
    if (kind == "reduced_divisor") {
        out["f"] = xp("f");
        out["input"] = to_json(mumford_from_json(p.at("input"), disc));
        out["reduced"] = to_json(mumford_from_json(p.at("reduced"), disc));
        return out;
    }
    if (kind == "nagell_lutz") {
        out["params"] = reserialize_params(p.at("params"));
        out["reduced"] = to_json(mumford_from_json(p.at("reduced"), disc));
        out["order_three"] = p.at("order_three");
        out["meeting_fibers"] = tp("meeting_fibers");
        out["v_only_poles"] = tp("v_only_poles");
        out["admissible_center"] = p.at("admissible_center");
        out["witness"] = p.at("witness").is_null() ? json(nullptr) : tp("witness");
        out["counterexample"] = p.at("counterexample");
        return out;
    }
    if (kind == "cusps") {
        out["params"] = reserialize_params(p.at("params"));
        out["projection"] = tp("projection");
        json mult = json::array();
        for (const auto& m : p.at("multiplicity"))
            mult.push_back(json{{"factor", to_json(tpoly_from_json(m.at("factor"), disc))},
                                {"power", m.at("power")}});
        out["multiplicity"] = std::move(mult);
        out["infinity_cusp"] = p.at("infinity_cusp");
        out["infinity_count"] = p.at("infinity_count");
        json fibers = json::array();
        for (const auto& fc : p.at("fibers"))
            fibers.push_back(json{{"factor", to_json(tpoly_from_json(fc.at("factor"), disc))},
                                  {"count", fc.at("count")},
                                  {"gcd_degree", fc.at("gcd_degree")}});
        out["fibers"] = std::move(fibers);
        out["admissible"] = p.at("admissible");
        out["witness"] = p.at("witness").is_null() ? json(nullptr) : tp("witness");
        return out;
    }
    fail(Errc::InvalidInput, "unknown certificate kind '" + kind + "'");
}

} // namespace

std::string reserialize_certificate(const std::string& text) {
    json cert;
    try {
        cert = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::InvalidInput, std::string("malformed certificate JSON: ") + e.what());
    }
    if (!cert.contains("schema_version") || cert.at("schema_version") != "1")
        fail(Errc::InvalidInput, "unsupported schema version");
    const std::string kind = cert.at("kind").get<std::string>();
    const long disc = cert.at("disc").get<long>();
    json payload = reserialize_payload(kind, cert.at("payload"), disc);
    return dump_certificate(make_certificate(kind, disc, std::move(payload)));
}

} // namespace g2::io
