#pragma once

// JSON encodings. Field order is fixed (ordered_json), so output is byte-stable.
//
//   scalar      Q: "n/d" or "n"    F_p: integer in [0, p)    Q(w): ["a", "b"] meaning a + b*w
//   certificate {"label", "field": {"kind": ...[, "p"]}, "lines": [[s,s,s], ...], "claimed_tvector"?}
//   partition   {"d": n, "points": [[line indices], ...]}
//   verdict     {"status", "criterion", "detail"}

#include <string>

#include "json.hpp"

#include "harbourne/criteria.hpp"
#include "harbourne/geometry.hpp"
#include "harbourne/incidence.hpp"

namespace harbourne {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& x) {
    struct Visitor {
        Json operator()(const BigRational& r) const { return r.to_string(); }
        Json operator()(const PrimeFieldElement& e) const { return e.residue(); }
        Json operator()(const EisensteinRational& e) const {
            return Json::array({e.a().to_string(), e.b().to_string()});
        }
    };
    return std::visit(Visitor{}, x.value());
}

inline Scalar scalar_from_json(const FieldDescriptor& field, const Json& j, const std::string& path) {
    auto rational = [&](const Json& v, const std::string& p) {
        if (!v.is_string()) throw VerificationError("expected a rational string", p);
        try {
            return BigRational::parse(v.get<std::string>());
        } catch (const Error& e) {
            throw VerificationError(e.what(), p);
        }
    };
    switch (field.kind()) {
        case FieldDescriptor::Kind::rational:
            return rational(j, path);
        case FieldDescriptor::Kind::prime: {
            if (!j.is_number_integer()) throw VerificationError("expected an integer residue", path);
            const auto v = j.get<long long>();
            if (v < 0 || v >= field.modulus())
                throw VerificationError("residue " + std::to_string(v) + " outside [0, " +
                                            std::to_string(field.modulus()) + ")",
                                        path);
            return PrimeFieldElement(v, field.modulus());
        }
        case FieldDescriptor::Kind::eisenstein:
            if (!j.is_array() || j.size() != 2) throw VerificationError("expected [\"a\", \"b\"] for a + b*w", path);
            return EisensteinRational(rational(j[0], path + "/0"), rational(j[1], path + "/1"));
    }
    throw VerificationError("unknown field kind", path);
}

inline Json to_json(const FieldDescriptor& f) {
    switch (f.kind()) {
        case FieldDescriptor::Kind::rational: return Json{{"kind", "rational"}};
        case FieldDescriptor::Kind::eisenstein: return Json{{"kind", "eisenstein"}};
        case FieldDescriptor::Kind::prime: return Json{{"kind", "prime"}, {"p", f.modulus()}};
    }
    return {};
}

inline FieldDescriptor field_from_json(const Json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw VerificationError("expected an object with a string \"kind\"", path);
    const auto kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "eisenstein") return FieldDescriptor::eisenstein();
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw VerificationError("prime field needs an integer \"p\"", path + "/p");
        try {
            return FieldDescriptor::prime(j["p"].get<int>());
        } catch (const Error& e) {
            throw VerificationError(e.what(), path + "/p");
        }
    }
    throw VerificationError("unknown field kind '" + kind + "'", path + "/kind");
}

inline Json to_json(const Certificate& cert) {
    Json lines = Json::array();
    for (const auto& l : cert.lines) lines.push_back(Json::array({to_json(l.c[0]), to_json(l.c[1]), to_json(l.c[2])}));
    Json j;
    j["label"] = cert.label;
    j["field"] = to_json(cert.field);
    j["lines"] = std::move(lines);
    if (cert.claimed) j["claimed_tvector"] = cert.claimed->to_string();
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw VerificationError("certificate must be a JSON object", "/");
    Certificate cert;
    if (!j.contains("label") || !j["label"].is_string()) throw VerificationError("missing string", "/label");
    cert.label = j["label"].get<std::string>();
    if (!j.contains("field")) throw VerificationError("missing field descriptor", "/field");
    cert.field = field_from_json(j["field"], "/field");
    if (!j.contains("lines") || !j["lines"].is_array()) throw VerificationError("missing array", "/lines");
    const auto& lines = j["lines"];
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string path = "/lines/" + std::to_string(i);
        if (!lines[i].is_array() || lines[i].size() != 3) throw VerificationError("expected three coordinates", path);
        ProjTriple t;
        for (std::size_t k = 0; k < 3; ++k)
            t.c[k] = scalar_from_json(cert.field, lines[i][k], path + "/" + std::to_string(k));
        if (is_zero(t)) throw VerificationError("all coordinates are zero", path);
        cert.lines.push_back(std::move(t));
    }
    if (cert.lines.size() < 2) throw VerificationError("need at least two lines", "/lines");
    if (j.contains("claimed_tvector") && !j["claimed_tvector"].is_null()) {
        if (!j["claimed_tvector"].is_string()) throw VerificationError("expected \"t2,...,td\"", "/claimed_tvector");
        try {
            cert.claimed = TVector::parse(static_cast<int>(cert.lines.size()), j["claimed_tvector"].get<std::string>());
        } catch (const Error& e) {
            throw VerificationError(e.what(), "/claimed_tvector");
        }
    }
    return cert;
}

inline Json to_json(const CliquePartition& P) {
    Json points = Json::array();
    for (const auto& c : P.points) points.push_back(c);
    Json j;
    j["d"] = P.d;
    j["points"] = std::move(points);
    return j;
}

inline CliquePartition partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer())
        throw VerificationError("missing integer", "/d");
    CliquePartition P{j["d"].get<int>(), {}};
    if (!j.contains("points") || !j["points"].is_array()) throw VerificationError("missing array", "/points");
    for (const auto& c : j["points"]) P.points.push_back(c.get<std::vector<int>>());
    return P;
}

inline Json to_json(const ExclusionVerdict& v) {
    Json j;
    j["status"] = v.excluded() ? "excluded" : "passed";
    j["criterion"] = v.criterion;
    j["detail"] = v.detail;
    return j;
}

}  // namespace harbourne
