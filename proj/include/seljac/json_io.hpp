#pragma once

#include <string>

#include <json.hpp>

#include "seljac/curve.hpp"
#include "seljac/picard.hpp"
#include "seljac/rr_oracle.hpp"
#include "seljac/torsion.hpp"
#include "seljac/zeta.hpp"

namespace seljac {

using nlohmann::json;

// ---- fields ---------------------------------------------------------------

inline json field_to_json(const FieldPtr& F) {
    switch (F->kind()) {
        case FieldKind::rationals:
            return json{{"kind", "Q"}};
        case FieldKind::number_field: {
            if (F->cyclotomic_index() > 0)
                return json{{"kind", "cyclotomic"}, {"m", F->cyclotomic_index()}};
            json mp = json::array();
            for (auto& c : F->minpoly_q()) mp.push_back(mpq_class(c).get_str());
            return json{{"kind", "numberfield"}, {"minpoly", mp}};
        }
        case FieldKind::prime_field:
            return json{{"kind", "Fp"}, {"p", F->characteristic()}};
        case FieldKind::ext_field: {
            json mp = json::array();
            for (auto c : F->minpoly_p()) mp.push_back(c);
            return json{{"kind", "Fq"}, {"p", F->characteristic()}, {"deg", F->degree()},
                        {"minpoly", mp}};
        }
    }
    fail(errc::bad_input, "unknown field kind");
}

inline mpq_class rational_from_json(const json& j) {
    mpq_class v;
    if (j.is_number_integer()) {
        v = mpq_class(static_cast<long>(j.get<long long>()));
    } else if (j.is_string()) {
        try {
            v = mpq_class(j.get<std::string>());
        } catch (const std::exception&) {
            fail(errc::bad_input, "malformed rational: " + j.dump());
        }
    } else {
        fail(errc::bad_input, "rational must be an integer or a \"num/den\" string");
    }
    v.canonicalize();
    return v;
}

inline FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) fail(errc::bad_input, "field descriptor needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "cyclotomic") return Field::cyclotomic(j.at("m").get<int>());
    if (kind == "numberfield") {
        std::vector<mpq_class> mp;
        for (auto& c : j.at("minpoly")) mp.push_back(rational_from_json(c));
        return Field::number_field(std::move(mp));
    }
    if (kind == "Fp") return Field::prime(j.at("p").get<u64>());
    if (kind == "Fq") {
        u64 p = j.at("p").get<u64>();
        if (j.contains("minpoly")) {
            std::vector<u64> mp;
            for (auto& c : j.at("minpoly")) mp.push_back(c.get<u64>());
            return Field::ext(p, std::move(mp));
        }
        return Field::ext(p, j.at("deg").get<int>());
    }
    fail(errc::bad_input, "unknown field kind: " + kind);
}

// ---- elements --------------------------------------------------------------

inline json element_to_json(const FieldElement& a) {
    const FieldPtr& F = a.owner();
    if (F->is_finite()) {
        if (F->degree() == 1) return json(a.rcoeffs()[0]);
        json arr = json::array();
        for (auto c : a.rcoeffs()) arr.push_back(c);
        return arr;
    }
    if (F->degree() == 1) return json(a.qcoeffs()[0].get_str());
    json arr = json::array();
    for (auto& c : a.qcoeffs()) arr.push_back(mpq_class(c).get_str());
    return arr;
}

inline FieldElement element_from_json(const FieldPtr& F, const json& j) {
    if (F->is_finite()) {
        std::vector<u64> c;
        if (j.is_array()) {
            for (auto& x : j) c.push_back(x.get<u64>());
        } else if (j.is_number_integer()) {
            long long v = j.get<long long>();
            long long m = static_cast<long long>(F->characteristic());
            long long r = v % m;
            if (r < 0) r += m;
            c.push_back(static_cast<u64>(r));
        } else {
            fail(errc::bad_input, "finite-field element must be an integer or array");
        }
        c.resize(static_cast<size_t>(F->degree()), 0);
        return F->from_coeffs_p(std::move(c));
    }
    std::vector<mpq_class> c;
    if (j.is_array()) {
        for (auto& x : j) c.push_back(rational_from_json(x));
    } else {
        c.push_back(rational_from_json(j));
    }
    c.resize(static_cast<size_t>(F->degree()), mpq_class(0));
    return F->from_coeffs_q(std::move(c));
}

// ---- polynomials, curves, points, divisors ---------------------------------

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (auto& c : p.coeffs()) arr.push_back(element_to_json(c));
    return arr;
}

inline Poly poly_from_json(const FieldPtr& F, const json& j) {
    if (!j.is_array()) fail(errc::bad_input, "polynomial must be an array of elements");
    std::vector<FieldElement> c;
    for (auto& x : j) c.push_back(element_from_json(F, x));
    return Poly(F, std::move(c));
}

inline json curve_to_json(const CurvePtr& c) {
    return json{{"field", field_to_json(c->field())},
                {"d", c->d()},
                {"n", c->n()},
                {"f", poly_to_json(c->f())}};
}

inline CurvePtr curve_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    int d = j.at("d").get<int>();
    int n = j.at("n").get<int>();
    Poly f = poly_from_json(F, j.at("f"));
    return Curve::make(F, d, n, f);
}

inline json point_to_json(const CurvePoint& p) {
    if (p.is_infinity()) return json("inf");
    return json{{"x", element_to_json(p.x())}, {"y", element_to_json(p.y())}};
}

inline CurvePoint point_from_json(const CurvePtr& c, const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return CurvePoint::infinity();
    if (!j.is_object()) fail(errc::bad_input, "point must be \"inf\" or {x, y}");
    FieldElement x = element_from_json(c->field(), j.at("x"));
    FieldElement y = element_from_json(c->field(), j.at("y"));
    return c->point(x, y);
}

inline json projpoint_to_json(const ProjPoint& p) {
    if (p.is_infinity()) return json("inf");
    return element_to_json(p.z());
}

inline ProjPoint projpoint_from_json(const FieldPtr& F, const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ProjPoint::infinity();
    return ProjPoint::finite(element_from_json(F, j));
}

inline json divisor_to_json(const Divisor& D) {
    json arr = json::array();
    for (auto& [p, c] : D.support())
        arr.push_back(json{{"point", point_to_json(p)}, {"coeff", c}});
    return arr;
}

inline Divisor divisor_from_json(const CurvePtr& c, const json& j) {
    Divisor D;
    for (auto& e : j) D.add(point_from_json(c, e.at("point")), e.at("coeff").get<long long>());
    return D;
}

// ---- reports ---------------------------------------------------------------

inline json packet_to_json(const Packet& p) {
    json pts = json::array();
    for (auto& pt : p.points) pts.push_back(point_to_json(pt));
    return json{{"a", element_to_json(p.a)}, {"v", poly_to_json(p.v)}, {"points", pts}};
}

inline json torsion_report_to_json(const TorsionReport& r) {
    json cert = json::array();
    for (auto& c : r.certificate) cert.push_back(element_to_json(c));
    return json{{"point", point_to_json(r.point)},
                {"order", r.found ? json(r.order) : json(nullptr)},
                {"bound", r.bound},
                {"certificate", cert},
                {"verified", r.verified}};
}

inline json zeta_to_json(const ZetaData& z) {
    json L = json::array();
    for (auto& c : z.L) L.push_back(c.get_str());
    return json{{"q", z.q},
                {"counts", z.counts},
                {"L", L},
                {"jacobianOrder", z.jacobian_order.get_str()}};
}

inline json mobius_to_json(const MobiusMap& m) {
    return json{{"a", element_to_json(m.a())},
                {"b", element_to_json(m.b())},
                {"c", element_to_json(m.c())},
                {"d", element_to_json(m.d())}};
}

inline json picard_datum_to_json(const PicardDatum& d) {
    json phi = json::array();
    for (auto& [eta, img] : d.phi)
        phi.push_back(json{{"eta", element_to_json(eta)}, {"image", element_to_json(img)}});
    return json{{"phi", phi},
                {"map0", mobius_to_json(d.map0)},
                {"lambdaCubed", element_to_json(d.lambda_cubed)},
                {"f", poly_to_json(d.f)},
                {"v0Cubed", poly_to_json(d.v0_cubed)},
                {"v1Cubed", poly_to_json(d.v1_cubed)},
                {"pointPairRatio", element_to_json(d.point_pair_ratio)},
                {"orbitId", d.orbit_id}};
}

}  // namespace seljac
