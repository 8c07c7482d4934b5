#include <catch2/catch_amalgamated.hpp>

#include "seljac/json_io.hpp"

using namespace seljac;

TEST_CASE("field descriptor round trips") {
    std::vector<FieldPtr> fields{Field::rationals(), Field::cyclotomic(12), Field::prime(13),
                                 Field::ext(5, 2), Field::number_field({-2, 0, 1})};
    for (auto& F : fields) {
        json j = field_to_json(F);
        FieldPtr back = field_from_json(j);
        REQUIRE(back->same(*F));
    }
    REQUIRE(field_from_json(json::parse(R"({"kind":"Q"})"))->kind() == FieldKind::rationals);
    REQUIRE(field_from_json(json::parse(R"({"kind":"cyclotomic","m":12})"))->degree() == 4);
    REQUIRE_THROWS_AS(field_from_json(json::parse(R"({"kind":"Fp","p":4})")), error);
}

TEST_CASE("element serialization") {
    auto Q = Field::rationals();
    auto e = Q->from_rational(mpq_class(5, 6));
    REQUIRE(element_to_json(e) == json("5/6"));
    REQUIRE(element_from_json(Q, json("5/6")) == e);
    REQUIRE(element_from_json(Q, json(-3)) == Q->from_int(-3));

    auto F13 = Field::prime(13);
    REQUIRE(element_to_json(F13->from_int(7)) == json(7));
    REQUIRE(element_from_json(F13, json(-1)) == F13->from_int(12));

    auto C12 = Field::cyclotomic(12);
    auto z = C12->generator();
    json jz = element_to_json(z);
    REQUIRE(jz.is_array());
    REQUIRE(element_from_json(C12, jz) == z);

    auto F25 = Field::ext(5, 2);
    auto g = F25->generator();
    REQUIRE(element_from_json(F25, element_to_json(g)) == g);
}

TEST_CASE("curve and point round trips") {
    auto F7 = Field::prime(7);
    auto C = new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1}));
    json cj = curve_to_json(C);
    CurvePtr back = curve_from_json(cj);
    REQUIRE(back->f() == C->f());
    REQUIRE(back->d() == C->d());
    REQUIRE(back->genus() == C->genus());

    CurvePoint P = C->point(F7->zero(), F7->one());
    REQUIRE(point_from_json(C, point_to_json(P)) == P);
    REQUIRE(point_from_json(C, json("inf")).is_infinity());
    // a non-point is rejected
    REQUIRE_THROWS_AS(point_from_json(C, json{{"x", 0}, {"y", 3}}), error);

    Divisor D;
    D.add(P, 2);
    D.add(CurvePoint::infinity(), -2);
    json dj = divisor_to_json(D);
    Divisor D2 = divisor_from_json(C, dj);
    REQUIRE(D2 == D);
}

TEST_CASE("report serialization shapes") {
    auto F7 = Field::prime(7);
    auto C = new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1}));
    auto rep = point_order(C, C->point(F7->zero(), F7->one()), 10);
    json rj = torsion_report_to_json(rep);
    REQUIRE(rj.at("order") == 4);
    REQUIRE(rj.at("bound") == 10);
    REQUIRE(rj.at("verified") == true);
    REQUIRE(rj.at("certificate").is_array());

    auto miss = point_order(C, C->point(F7->zero(), F7->one()), 3);
    REQUIRE(torsion_report_to_json(miss).at("order").is_null());

    auto zd = l_polynomial(new_curve(F7, 2, 3, Poly::from_ints(F7, {1, 0, 0, 1})));
    json zj = zeta_to_json(zd);
    REQUIRE(zj.at("jacobianOrder") == "12");
    REQUIRE(zj.at("L").size() == 3);

    auto pr = check_order_n_at(C, F7->zero());
    json pj = packet_to_json(*pr.packet);
    REQUIRE(pj.at("points").size() == 3);
}

TEST_CASE("projective point serialization") {
    auto Q = Field::rationals();
    REQUIRE(projpoint_to_json(ProjPoint::infinity()) == json("inf"));
    auto z = ProjPoint::finite(Q->from_rational(mpq_class(3, 4)));
    REQUIRE(projpoint_from_json(Q, projpoint_to_json(z)) == z);
    REQUIRE(projpoint_from_json(Q, json("inf")).is_infinity());
}

TEST_CASE("serialization is deterministic") {
    auto F7 = Field::prime(7);
    auto C = new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1}));
    REQUIRE(curve_to_json(C).dump() == curve_to_json(C).dump());
}
