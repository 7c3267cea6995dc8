#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "test_helpers.hpp"
#include "thomforge/chern.hpp"
#include "thomforge/tpdb.hpp"

using namespace thomforge;

TEST_CASE("database loads and serves entries") {
    auto db = TpDatabase::load_default();

    auto sp0 = VarSpace::chern(0, 2, {.quotient = true, .with_s = true});
    CHECK(db.get({"A2", 0, TpKind::TpSource}).polynomial == GradedPoly::parse("c1^2 + c2", sp0));

    auto sp1 = VarSpace::chern(1, 2, {.quotient = true, .with_s = true});
    CHECK(db.get({"A0^3", 1, TpKind::TpSource}).polynomial ==
          GradedPoly::parse("1/2 ( s[]^2 - s[1] - 2 s[] c1 + 2 c1^2 + 2 c2 )", sp1));

    const auto& dis = db.get({"alpha_dis", 0, TpKind::TpsmAlphaDis});
    CHECK(dis.codim == 1);
    CHECK(dis.max_valid_degree == 3);
    CHECK(dis.polynomial.grade_component(2).with_truncation(std::nullopt) ==
          GradedPoly::parse("c1^2 + c2 - 1/2 c1 s[1]", dis.polynomial.space()));

    CHECK(db.contains({"A1", 1, TpKind::TpsmClosure}));
    CHECK_FALSE(db.contains({"A9", 0, TpKind::TpSource}));
    CHECK_THROWS_AS(db.get({"A9", 0, TpKind::TpSource}), UnknownKeyError);
    CHECK_THROWS_AS(db.coeff_vector("alpha_image", 0), UnknownKeyError);
}

TEST_CASE("structural validation passes over the whole database") {
    auto db = TpDatabase::load_default();
    auto report = db.validate_all();
    for (const auto& item : report.items) {
        CAPTURE(item.subject);
        CAPTURE(item.check);
        CAPTURE(item.detail);
        CHECK(item.pass);
    }
    CHECK(report.all_pass());
    CHECK(report.items.size() > 40);
}

TEST_CASE("corank-one closure series collapse telescopically") {
    auto db = TpDatabase::load_default();
    VarSpace::Ptr space = db.get({"A1", 0, TpKind::TpsmClosure}).polynomial.space();
    GradedPoly sum = GradedPoly::zero(space, 4);
    for (const char* name : {"A1", "A2", "A3", "A4"})
        sum = sum + db.get({name, 0, TpKind::TpsmClosure}).polynomial.embedded(space);
    GradedPoly expected = GradedPoly::zero(space, 4);
    for (int k = 1; k <= 4; ++k)
        expected = expected + GradedPoly::variable(space, "c" + std::to_string(k), 4);
    CHECK(sum == expected);
}

TEST_CASE("image series equals its combination of closure series") {
    auto db = TpDatabase::load_default();
    for (const char* name : {"alpha_image", "alpha_image2"}) {
        const auto& vec = db.coeff_vector(name, 1);
        const auto& series =
            db.get({name, 1,
                    std::string(name) == "alpha_image" ? TpKind::TpsmAlphaImage : TpKind::TpsmAlphaImage2});
        auto space = series.polynomial.space();
        GradedPoly combo = GradedPoly::constant(space, vec.constant, 3);
        for (const auto& [closure, coeff] : vec.terms)
            combo = combo + db.get({closure, 1, TpKind::TpsmClosure}).polynomial.embedded(space) * coeff;
        CHECK(combo == series.polynomial);
    }
    // the two vectors differ only in the constant and the leading sign
    const auto& v1 = db.coeff_vector("alpha_image", 1);
    const auto& v2 = db.coeff_vector("alpha_image2", 1);
    CHECK(v1.constant == Rational(1));
    CHECK(v2.constant == Rational(0));
    CHECK(v1.terms.size() == v2.terms.size());
}

TEST_CASE("series leading terms reproduce the exact polynomials") {
    auto db = TpDatabase::load_default();
    for (const auto& [key, entry] : db.entries()) {
        if (key.kind != TpKind::TpsmClosure) continue;
        SingularityKey src{key.name, key.kappa, TpKind::TpSource};
        if (!db.contains(src)) continue;
        CAPTURE(key.name);
        CAPTURE(key.kappa);
        CHECK(entry.polynomial.grade_component(entry.codim).with_truncation(std::nullopt) ==
              db.get(src).polynomial.embedded(entry.polynomial.space()));
    }
}

TEST_CASE("tuple names determine deg1 and aut") {
    CHECK(parse_tuple_name("A1^3") == std::vector<std::pair<std::string, int>>{{"A1", 3}});
    CHECK(parse_tuple_name("A0A1") == std::vector<std::pair<std::string, int>>{{"A0", 1}, {"A1", 1}});
    CHECK(parse_tuple_name("I22") == std::vector<std::pair<std::string, int>>{{"I22", 1}});
    CHECK(parse_tuple_name("alpha_image").empty());

    CHECK(tuple_deg1(parse_tuple_name("A1^3")) == 3);
    CHECK(tuple_deg1(parse_tuple_name("A1A2")) == 1);
    CHECK(tuple_deg1(parse_tuple_name("A1A1A2")) == 2);
    CHECK(tuple_deg1(parse_tuple_name("A0^4")) == 4);
    CHECK(tuple_aut(parse_tuple_name("A1^3")) == 6);
    CHECK(tuple_aut(parse_tuple_name("A0^4")) == 24);
    CHECK(tuple_aut(parse_tuple_name("A1A2")) == 1);
    CHECK(tuple_aut(parse_tuple_name("A1A1A2")) == 2);
}

TEST_CASE("surface-map classes are not quotient-expressible") {
    auto db = TpDatabase::load_default();
    const auto& lips = db.get({"lips", 0, TpKind::TpA}).polynomial;
    CHECK_FALSE(supersymmetry_check(lips, 2, 2));
    CHECK_THROWS_AS(to_quotient_classes(lips, 2, 2, 3), NotSupersymmetricError);
}

TEST_CASE("content hash protects the data file") {
    // a one-character corruption must be rejected
    std::ifstream in(TpDatabase::default_path(), std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = content.find("c1^2 + c2");
    REQUIRE(pos != std::string::npos);
    content[pos] = 'c';
    content[pos + 1] = '2';
    const std::string tmp = "corrupted_db_test.txt";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << content;
    }
    CHECK_THROWS_AS(TpDatabase::load(tmp), PreconditionError);
    std::remove(tmp.c_str());
}
