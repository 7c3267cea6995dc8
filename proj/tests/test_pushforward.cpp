#include <doctest.h>

#include "test_helpers.hpp"
#include "thomforge/chern.hpp"
#include "thomforge/pushforward.hpp"

using namespace thomforge;
using namespace thomforge::testing;

namespace {

VarSpace::Ptr cs_space(int kappa, int K) {
    return VarSpace::chern(kappa, K, {.quotient = true, .with_s = true});
}

GradedPoly parse_cs(const std::string& text, int kappa, int K) {
    return GradedPoly::parse(text, cs_space(kappa, K));
}

}  // namespace

TEST_CASE("formal pushforward rules") {
    for (int kappa : {0, 1}) {
        const int K = 5;
        auto sp = cs_space(kappa, K);
        auto push = [&](const std::string& text) {
            return formal_pushforward(GradedPoly::parse(text, sp), K);
        };
        CHECK(push("1") == GradedPoly::variable(cs_space(kappa, K), "s[]", K));
        CHECK(push("c1^2") == GradedPoly::variable(cs_space(kappa, K), "s[2]", K));
        CHECK(push("c2") == GradedPoly::variable(cs_space(kappa, K), "s[0,1]", K));
        CHECK(push("s[1] c1") == GradedPoly::parse("s[1]^2", cs_space(kappa, K), K));
        CHECK(push("0").is_zero());
    }
}

TEST_CASE("pushforward is linear over the s-subring and shifts degree by kappa") {
    for (int trial = 0; trial < 30; ++trial) {
        const int kappa = static_cast<int>(rand_int(0, 1));
        const int K = 6;
        auto sp = cs_space(kappa, 3);
        auto p = rand_poly(sp, 4, 1);
        auto s1 = GradedPoly::variable(sp, "s[1]");
        CHECK(formal_pushforward(s1 * p, K) ==
              GradedPoly::variable(cs_space(kappa, K), "s[1]", K) * formal_pushforward(p, K));
    }
    // degree shift on single monomials
    auto sp = cs_space(1, 6);
    auto pushed = formal_pushforward(GradedPoly::parse("c1 c2", sp), 6);
    CHECK(pushed.lowest_degree() == 4);  // deg 3 + kappa
}

TEST_CASE("pushforward is compatible with torus specialization") {
    // specialize(f_*(p)) = specialize(p) * s_0 for any germ signature, since
    // s_J specializes to c^J s_0.
    auto rand_sig = [&](int m, int n) {
        std::vector<long> w, d;
        for (int i = 0; i < m; ++i) w.push_back(rand_int(1, 9));
        for (int i = 0; i < n; ++i) d.push_back(rand_int(1, 9));
        return GermSignature(w, d);
    };
    for (int trial = 0; trial < 50; ++trial) {
        const int kappa = static_cast<int>(rand_int(0, 1));
        const int m = static_cast<int>(rand_int(1, 3));
        auto sig = rand_sig(m, m + kappa);
        const int K = 6;
        auto sp = cs_space(kappa, 2);
        auto p = rand_poly(sp, 4, 1);
        auto lhs = specialize(formal_pushforward(p, 4 + kappa), sig, K);
        auto rhs = specialize(p, sig, K) * landweber_novikov(sig, {}, K);
        CHECK(lhs == rhs.truncated(*lhs.truncation()));
    }
}

TEST_CASE("rho reproduces the tabulated target series") {
    auto db = TpDatabase::load_default();

    const auto& alpha_image = db.get({"alpha_image", 1, TpKind::TpsmAlphaImage});
    const auto& target_image = db.get({"target_image", 1, TpKind::TpsmTargetImage});
    CHECK(rho(alpha_image.polynomial, 4) ==
          target_image.polynomial.embedded(cs_space(1, 4)).truncated(4));

    const auto& alpha_dis = db.get({"alpha_dis", 0, TpKind::TpsmAlphaDis});
    const auto& target_dis = db.get({"target_dis", 0, TpKind::TpsmTargetDis});
    CHECK(rho(alpha_dis.polynomial, 3) == target_dis.polynomial.embedded(cs_space(0, 3)));

    CHECK(rho(GradedPoly::zero(cs_space(0, 3)), 3).is_zero());
}

TEST_CASE("target classes of exact polynomials") {
    auto db = TpDatabase::load_default();

    CHECK(target_tp(db.get({"A1", 0, TpKind::TpSource}), 2) == parse_cs("s[1]", 0, 2));
    CHECK(target_tp(db.get({"A0^2", 1, TpKind::TpSource}), 3) ==
          parse_cs("1/2 ( s[]^2 - s[1] )", 1, 3).truncated(3));
    // mechanical pushforward of a three-point class: 1/3 f_*(tp)
    auto t3 = target_tp(db.get({"A1^3", 0, TpKind::TpSource}), 4);
    CHECK(t3 * Rational(3) == formal_pushforward(db.get({"A1^3", 0, TpKind::TpSource}).polynomial, 4));
    CHECK_THROWS_AS(target_tp(db.get({"A1", 0, TpKind::TpsmClosure}), 4), PreconditionError);
}

TEST_CASE("pair residues at the fundamental-class level are s-free") {
    auto db = TpDatabase::load_default();

    auto t0 = extract_residues(db, 0, 4, ResidueLevel::FundamentalClass);
    auto sp0 = cs_space(0, 4);
    CHECK(t0.at({"A1"}) == parse_cs("c1", 0, 4).truncated(4));
    CHECK(t0.at({"A1", "A1"}) == parse_cs("-4 c1^2 - 2 c2", 0, 4).truncated(4));
    CHECK(t0.at({"A1", "A2"}) == parse_cs("-6 c1^3 - 12 c1 c2 - 6 c3", 0, 4).truncated(4));
    CHECK(t0.at({"A2", "A1"}) == parse_cs("-6 c1^3 - 12 c1 c2 - 6 c3", 0, 4).truncated(4));
    CHECK_FALSE(t0.contains({"A1", "A1", "A1"}));  // triples gated behind a convention

    auto t1 = extract_residues(db, 1, 4, ResidueLevel::FundamentalClass);
    CHECK(t1.at({"A0"}) == GradedPoly::constant(cs_space(1, 4), 1, 4));
    CHECK(t1.at({"A0", "A0"}) == parse_cs("-c1", 1, 4).truncated(4));
    CHECK(t1.at({"A0", "A1"}) == parse_cs("-2 c1 c2 - 2 c3", 1, 4).truncated(4));
    CHECK(t1.at({"A1", "A0"}) == parse_cs("-2 c1 c2 - 2 c3", 1, 4).truncated(4));
}

TEST_CASE("higher residues depend on the tuple normalization") {
    auto db = TpDatabase::load_default();

    auto t0 = extract_residues(db, 0, 4, ResidueLevel::FundamentalClass,
                               TupleConvention::AutWeighted);
    CHECK(t0.at({"A1", "A1", "A1"}) == parse_cs("40 c1^3 + 56 c1 c2 + 24 c3", 0, 4).truncated(4));

    auto t1 = extract_residues(db, 1, 4, ResidueLevel::FundamentalClass,
                               TupleConvention::AutWeighted);
    CHECK(t1.at({"A0", "A0", "A0"}) == parse_cs("2 c1^2 + 2 c2", 1, 4).truncated(4));
    CHECK(t1.at({"A0", "A0", "A0", "A0"}) ==
          parse_cs("-6 c1^3 - 18 c1 c2 - 12 c3", 1, 4).truncated(4));

    // without the Aut weight the residue keeps s-classes, which is surfaced
    CHECK_THROWS_AS(extract_residues(db, 0, 4, ResidueLevel::FundamentalClass,
                                     TupleConvention::PlainAlpha),
                    ResidueNotSFreeError);
}

TEST_CASE("recursion reconstructs the database classes") {
    auto db = TpDatabase::load_default();

    for (int kappa : {0, 1}) {
        const int K = 4;
        auto table = extract_residues(db, kappa, K, ResidueLevel::FundamentalClass,
                                      TupleConvention::AutWeighted);
        auto space = cs_space(kappa, K);
        for (const auto& [key, entry] : db.entries()) {
            if (key.kind != TpKind::TpSource || key.kappa != kappa) continue;
            auto parsed = parse_tuple_name(key.name);
            if (parsed.empty()) continue;
            std::vector<std::string> types;
            for (const auto& [type, count] : parsed)
                for (int i = 0; i < count; ++i) types.push_back(type);
            std::vector<std::string> tail(types.begin() + 1, types.end());
            int tail_aut = 1;
            {
                std::map<std::string, int> mult;
                for (const auto& t : tail) ++mult[t];
                for (const auto& [t, c] : mult)
                    for (int k = 2; k <= c; ++k) tail_aut *= k;
            }
            CAPTURE(key.name);
            CAPTURE(kappa);
            auto rec = multi_recursion(table, types, K);
            CHECK(rec.source == entry.polynomial.embedded(space).truncated(K) * Rational(tail_aut));
        }
    }
}

TEST_CASE("SSM-level residues: top-stratum pairs work, deeper closures are surfaced") {
    auto db = TpDatabase::load_default();
    // A0A1 / A1A0 have codimension equal to the truncation order, so their
    // closure series coincide with the tuple constructible functions and the
    // solved residues are s-free.
    auto table = extract_residues(db, 1, 3, ResidueLevel::SegreSM, std::nullopt,
                                  {"A1", "A0A1", "A1A0"});
    auto space = cs_space(1, 3);

    CHECK(table.at({"A1"}) == parse_cs("c2 - c1 c2 - c3", 1, 3).truncated(3));
    for (const auto& tuple :
         {std::vector<std::string>{"A0", "A1"}, std::vector<std::string>{"A1", "A0"}}) {
        const auto& r = table.at(tuple);
        CHECK(r == parse_cs("-2 c1 c2 - 2 c3", 1, 3).truncated(3));
    }

    // the double-point closure differs from the tuple constructible function
    // on its boundary strata within the truncation; the mismatch must surface
    CHECK_THROWS_AS(extract_residues(db, 1, 3, ResidueLevel::SegreSM), ResidueNotSFreeError);

    // round trip against the stored series
    for (const auto& name : {"A0A1", "A1A0"}) {
        auto parsed = parse_tuple_name(name);
        std::vector<std::string> types;
        for (const auto& [type, count] : parsed)
            for (int i = 0; i < count; ++i) types.push_back(type);
        CAPTURE(name);
        auto rec = multi_recursion(table, types, 3);
        CHECK(rec.source ==
              db.get({name, 1, TpKind::TpsmClosure}).polynomial.embedded(space).truncated(3));
    }
}

TEST_CASE("generating function matches the recursion on toy residues") {
    const int K = 3;
    auto space = cs_space(1, K);
    ResidueTable table;
    table.level = ResidueLevel::SegreSM;
    table.kappa = 1;
    table.K = K;
    auto put = [&](std::vector<std::string> tuple, const std::string& text) {
        table.residues.emplace(ResidueTable::canonical(std::move(tuple)),
                               GradedPoly::parse(text, space, K));
    };
    put({"X"}, "c1");
    put({"Y"}, "2 c2");
    put({"X", "X"}, "c1^2");
    put({"X", "Y"}, "3 c1 c2");
    put({"Y", "Y"}, "c3");
    put({"X", "X", "X"}, "c3");
    put({"X", "X", "Y"}, "5 c1^3");
    put({"X", "Y", "Y"}, "c1 c2");
    put({"Y", "Y", "Y"}, "7 c3");

    auto gf = generating_function(table, {"X", "Y"}, 3, K);
    auto marker_space = gf.space();

    auto tuples = std::vector<std::vector<std::string>>{
        {"X"},      {"Y"},      {"X", "X"},      {"X", "Y"},      {"Y", "Y"},
        {"X", "X", "X"}, {"X", "X", "Y"}, {"X", "Y", "Y"}, {"Y", "Y", "Y"}};
    for (const auto& tuple : tuples) {
        std::map<std::string, int> mult;
        for (const auto& t : tuple) ++mult["t_" + t];
        int aut = 1;
        for (const auto& [t, c] : mult)
            for (int k = 2; k <= c; ++k) aut *= k;

        // collect the coefficient polynomial of this exact marker monomial
        GradedPoly coeff_poly = GradedPoly::zero(marker_space, K);
        for (const auto& [expo, coeff] : gf.terms()) {
            std::map<std::string, int> residual;
            bool match = true;
            for (std::size_t i = 0; i < expo.size(); ++i) {
                if (expo[i] == 0) continue;
                const auto& v = marker_space->var(i);
                if (v.kind == VarKind::Marker) {
                    auto it = mult.find(v.name);
                    if (it == mult.end() || it->second != expo[i]) match = false;
                } else {
                    residual[v.name] = expo[i];
                }
            }
            // require exactly the marker multiset (no missing markers)
            if (match) {
                int found = 0;
                for (std::size_t i = 0; i < expo.size(); ++i)
                    if (expo[i] != 0 && marker_space->var(i).kind == VarKind::Marker)
                        found += expo[i];
                int want = 0;
                for (const auto& [t, c] : mult) want += c;
                if (found == want)
                    coeff_poly = coeff_poly + GradedPoly::monomial(marker_space, residual, coeff, K);
            }
        }

        CAPTURE(tuple.size());
        auto expected =
            multi_recursion(table, tuple, K).target.embedded(marker_space) / Rational(aut);
        CHECK(coeff_poly == expected);
    }
}
