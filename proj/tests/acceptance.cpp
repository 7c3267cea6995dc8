// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Every comparison is exact rational equality.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "closed_form_fixtures.hpp"
#include "test_helpers.hpp"
#include "thomforge/invariants.hpp"
#include "thomforge/pushforward.hpp"
#include "thomforge/restriction.hpp"

using namespace thomforge;
using namespace thomforge::testing;
using namespace thomforge::testing::fixtures;

namespace {

const TpDatabase& db() {
    static TpDatabase instance = TpDatabase::load_default();
    return instance;
}

R count(const GermSignature& sig, const std::string& name) {
    return count_stable(db(), sig, {name, sig.kappa(), TpKind::TpSource}).value;
}

GermSignature rand_sig(int m, int n, long wmax = 30, long dmax = 30) {
    std::vector<long> w, d;
    for (int i = 0; i < m; ++i) w.push_back(rand_int(1, wmax));
    for (int j = 0; j < n; ++j) d.push_back(rand_int(1, dmax));
    return GermSignature(w, d);
}

struct Checker {
    int total = 0;
    int failed = 0;
    std::ostringstream notes;

    void is(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failed;
            notes << "    failed: " << what << "\n";
        }
    }
};

int run_criterion(int index, const std::string& title,
                  const std::function<void(Checker&)>& body) {
    Checker c;
    std::string error;
    try {
        body(c);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const bool pass = error.empty() && c.failed == 0;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << title << "  ("
              << (c.total - c.failed) << "/" << c.total << " checks)\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    std::cout << c.notes.str();
    return pass ? 0 : 1;
}

VarSpace::Ptr cs_space(int kappa, int K) {
    return VarSpace::chern(kappa, K, {.quotient = true, .with_s = true});
}

GradedPoly parse_cs(const std::string& text, int kappa, int K) {
    return GradedPoly::parse(text, cs_space(kappa, K), K);
}

ModelGerm ak_model(int k) {
    std::vector<long> w, d;
    for (int i = 1; i <= k; ++i) w.push_back(i);
    d.push_back(k + 1);
    for (int i = 2; i <= k; ++i) d.push_back(i);
    return ModelGerm::from_signature(GermSignature(w, d), "A" + std::to_string(k));
}

// --------------------------------------------------------------------------

void criterion1(Checker& c) {
    GermSignature s1({1, 1, 1}, {2, 2, 1});
    c.is(count(s1, "A3") == R(2), "(1,1,1)->(2,2,1) #A3 = 2");
    c.is(count(s1, "A1A2") == R(0), "(1,1,1)->(2,2,1) #A1A2 = 0");
    c.is(count(s1, "A1^3") == R(0), "(1,1,1)->(2,2,1) #A1^3 = 0");
    GermSignature s2({2, 9, 16}, {18, 11, 16});
    c.is(count(s2, "A3") == R(16), "(2,9,16)->(18,11,16) #A3 = 16");
    c.is(count(s2, "A1A2") == R(105), "(2,9,16)->(18,11,16) #A1A2 = 105");
    c.is(count(s2, "A1^3") == R(98), "(2,9,16)->(18,11,16) #A1^3 = 98");
    c.is(count(GermSignature({1, 1, 1}, {2, 2, 2}), "A3") == R(23),
         "(1,1,1)->(2,2,2) #A3 = 23");
}

void criterion2(Checker& c) {
    for (int it = 0; it < 100; ++it) {
        auto s22 = rand_sig(2, 2);
        R w1(s22.weights[0]), w2(s22.weights[1]), d1(s22.degrees[0]), d2(s22.degrees[1]);
        c.is(count(s22, "A2") == cf22_A2(w1, w2, d1, d2), "#A2 closed form (2,2)");
        c.is(count(s22, "A1^2") == cf22_A1A1(w1, w2, d1, d2), "#A1^2 closed form (2,2)");

        auto s23 = rand_sig(2, 3);
        R u1(s23.weights[0]), u2(s23.weights[1]);
        R e1(s23.degrees[0]), e2(s23.degrees[1]), e3(s23.degrees[2]);
        c.is(count(s23, "A1") == cf23_A1(u1, u2, e1, e2, e3), "#A1 closed form (2,3)");
        c.is(count(s23, "A0^3") == cf23_A0_3(u1, u2, e1, e2, e3), "#A0^3 closed form (2,3)");

        auto s33 = rand_sig(3, 3);
        R v1(s33.weights[0]), v2(s33.weights[1]), v3(s33.weights[2]);
        R f1(s33.degrees[0]), f2(s33.degrees[1]), f3(s33.degrees[2]);
        c.is(count(s33, "A3") == cf33_A3(v1, v2, v3, f1, f2, f3), "#A3 closed form (3,3)");
        c.is(count(s33, "A1A2") == cf33_A1A2(v1, v2, v3, f1, f2, f3),
             "#A1A2 closed form (3,3)");
        c.is(count(s33, "A1^3") == cf33_A1_3(v1, v2, v3, f1, f2, f3),
             "#A1^3 closed form (3,3)");

        auto s34 = rand_sig(3, 4);
        R x1(s34.weights[0]), x2(s34.weights[1]), x3(s34.weights[2]);
        R g1(s34.degrees[0]), g2(s34.degrees[1]), g3(s34.degrees[2]), g4(s34.degrees[3]);
        c.is(count(s34, "A0^4") == cf34_A0_4(x1, x2, x3, g1, g2, g3, g4),
             "#A0^4 closed form (3,4)");
    }
    // Corank-one reductions.
    for (int it = 0; it < 100; ++it) {
        long w0 = rand_int(1, 10), w1 = rand_int(1, 10), w2 = rand_int(1, 10);
        long d = rand_int(1, 30);
        GermSignature sig({w1, w2, w0}, {w1, w2, d});
        R rw0(w0), rw1(w1), rw2(w2), rd(d);
        c.is(count(sig, "A3") ==
                 (rd - rw0) * (rd - 2 * rw0) * (rd - 3 * rw0) / (rw0 * rw1 * rw2),
             "corank-one #A3 reduction");
        c.is(count(sig, "A1A2") ==
                 (rd - rw0) * (rd - 2 * rw0) * (rd - 3 * rw0) * (rd - 4 * rw0) /
                     (P(rw0, 2) * rw1 * rw2),
             "corank-one #A1A2 reduction");
        c.is(count(sig, "A1^3") ==
                 (rd - rw0) * (rd - 2 * rw0) * (rd - 3 * rw0) * (rd - 4 * rw0) *
                     (rd - 5 * rw0) / (6 * P(rw0, 3) * rw1 * rw2),
             "corank-one #A1^3 reduction");
        long e1 = rand_int(1, 30), e2 = rand_int(1, 30);
        GermSignature sig4({w0, w1, w2}, {e1, e2, w1, w2});
        R re1(e1), re2(e2);
        c.is(count(sig4, "A0^4") ==
                 (re1 - rw0) * (re1 - 2 * rw0) * (re1 - 3 * rw0) * (re2 - rw0) *
                     (re2 - 2 * rw0) * (re2 - 3 * rw0) / (6 * P(rw0, 4) * rw1 * rw2),
             "corank-one #A0^4 reduction");
    }
}

void criterion3(Checker& c) {
    for (long k = 2; k <= 8; ++k) {
        GermSignature sig({1, 2, 2 * k - 1}, {1, 2 * k, 2 * k + 1, 2 * (2 * k - 1)});
        R expected =
            R(8, 3) * P(R(k - 1), 2) * (P(R(k), 3) - 5 * P(R(k), 2) + 9 * R(k) - 6);
        c.is(count(sig, "A0^4") == expected, "quadruple-point formula at k=" + std::to_string(k));
    }
}

void criterion4(Checker& c) {
    for (long k = 2; k <= 6; ++k) {
        GermSignature sig({k, 2, k + 2}, {k + 2, 2, 2 * k + 2, 3 * k});
        c.is(mu_image(db(), sig).value == R(k), "first family: mu_I = k");
        c.is(mu_image2(db(), sig).value == R(0), "first family: mu_I2 = 0");
    }
    const long ahat[] = {18, 186, 844, 2620, 6510};
    for (long k = 2; k <= 6; ++k) {
        GermSignature sig({1, 2, 2 * k - 1}, {1, 2 * k, 2 * k + 1, 2 * (2 * k - 1)});
        c.is(mu_image(db(), sig).value == R(ahat[k - 2]), "second family mu_I value");
    }
    const long bhat[] = {252, 837, 1968, 3825, 6588};
    for (long k = 2; k <= 6; ++k) {
        GermSignature sig({1, 1, 1}, {1, 2, 2, 2 * k + 1});
        c.is(mu_image(db(), sig).value == R(bhat[k - 2]), "third family mu_I value");
    }
    for (long l = 1; l <= 5; ++l) {
        GermSignature sig({l, l, 1}, {2 * l, 2 * l, 3 * l, 1});
        c.is(mu_image(db(), sig).value == R(45 * l - 12), "weighted family mu_I = 45l - 12");
    }
    for (int it = 0; it < 100; ++it) {
        auto s23 = rand_sig(2, 3);
        R w1(s23.weights[0]), w2(s23.weights[1]);
        R d1(s23.degrees[0]), d2(s23.degrees[1]), d3(s23.degrees[2]);
        c.is(mu_image(db(), s23).value == cf23_muI(w1, w2, d1, d2, d3),
             "mu_I closed form (2,3)");
        auto s34 = rand_sig(3, 4);
        R v1(s34.weights[0]), v2(s34.weights[1]), v3(s34.weights[2]);
        R e1(s34.degrees[0]), e2(s34.degrees[1]), e3(s34.degrees[2]), e4(s34.degrees[3]);
        c.is(mu_image(db(), s34).value == cf34_muI(v1, v2, v3, e1, e2, e3, e4),
             "mu_I closed form (3,4)");
        c.is(mu_image2(db(), s34).value == cf34_muI2(v1, v2, v3, e1, e2, e3, e4),
             "mu_I2 closed form (3,4)");
    }
}

void criterion5(Checker& c) {
    c.is(mu_discriminant(db(), GermSignature({1, 1, 1}, {2, 2, 1})).value == R(1),
         "(1,1,1)->(2,2,1) mu_Delta = 1");
    c.is(mu_discriminant(db(), GermSignature({2, 9, 16}, {18, 11, 16})).value == R(183),
         "(2,9,16)->(18,11,16) mu_Delta = 183");
    c.is(mu_discriminant(db(), GermSignature({1, 2}, {3, 2})).value == R(0),
         "stable cusp mu_Delta = 0");
    for (int it = 0; it < 100; ++it) {
        auto s22 = rand_sig(2, 2);
        R w1(s22.weights[0]), w2(s22.weights[1]), d1(s22.degrees[0]), d2(s22.degrees[1]);
        c.is(mu_discriminant(db(), s22).value == cf22_muD(w1, w2, d1, d2),
             "mu_Delta closed form (2,2)");
        auto s33 = rand_sig(3, 3);
        R v1(s33.weights[0]), v2(s33.weights[1]), v3(s33.weights[2]);
        R e1(s33.degrees[0]), e2(s33.degrees[1]), e3(s33.degrees[2]);
        c.is(mu_discriminant(db(), s33).value == cf33_muD(v1, v2, v3, e1, e2, e3),
             "mu_Delta closed form (3,3)");
    }
}

void criterion6(Checker& c) {
    ModelGerm a1 = ak_model(1), a2 = ak_model(2), a3 = ak_model(3);
    ModelGerm i22 = ModelGerm::from_signature(GermSignature({1, 1, 1, 1}, {2, 2, 1, 1}), "I22");

    VarSpace::Ptr cs2 = VarSpace::chern(0, 2);
    Ansatz deg2(cs2, 2, GradedPoly::zero(cs2),
                {{"A", GradedPoly::parse("c1^2", cs2)}, {"B", GradedPoly::parse("c2", cs2)}});
    RestrictionOutcome r2 = assemble_and_solve(
        deg2, {Constraint::series_equality(a2, GradedPoly::parse("2 a^2", a2.space(), 2), {2}),
               Constraint::series_equality(a1, GradedPoly::zero(a1.space(), 2), {2})});
    c.is(r2.solve.kind == SolveKind::Unique &&
             *r2.polynomial == GradedPoly::parse("c1^2 + c2", cs2),
         "degree-2 cusp class = c1^2 + c2");

    VarSpace::Ptr cs3 = VarSpace::chern(0, 3);
    Ansatz deg3(cs3, 3, GradedPoly::zero(cs3),
                {{"A", GradedPoly::parse("c1^3", cs3)},
                 {"B", GradedPoly::parse("c1 c2", cs3)},
                 {"C", GradedPoly::parse("c3", cs3)}});
    RestrictionOutcome r3 = assemble_and_solve(
        deg3,
        {Constraint::series_equality(a3, inverse_normal_class(a3.space(), {{2}, {3}}, 3), {3}),
         Constraint::series_equality(a2, inverse_normal_class(a2.space(), {{1}, {2}}, 3), {3}),
         Constraint::series_equality(a1, GradedPoly::zero(a1.space(), 3), {3})});
    c.is(r3.solve.kind == SolveKind::Unique &&
             *r3.polynomial == GradedPoly::parse("-2 c1^3 - 3 c1 c2 - c3", cs3),
         "degree-3 closure class = -(2 c1^3 + 3 c1 c2 + c3)");

    VarSpace::Ptr cs4 = VarSpace::chern(0, 4);
    GradedPoly known4 = GradedPoly::parse(
        "c1^2 + c2 - 2 c1^3 - 3 c1 c2 - c3 + 3 c1^4 + 6 c1^2 c2 + 4 c2^2 + c4", cs4);
    Ansatz deg4(cs4, 4, known4, {{"A", GradedPoly::parse("c2^2 - c1 c3", cs4)}});
    RestrictionOutcome r4 =
        assemble_and_solve(deg4, {Constraint::euler_degree(i22, Rational(1))});
    c.is(r4.solve.kind == SolveKind::Unique && r4.solve.values == std::vector<Rational>{-6},
         "degree-4 Euler constraint gives A = -6");
}

void criterion7(Checker& c) {
    ValidationReport report = db().validate_all();
    c.is(!report.items.empty(), "validation suite runs");
    for (const auto& item : report.items)
        c.is(item.pass, item.subject + ": " + item.check);

    // The corank-one closure series collapse to the total quotient class.
    auto sp0 = cs_space(0, 4);
    GradedPoly sum = GradedPoly::zero(sp0, 4);
    for (const std::string& name : {"A1", "A2", "A3", "A4"})
        sum = sum + db().get({name, 0, TpKind::TpsmClosure}).polynomial.embedded(sp0).truncated(4);
    c.is(sum == parse_cs("c1 + c2 + c3 + c4", 0, 4).truncated(4),
         "corank-one closure sum collapses to c1 + c2 + c3 + c4");

    // The image series equals its stored combination of closure series.
    const CoeffVector& combo = db().coeff_vector("alpha_image", 1);
    auto sp1 = cs_space(1, 3);
    GradedPoly assembled = GradedPoly::constant(sp1, combo.constant, 3);
    for (const auto& [name, coeff] : combo.terms)
        assembled = assembled +
                    db().get({name, 1, TpKind::TpsmClosure}).polynomial.embedded(sp1).truncated(3) *
                        coeff;
    c.is(assembled ==
             db().get({"alpha_image", 1, TpKind::TpsmAlphaImage}).polynomial.embedded(sp1)
                 .truncated(3),
         "image series equals its closure-series combination through degree 3");

    // Leading term of every closure series is the exact class.
    for (const auto& [key, entry] : db().entries()) {
        if (key.kind != TpKind::TpsmClosure) continue;
        SingularityKey exact{key.name, key.kappa, TpKind::TpSource};
        if (!db().contains(exact)) continue;
        auto space = entry.polynomial.space();
        c.is(entry.polynomial.grade_component(entry.codim) ==
                 db().get(exact).polynomial.embedded(space).truncated(entry.codim)
                     .grade_component(entry.codim),
             "leading term of " + key.str());
    }
}

void criterion8(Checker& c) {
    const auto& alpha_image = db().get({"alpha_image", 1, TpKind::TpsmAlphaImage});
    const auto& target_image = db().get({"target_image", 1, TpKind::TpsmTargetImage});
    c.is(rho(alpha_image.polynomial, 4) ==
             target_image.polynomial.embedded(cs_space(1, 4)).truncated(4),
         "rho carries the image series to the stored target series");
    const auto& alpha_dis = db().get({"alpha_dis", 0, TpKind::TpsmAlphaDis});
    const auto& target_dis = db().get({"target_dis", 0, TpKind::TpsmTargetDis});
    c.is(rho(alpha_dis.polynomial, 3) == target_dis.polynomial.embedded(cs_space(0, 3)),
         "rho carries the discriminant series to the stored target series");

    // Pair residues are s-free for all six tabulated pairs.
    auto t0 = extract_residues(db(), 0, 4, ResidueLevel::FundamentalClass);
    c.is(t0.at({"A1", "A1"}) == parse_cs("-4 c1^2 - 2 c2", 0, 4).truncated(4),
         "pair residue (A1, A1)");
    c.is(t0.at({"A1", "A2"}) == parse_cs("-6 c1^3 - 12 c1 c2 - 6 c3", 0, 4).truncated(4),
         "pair residue (A1, A2)");
    c.is(t0.at({"A2", "A1"}) == parse_cs("-6 c1^3 - 12 c1 c2 - 6 c3", 0, 4).truncated(4),
         "pair residue (A2, A1)");
    auto t1 = extract_residues(db(), 1, 4, ResidueLevel::FundamentalClass);
    c.is(t1.at({"A0", "A0"}) == parse_cs("-c1", 1, 4).truncated(4), "pair residue (A0, A0)");
    c.is(t1.at({"A0", "A1"}) == parse_cs("-2 c1 c2 - 2 c3", 1, 4).truncated(4),
         "pair residue (A0, A1)");
    c.is(t1.at({"A1", "A0"}) == parse_cs("-2 c1 c2 - 2 c3", 1, 4).truncated(4),
         "pair residue (A1, A0)");

    // Exponential generating function vs the recursion on toy residues.
    const int K = 3;
    auto space = cs_space(1, K);
    ResidueTable toy;
    toy.level = ResidueLevel::SegreSM;
    toy.kappa = 1;
    toy.K = K;
    auto put = [&](std::vector<std::string> tuple, const std::string& text) {
        toy.residues.emplace(ResidueTable::canonical(std::move(tuple)),
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

    GradedPoly gf = generating_function(toy, {"X", "Y"}, 3, K);
    auto marker_space = gf.space();
    const std::vector<std::vector<std::string>> tuples = {
        {"X"},      {"Y"},      {"X", "X"},      {"X", "Y"},      {"Y", "Y"},
        {"X", "X", "X"}, {"X", "X", "Y"}, {"X", "Y", "Y"}, {"Y", "Y", "Y"}};
    // The empty tuple contributes the constant term of the exponential.
    GradedPoly expected = GradedPoly::constant(marker_space, 1, *gf.truncation());
    for (const auto& tuple : tuples) {
        std::map<std::string, int> markers;
        for (const auto& t : tuple) ++markers["t_" + t];
        int aut = 1;
        for (const auto& [name, mult] : markers)
            for (int k = 2; k <= mult; ++k) aut *= k;
        expected = expected + multi_recursion(toy, tuple, K).target.embedded(marker_space) *
                                  GradedPoly::monomial(marker_space, markers, R(1, aut));
    }
    c.is(gf == expected.truncated(*gf.truncation()),
         "generating function matches the recursion on tuples up to size 3");
}

void criterion9(Checker& c) {
    // Scale invariance.
    for (long lambda : {2L, 3L, 5L}) {
        for (int it = 0; it < 10; ++it) {
            auto s33 = rand_sig(3, 3, 5, 9);
            c.is(count(s33, "A3") == count(s33.scaled(lambda), "A3"), "scale-invariant #A3");
            c.is(mu_discriminant(db(), s33).value ==
                     mu_discriminant(db(), s33.scaled(lambda)).value,
                 "scale-invariant mu_Delta");
            auto s34 = rand_sig(3, 4, 5, 9);
            c.is(mu_image(db(), s34).value == mu_image(db(), s34.scaled(lambda)).value,
                 "scale-invariant mu_I");
        }
    }
    // Source/target route agreement: count_stable evaluates both the
    // source-side and the dual target-side localization and throws on any
    // mismatch, so a clean pass over random signatures certifies agreement.
    for (int it = 0; it < 50; ++it) {
        auto s33 = rand_sig(3, 3, 5, 9);
        auto r = count_stable(db(), s33, {"A1A2", 0, TpKind::TpSource});
        c.is(r.value == cf33_A1A2(R(s33.weights[0]), R(s33.weights[1]), R(s33.weights[2]),
                                  R(s33.degrees[0]), R(s33.degrees[1]), R(s33.degrees[2])),
             "both counting routes agree with the closed form");
    }
    // Supersymmetry: quotient expansions pass, the surface-map class fails.
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const int D = 3;
            auto spc =
                VarSpace::chern(0, D, {.quotient = false, .with_s = false, .with_target = true});
            auto one = GradedPoly::constant(spc, 1, D);
            GradedPoly csum = one, tsum = one;
            for (int k = 1; k <= std::min(D, m); ++k)
                csum = csum + GradedPoly::variable(spc, "c" + std::to_string(k), D);
            for (int k = 1; k <= std::min(D, n); ++k)
                tsum = tsum + GradedPoly::variable(spc, "c'" + std::to_string(k), D);
            auto quot = tsum * invert_series(csum, D);
            for (int d = 1; d <= D; ++d)
                c.is(supersymmetry_check(quot.grade_component(d).with_truncation(std::nullopt),
                                         m, n),
                     "quotient expansions are supersymmetric");
        }
    }
    c.is(!supersymmetry_check(db().get({"lips", 0, TpKind::TpA}).polynomial, 2, 2),
         "the surface-map class is not supersymmetric");
    // Ring axioms and series inversion.
    auto sp = VarSpace::chern(0, 4, {.quotient = true, .with_s = true});
    for (int it = 0; it < 25; ++it) {
        auto p = rand_poly(sp), q = rand_poly(sp), r = rand_poly(sp);
        c.is((p + q) * r == p * r + q * r, "distributivity");
        c.is(p * q == q * p, "commutativity");
        c.is((p * q) * r == p * (q * r), "associativity");
        auto g = rand_poly(sp).truncated(4);
        auto u = GradedPoly::constant(sp, 1, 4) + g - g.grade_component(0);
        c.is((u * invert_series(u, 4)).truncated(4) ==
                 GradedPoly::constant(sp, 1, 4).truncated(4),
             "series inversion");
    }
}

void criterion10(Checker& c) {
    auto quartic = enriques_invariants(4, 0, 0, 0);
    c.is(quartic.c1_squared == R(0) && quartic.c2 == R(24) && quartic.chi == R(24),
         "smooth quartic invariants (0, 24, 24)");
    bool threw = false;
    try {
        izumiya_marar_real(2, 3, 0);
    } catch (const OddCrosscapCountError&) {
        threw = true;
    }
    c.is(threw, "odd crosscap count is rejected");
    // Cross-consistency: for a smooth surface every singularity class
    // vanishes, so the image Euler characteristic reduces to int c2(TM),
    // which must match the closed-form surface invariants.
    for (long d : {1L, 2L, 3L, 4L, 5L}) {
        auto inv = enriques_invariants(d, 0, 0, 0);
        c.is(chi_image_global(0, inv.c2, 0, 0, 0, 0, 0, 0) == inv.chi,
             "chi_image_global consistent with surface invariants at d=" + std::to_string(d));
    }
}

}  // namespace

int main() {
    int failures = 0;
    failures += run_criterion(1, "stable-point counts for the explicit germs", criterion1);
    failures += run_criterion(2, "counting pipeline matches closed forms on random signatures",
                              criterion2);
    failures += run_criterion(3, "quadruple-point count formula for the weighted family",
                              criterion3);
    failures += run_criterion(4, "image Milnor numbers: families, tables and closed forms",
                              criterion4);
    failures += run_criterion(5, "discriminant Milnor numbers: examples and closed forms",
                              criterion5);
    failures += run_criterion(6, "restriction solver rederives the worked classes end-to-end",
                              criterion6);
    failures += run_criterion(7, "database structural suite", criterion7);
    failures += run_criterion(8, "pushforward suite: target series, residues, recursion",
                              criterion8);
    failures += run_criterion(9, "property suite: scaling, route agreement, algebra axioms",
                              criterion9);
    failures += run_criterion(10, "global Euler-characteristic formulas", criterion10);
    if (failures == 0)
        std::cout << "ACCEPTANCE: all 10 criteria pass\n";
    else
        std::cout << "ACCEPTANCE: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
