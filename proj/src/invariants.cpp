#include "thomforge/invariants.hpp"

#include "thomforge/pushforward.hpp"

namespace thomforge {

namespace {

InvariantResult finalize(const Rational& value, bool require_nonnegative,
                         const std::string& context) {
    InvariantResult r;
    r.value = value;
    r.integral = value.is_integer();
    r.nonnegative = value.is_nonnegative();
    if (!r.integral || (require_nonnegative && !r.nonnegative)) {
        r.warnings.push_back(context + " is " + value.str() +
                             (require_nonnegative ? ", not a nonnegative integer"
                                                  : ", not an integer") +
                             "; the germ is likely not A-finite, or the type/kappa is wrong");
    }
    return r;
}

// prod_i (1 + w_i a) over the torus space of `model`.
GradedPoly euler_factor(const GermSignature& sig, const VarSpace::Ptr& a_sp, int K) {
    GradedPoly out = GradedPoly::constant(a_sp, 1, K);
    GradedPoly a = GradedPoly::variable(a_sp, "a", K);
    for (long w : sig.weights) out = out * (GradedPoly::constant(a_sp, 1, K) + a * Rational(w));
    return out;
}

// chi of the perturbed locus attached to a localized series entry:
// [prod(1 + w_i a) * specialize(series)]_{a^m} / prod w.
Rational chi_localized(const TpDatabase& db, const GermSignature& sig, const SingularityKey& key) {
    const TpEntry& entry = db.get(key);
    const int m = sig.m();
    if (m > entry.max_valid_degree)
        throw TruncationError("series " + key.str() + " is tabulated through degree " +
                              std::to_string(entry.max_valid_degree) +
                              "; a source of dimension " + std::to_string(m) +
                              " needs degree " + std::to_string(m));
    // Specialize at the full tabulated order: the entry's space contains
    // variables up to that degree, and their images must be expandable.
    GradedPoly series = specialize(entry.polynomial, sig, entry.max_valid_degree);
    GradedPoly product = euler_factor(sig, series.space(), m) * series;
    std::vector<int> expo{m};
    return product.coefficient_of(expo) / sig.weight_product();
}

Rational milnor_sign(int p) { return (p % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

InvariantResult count_stable(const TpDatabase& db, const GermSignature& sig,
                             const SingularityKey& key) {
    const TpEntry& entry = db.get(key);
    if (entry.key.kind != TpKind::TpSource)
        throw PreconditionError("counting requires a tp_source entry, got " +
                                to_string(entry.key.kind));
    if (entry.key.kappa != sig.kappa())
        throw PreconditionError("entry " + key.str() + " is graded for kappa=" +
                                std::to_string(entry.key.kappa) + " but the germ has kappa=" +
                                std::to_string(sig.kappa()));
    const int m = sig.m();
    const int n = sig.n();
    if (entry.codim != m)
        throw PreconditionError("entry " + key.str() + " has codimension " +
                                std::to_string(entry.codim) +
                                "; isolated points require codimension equal to the source dimension " +
                                std::to_string(m));

    GradedPoly src_series = specialize(entry.polynomial, sig, m);
    std::vector<int> em{m};
    Rational source_route =
        src_series.coefficient_of(em) / (Rational(entry.deg1) * sig.weight_product());

    GradedPoly tgt_series = specialize(target_tp(entry, n), sig, n);
    std::vector<int> en{n};
    Rational target_route = tgt_series.coefficient_of(en) / sig.degree_product();

    if (source_route != target_route)
        throw Error("internal error: source and target counting routes disagree for " + key.str() +
                    " (" + source_route.str() + " vs " + target_route.str() + ")");
    return finalize(source_route, /*require_nonnegative=*/true, "count of " + key.name);
}

Rational chi_image(const TpDatabase& db, const GermSignature& sig) {
    if (sig.kappa() != 1)
        throw PreconditionError("image invariants require kappa=1 (n = m+1), got kappa=" +
                                std::to_string(sig.kappa()));
    return chi_localized(db, sig, {"alpha_image", 1, TpKind::TpsmAlphaImage});
}

InvariantResult mu_image(const TpDatabase& db, const GermSignature& sig) {
    Rational chi = chi_image(db, sig);
    return finalize(milnor_sign(sig.m()) * (chi - Rational(1)), false, "image Milnor number");
}

InvariantResult mu_image2(const TpDatabase& db, const GermSignature& sig) {
    if (sig.kappa() != 1)
        throw PreconditionError("image invariants require kappa=1 (n = m+1), got kappa=" +
                                std::to_string(sig.kappa()));
    // The double-point image has dimension m - 1, so its vanishing cycles
    // live in degree m - 1 and the sign is (-1)^(m-1).
    Rational chi2 = chi_localized(db, sig, {"alpha_image2", 1, TpKind::TpsmAlphaImage2});
    return finalize(milnor_sign(sig.m() - 1) * (chi2 - Rational(1)), false,
                    "second image Milnor number");
}

Rational chi_discriminant(const TpDatabase& db, const GermSignature& sig) {
    if (sig.kappa() != 0)
        throw PreconditionError("discriminant invariants require kappa=0 (n = m), got kappa=" +
                                std::to_string(sig.kappa()));
    return chi_localized(db, sig, {"alpha_dis", 0, TpKind::TpsmAlphaDis});
}

InvariantResult mu_discriminant(const TpDatabase& db, const GermSignature& sig) {
    Rational chi = chi_discriminant(db, sig);
    return finalize(milnor_sign(sig.n() - 1) * (chi - Rational(1)), false,
                    "discriminant Milnor number");
}

Rational chi_image_global(const Rational& int_c1TM_c1, const Rational& int_c2TM,
                          const Rational& int_c1TM_s0, const Rational& int_c1c1,
                          const Rational& int_c2, const Rational& int_c1s0,
                          const Rational& int_s0s0, const Rational& int_s1) {
    return (Rational(3) * int_c1TM_c1 + Rational(6) * int_c2TM - Rational(3) * int_c1TM_s0 -
            int_c1c1 - int_c2 - Rational(2) * int_c1s0 + int_s0s0 + Rational(2) * int_s1) /
           Rational(6);
}

EnriquesInvariants enriques_invariants(long d, long delta, long C, long T) {
    if (d < 1 || delta < 0 || C < 0 || T < 0)
        throw PreconditionError("enriques invariants need d >= 1 and delta, C, T >= 0");
    Rational rd(d), rdel(delta), rC(C), rT(T);
    EnriquesInvariants out;
    out.c1_squared = rd * (rd - 4) * (rd - 4) - (Rational(3) * rd - 16) * rdel + Rational(3) * rT - rC;
    out.c2 = rd * (rd * rd - Rational(4) * rd + 6) - (Rational(3) * rd - 8) * rdel +
             Rational(3) * rC - Rational(2) * rT;
    out.chi = rd * (rd * rd - Rational(4) * rd + 6) + Rational(2) * (Rational(2) - rd) * rdel + rT -
              Rational(3, 2) * rC;
    return out;
}

long izumiya_marar_real(long chi_M, long C, long T) {
    if (C < 0 || T < 0) throw PreconditionError("crosscap and triple-point counts must be >= 0");
    if (C % 2 != 0)
        throw OddCrosscapCountError("a closed surface has an even number of crosscaps, got " +
                                    std::to_string(C));
    return chi_M + C / 2 + T;
}

}  // namespace thomforge
