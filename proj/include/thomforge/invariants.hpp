#pragma once

#include <string>
#include <vector>

#include "thomforge/chern.hpp"
#include "thomforge/tpdb.hpp"

namespace thomforge {

// Exact value plus integrality/sign flags. The engine cannot decide
// A-finiteness of the input germ, so instead of refusing it reports the value
// and attaches a structured warning whenever the flags are off.
struct InvariantResult {
    Rational value;
    bool integral = false;     // value is an integer
    bool nonnegative = false;  // value >= 0
    std::vector<std::string> warnings;
};

// Number of isolated multi-singular points of the given type appearing in a
// stable perturbation of a weighted-homogeneous germ with signature `sig`.
// Evaluates both the source-side coefficient (tp / (deg1 * prod w)) and the
// target-side coefficient (target class / prod d) and insists they agree.
// Preconditions: key refers to a tp_source entry, key.kappa == sig.kappa(),
// and the entry's codimension equals the source dimension m.
InvariantResult count_stable(const TpDatabase& db, const GermSignature& sig,
                             const SingularityKey& key);

// Euler characteristic of the image of a stable perturbation (kappa = 1):
// chi = [prod(1 + w_i a) * specialize(image series)]_{a^m} / prod w.
Rational chi_image(const TpDatabase& db, const GermSignature& sig);

// Image Milnor number mu_I = (-1)^m (chi(image) - 1).
InvariantResult mu_image(const TpDatabase& db, const GermSignature& sig);

// Second image Milnor number, driven by the double-point-image series; the
// double-point image has dimension m - 1, so mu_{I2} = (-1)^(m-1) (chi_2 - 1).
InvariantResult mu_image2(const TpDatabase& db, const GermSignature& sig);

// Euler characteristic of the discriminant of a stable perturbation
// (kappa = 0) and the discriminant Milnor number (-1)^{n-1} (chi - 1).
Rational chi_discriminant(const TpDatabase& db, const GermSignature& sig);
InvariantResult mu_discriminant(const TpDatabase& db, const GermSignature& sig);

// Euler characteristic of the image of a stable map from a closed complex
// surface to a 3-fold, from eight intersection numbers on the source:
//   (1/6)(3 int_c1TM_c1 + 6 int_c2TM - 3 int_c1TM_s0
//         - int_c1c1 - int_c2 - 2 int_c1s0 + int_s0s0 + 2 int_s1).
Rational chi_image_global(const Rational& int_c1TM_c1, const Rational& int_c2TM,
                          const Rational& int_c1TM_s0, const Rational& int_c1c1,
                          const Rational& int_c2, const Rational& int_c1s0,
                          const Rational& int_s0s0, const Rational& int_s1);

// Chern numbers and Euler characteristic of the normalization X of a degree-d
// surface in P^3 whose singular locus is a double curve of degree delta with
// C pinch points and T triple points.
struct EnriquesInvariants {
    Rational c1_squared;  // int_X c_1(TX)^2
    Rational c2;          // int_X c_2(TX)
    Rational chi;         // topological Euler characteristic of X
};
EnriquesInvariants enriques_invariants(long d, long delta, long C, long T);

// Euler characteristic of the image of a stable map from a closed real
// surface to 3-space: chi(M) + C/2 + T, where C counts crosscaps (must be
// even) and T triple points. Throws OddCrosscapCountError.
long izumiya_marar_real(long chi_M, long C, long T);

}  // namespace thomforge
