#pragma once

#include <string>
#include <vector>

#include "thomforge/poly.hpp"

namespace thomforge {

// Weights and degrees of a weighted-homogeneous map-germ C^m -> C^n.
struct GermSignature {
    std::vector<long> weights;  // w_1..w_m, all positive
    std::vector<long> degrees;  // d_1..d_n, all positive

    GermSignature(std::vector<long> w, std::vector<long> d);

    int m() const { return static_cast<int>(weights.size()); }
    int n() const { return static_cast<int>(degrees.size()); }
    int kappa() const { return n() - m(); }

    Rational weight_product() const;
    Rational degree_product() const;
    GermSignature scaled(long lambda) const;
};

// A character of an r-torus: exponents of the r torus variables.
using MultiWeight = std::vector<long>;

// Total quotient Chern series c(f) = prod(1+d_j a) / prod(1+w_i a) in the
// single torus variable "a", truncated at K. grade_component(i) is c_i(f).
GradedPoly quotient_chern(const GermSignature& sig, int K);

// Landweber-Novikov series: s_0 = (prod d / prod w) a^kappa, s_I = c^I(f) s_0.
GradedPoly landweber_novikov(const GermSignature& sig, const std::vector<int>& I, int K);

// Substitutes c_i -> c_i(f) and s_I -> s_I(f) into a polynomial over the
// quotient-Chern / Landweber-Novikov space with matching kappa.
GradedPoly specialize(const GradedPoly& p, const GermSignature& sig, int K);

// prod_i (1 + <weights_i, a>) over the torus variables of `space`.
GradedPoly total_chern_of_rep(const std::vector<MultiWeight>& weights, const VarSpace::Ptr& space,
                              std::optional<int> K = std::nullopt);

// True iff P (a polynomial in source classes c_k and target classes c'_k,
// interpreted via m source roots and n target roots) is independent of t after
// the substitution a_m = b_n = t of the last roots.
bool supersymmetry_check(const GradedPoly& P, int m, int n);

// Rewrites a supersymmetric P as a polynomial in quotient Chern classes,
// degree by degree, up to degree K. Throws NotSupersymmetricError when no
// rewriting exists.
GradedPoly to_quotient_classes(const GradedPoly& P, int m, int n, int K);

// A monomial map: per component, the list of exponent vectors of its
// monomials. Variable order is the order of first appearance in the text.
struct MonomialMap {
    std::vector<std::string> variables;
    std::vector<std::vector<std::vector<int>>> components;
};

// Parses "x^2+y^2+x*z, x*y, z" style component lists. Coefficients are
// accepted and ignored (only exponents drive weight inference).
MonomialMap parse_monomial_map(const std::string& text);

// Thrown when the weight system is a positive-dimensional affine family.
struct AmbiguousWeightsError : Error {
    std::vector<std::vector<long>> basis;  // basis of the weight solution space
    explicit AmbiguousWeightsError(std::vector<std::vector<long>> b)
        : Error("ambiguous weights: solution space has dimension > 1"), basis(std::move(b)) {}
};

// Thrown when no strictly positive weight vector makes the map homogeneous.
struct NoPositiveSolutionError : Error {
    NoPositiveSolutionError() : Error("map is not weighted homogeneous for any positive weights") {}
};

// Finds the primitive positive integer weight vector making every component
// weighted homogeneous; returns weights plus the resulting degrees.
GermSignature infer_weights(const MonomialMap& map);

}  // namespace thomforge
