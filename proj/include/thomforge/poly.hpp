#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thomforge/rational.hpp"
#include "thomforge/varspace.hpp"

namespace thomforge {

// Sparse multivariate polynomial / truncated graded power series over Rational.
// Terms are kept in graded-lexicographic order (total weighted degree first).
// truncation(): if set to K, the value is only known modulo degree K+1 and every
// stored term has degree <= K. Truncation propagates pessimistically (min)
// through all arithmetic. All values are immutable in spirit: operations return
// new polynomials.
class GradedPoly {
public:
    using Expo = std::vector<int>;

    explicit GradedPoly(VarSpace::Ptr space, std::optional<int> trunc = std::nullopt);

    static GradedPoly zero(VarSpace::Ptr space, std::optional<int> trunc = std::nullopt);
    static GradedPoly constant(VarSpace::Ptr space, const Rational& c,
                               std::optional<int> trunc = std::nullopt);
    static GradedPoly variable(VarSpace::Ptr space, const std::string& name,
                               std::optional<int> trunc = std::nullopt);
    static GradedPoly monomial(VarSpace::Ptr space, const std::map<std::string, int>& factors,
                               const Rational& coeff = Rational(1),
                               std::optional<int> trunc = std::nullopt);

    // Parses the polynomial text grammar:
    //   poly     := ['+'|'-'] term (('+'|'-') term)*
    //   term     := [rational] factor*
    //   factor   := name ['^' int] | '(' poly ')' ['^' int]
    //   rational := int ['/' posint]
    // where name is a variable of `space` (a1, c1, c'1, s[0,1], s[], ...).
    static GradedPoly parse(const std::string& text, VarSpace::Ptr space,
                            std::optional<int> trunc = std::nullopt);

    const VarSpace::Ptr& space() const { return space_; }
    std::optional<int> truncation() const { return trunc_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Lowest/highest total degree among stored terms (nullopt when zero).
    std::optional<int> lowest_degree() const;
    std::optional<int> highest_degree() const;

    // Copy truncated to order K (drops terms of degree > K, records K).
    GradedPoly truncated(int K) const;
    // Copy with the truncation marker replaced (terms are not re-checked).
    GradedPoly with_truncation(std::optional<int> K) const;

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator*(const Rational& c) const;
    GradedPoly operator/(const Rational& c) const;
    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    GradedPoly pow(int e) const;

    // Exact coefficient of the given monomial (0 if absent).
    Rational coefficient_of(const Expo& expo) const;
    Rational coefficient_of(const std::map<std::string, int>& factors) const;
    Rational constant_term() const;

    // Sum of the terms of total degree exactly d. Throws TruncationError when
    // d exceeds the truncation order (the information does not exist).
    GradedPoly grade_component(int d) const;

    // Composition: replaces assigned variables by polynomials (all images in one
    // common space); unassigned variables pass through by name into that space.
    // Each image's lowest degree must be >= the degree of the variable it
    // replaces, so substitution cannot manufacture spurious low-degree terms.
    GradedPoly substitute(const std::map<std::string, GradedPoly>& assignment,
                          std::optional<int> K = std::nullopt) const;

    // Re-expresses the polynomial in a space containing variables of the same
    // names (used to align equal-by-construction spaces or to extend a space).
    GradedPoly embedded(VarSpace::Ptr bigger) const;

    std::string str() const;

private:
    void insert_term(const Expo& expo, const Rational& coeff);  // additive, drops zeros
    friend GradedPoly invert_series(const GradedPoly&, int);

    VarSpace::Ptr space_;
    std::map<Expo, Rational> terms_;
    std::optional<int> trunc_;
};

inline GradedPoly operator*(const Rational& c, const GradedPoly& p) { return p * c; }

// Multiplicative inverse of a series with nonzero constant term, modulo
// degree K+1. Throws on zero constant term or if the series has terms of
// degree 0 beyond the constant (markers aside, inversion would not terminate).
GradedPoly invert_series(const GradedPoly& p, int K);

// exp(p) summed through p^max_power / max_power!. Intended for arguments whose
// terms all carry at least one marker variable, so the expansion is exact once
// max_power reaches the marker-degree bound being tracked by the caller.
GradedPoly exp_series_bounded(const GradedPoly& p, int max_power);

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

}  // namespace thomforge
