#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thomforge/errors.hpp"

namespace thomforge {

// Classification of the variables appearing in the graded rings of the engine.
enum class VarKind {
    Torus,           // localization variables a, b, ... (degree 1)
    SourceChern,     // c_k of the source bundle (degree k)
    TargetChern,     // c'_k of the target bundle (degree k)
    QuotientChern,   // c_k of the virtual quotient bundle (degree k)
    LandweberNovikov,// s_I = pushforward of c^I (degree kappa + sum j*i_j)
    Marker           // formal bookkeeping markers t_eta (degree 0)
};

struct Variable {
    std::string name;
    VarKind kind = VarKind::Torus;
    int degree = 1;
    std::vector<int> s_index;  // only meaningful for LandweberNovikov
};

// Options for the standard characteristic-class spaces.
struct ChernOpts {
    bool quotient = true;      // c_k as quotient classes (else source classes)
    bool with_s = false;       // include every s_I of degree <= max_degree
    bool with_target = false;  // include c'_k up to max_degree
};

// Immutable ordered list of graded variables plus the relative dimension kappa
// used to grade s_I variables. Polynomials refer to a shared VarSpace.
class VarSpace {
public:
    using Ptr = std::shared_ptr<const VarSpace>;

    VarSpace(std::vector<Variable> vars, int kappa);

    int kappa() const { return kappa_; }
    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws SpaceMismatchError

    // Total weighted degree of an exponent vector (length must equal size()).
    int degree_of(const std::vector<int>& expo) const;

    bool operator==(const VarSpace& o) const;
    bool operator!=(const VarSpace& o) const { return !(*this == o); }

    // --- canonical builders -------------------------------------------------

    // Torus variables of degree 1 with the given names.
    static Ptr torus(const std::vector<std::string>& names);

    // c_1..c_K (+ optional c'_k, + optional s_I) graded for the given kappa.
    static Ptr chern(int kappa, int max_degree, ChernOpts opts = ChernOpts());

    // Pure s_I space (all s_I of degree <= max_degree) for the given kappa.
    static Ptr landweber(int kappa, int max_degree);

    // Copy of this space extended by degree-0 marker variables.
    Ptr with_markers(const std::vector<std::string>& marker_names) const;

    // Canonical name of an s variable: "s[]", "s[1]", "s[0,1]", ...
    // (trailing zeros of the index vector are trimmed).
    static std::string s_name(const std::vector<int>& index);
    static int s_degree(const std::vector<int>& index, int kappa);

    // Enumerates all trimmed index vectors I with s_degree(I, kappa) <= max_degree.
    static std::vector<std::vector<int>> s_indices_up_to(int kappa, int max_degree);

private:
    std::vector<Variable> vars_;
    std::map<std::string, std::size_t> by_name_;
    int kappa_ = 0;
};

}  // namespace thomforge
