#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thomforge/chern.hpp"
#include "thomforge/linsolve.hpp"

namespace thomforge {

// One branch of a (multi-)germ model: a torus-equivariant weighted-homogeneous
// germ given by the characters acting on its source and target coordinates.
struct ModelBranch {
    std::vector<MultiWeight> source_weights;
    std::vector<MultiWeight> target_degrees;
};

// A torus-equivariant model singularity: one or more branches mapping to a
// common target, acted on by an r-torus with named degree-1 variables.
// The distinguished branch supplies the quotient Chern classes c_k when a
// candidate polynomial is restricted to the model; s_I classes aggregate the
// pushforwards of every branch.
struct ModelGerm {
    std::vector<std::string> torus;
    std::vector<ModelBranch> branches;
    int distinguished = 0;
    std::string label;

    ModelGerm(std::vector<std::string> torus_names, std::vector<ModelBranch> brs,
              int distinguished_branch = 0, std::string lbl = "");

    int torus_rank() const { return static_cast<int>(torus.size()); }
    int kappa() const;            // shared target-minus-source dimension
    VarSpace::Ptr space() const;  // the torus variable space

    // Convenience for scalar-torus single-branch models ("universal maps").
    static ModelGerm from_signature(const GermSignature& sig, std::string label = "");
};

// Sum of the torus linear forms <w, a> for one character.
GradedPoly torus_linear_form(const VarSpace::Ptr& space, const MultiWeight& w);

// Quotient Chern series of one branch:
// prod(1 + <d_j, a>) * prod(1 + <w_i, a>)^{-1}, truncated at K.
GradedPoly model_quotient_chern(const ModelGerm& model, int branch, int K);

// Equivariant pushforward of 1 along one branch: the exact polynomial
// prod <d_j, a> / prod <w_i, a>. Throws PreconditionError when the ratio is
// not a polynomial (non-proper configuration).
GradedPoly model_pushforward_one(const ModelGerm& model, int branch);

// Landweber-Novikov class of the whole model:
// s_I = sum over branches of c(branch)^I * (pushforward of 1 along branch).
GradedPoly model_s_classes(const ModelGerm& model, const std::vector<int>& I, int K);

// Pushforward to the ambient space of the inverse normal Chern class of a
// smooth locus with normal characters nu:
// (prod <nu_i, a>) * prod(1 + <nu_i, a>)^{-1}, truncated at K.
GradedPoly inverse_normal_class(const VarSpace::Ptr& space, const std::vector<MultiWeight>& nu,
                                int K);

// Inclusion-exclusion of the classes above for a locus that is a union of
// smooth pieces: sum over pieces minus sum over the supplied pairwise
// intersections (each given by its list of normal characters).
GradedPoly union_ssm(const VarSpace::Ptr& space, const std::vector<std::vector<MultiWeight>>& pieces,
                     const std::vector<std::vector<MultiWeight>>& intersections, int K);

// Substitutes c_k -> c_k(distinguished branch) and s_I -> s_I(model) into a
// polynomial over a quotient-Chern / Landweber-Novikov space; the result lives
// in the model's torus space, truncated at K.
GradedPoly evaluate_at_model(const GradedPoly& p, const ModelGerm& model, int K);

// Candidate polynomial with unknown coefficients: known + sum_i x_i * basis_i,
// all over one chern(+s) space; every unknown basis term is homogeneous of the
// stated degree.
struct Ansatz {
    VarSpace::Ptr space;
    int degree = 0;
    GradedPoly known;
    std::vector<std::pair<std::string, GradedPoly>> unknown_terms;

    Ansatz(VarSpace::Ptr sp, int deg, GradedPoly known_part,
           std::vector<std::pair<std::string, GradedPoly>> unknowns);
};

// One restriction equation imposed on the candidate by a model germ.
//  - SeriesEquality: the candidate restricted to the model must agree with the
//    expected torus series in the listed degrees.
//  - EulerDegree: the top-degree part of c(E0) * candidate must equal
//    chi * e(E0), where E0 is the distinguished branch's source bundle.
struct Constraint {
    enum class Kind { SeriesEquality, EulerDegree };

    ModelGerm model;
    Kind kind;
    GradedPoly expected;        // SeriesEquality only
    std::vector<int> degrees;   // SeriesEquality only
    Rational chi;               // EulerDegree only

    static Constraint series_equality(ModelGerm model, GradedPoly expected,
                                      std::vector<int> degrees);
    static Constraint euler_degree(ModelGerm model, Rational chi);

private:
    Constraint(ModelGerm m, Kind k, GradedPoly e);
};

// Result of the linear solve: the exact system outcome, plus (when unique) the
// assembled polynomial known + sum value_i * basis_i.
struct RestrictionOutcome {
    SolveResult solve;
    std::optional<GradedPoly> polynomial;
    std::string report;
};

RestrictionOutcome assemble_and_solve(const Ansatz& ansatz,
                                      const std::vector<Constraint>& constraints);

// Job file interface: JSON with the ansatz (kappa, degree, known text, unknown
// name/term pairs), named models (torus, branches, distinguished) and the
// constraint list (kind "series" with expected text + degrees, or "euler"
// with chi). Weights are nested integer arrays, one character per coordinate.
struct RestrictionJob {
    Ansatz ansatz;
    std::vector<Constraint> constraints;
};

RestrictionJob parse_job(const std::string& json_text);
RestrictionJob load_job(const std::string& path);
RestrictionOutcome solve_job(const RestrictionJob& job);

}  // namespace thomforge
