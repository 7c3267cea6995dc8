#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thomforge/poly.hpp"

namespace thomforge {

// Record kinds in the polynomial database. The tp_* kinds are exact
// homogeneous Thom polynomials; the tpsm_* kinds are Segre-MacPherson series
// truncated at the record's max_valid_degree; tpA records are written in
// source/target Chern classes; coefvec records are linear combinations of
// closure classes (constructible-function coefficient vectors).
enum class TpKind {
    TpSource,
    TpTarget,
    TpsmClosure,
    TpsmAlphaImage,
    TpsmAlphaImage2,
    TpsmAlphaDis,
    TpsmTargetImage,
    TpsmTargetDis,
    TpA,
    CoeffVec,
};

std::string to_string(TpKind kind);
TpKind tp_kind_from_string(const std::string& text);

struct SingularityKey {
    std::string name;  // "A2", "A1^3", "A0A1", "I22", "lips", "alpha_image", ...
    int kappa = 0;
    TpKind kind = TpKind::TpSource;

    bool operator<(const SingularityKey& o) const {
        return std::tie(name, kappa, kind) < std::tie(o.name, o.kappa, o.kind);
    }
    bool operator==(const SingularityKey& o) const {
        return name == o.name && kappa == o.kappa && kind == o.kind;
    }
    std::string str() const;
};

struct TpEntry {
    SingularityKey key;
    int codim = 0;            // lowest series degree; total degree for tp_source/tpA
    int deg1 = 1;             // multiplicity of the leading mono-type in the tuple
    int aut = 1;              // order of the tuple's symmetry group
    int max_valid_degree = 0; // highest degree to which the polynomial is correct
    std::string citation;
    // Truncated at max_valid_degree for series kinds.
    GradedPoly polynomial = GradedPoly::zero(VarSpace::torus({}));
};

// Linear combination sum_i coeff_i * [closure of name_i] plus a constant
// multiple of the fundamental class.
struct CoeffVector {
    Rational constant;
    std::vector<std::pair<std::string, Rational>> terms;
};

struct ValidationItem {
    std::string subject;
    std::string check;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool all_pass() const;
};

// Immutable store of the tabulated (higher) Thom polynomials, loaded from a
// content-hashed text data file. Safe for concurrent reads after loading.
class TpDatabase {
public:
    // Resolution order: THOMFORGE_DB environment variable, then the path
    // compiled in at build time.
    static std::string default_path();
    static TpDatabase load(const std::string& path);
    static TpDatabase load_default() { return load(default_path()); }

    const TpEntry& get(const SingularityKey& key) const;  // throws UnknownKeyError
    bool contains(const SingularityKey& key) const;
    const std::map<SingularityKey, TpEntry>& entries() const { return entries_; }

    // Coefficient vector by name ("alpha_image", "alpha_image2", "alpha_dis")
    // and kappa; throws UnknownKeyError.
    const CoeffVector& coeff_vector(const std::string& name, int kappa) const;

    // Runs every structural invariant over the whole database: grading,
    // tpsm leading terms against tp_source, the degree-4 corank-one
    // cancellation at kappa=0, the image-series combination identities at
    // kappa=1, and the stored deg1/aut values against the tuple names.
    ValidationReport validate_all() const;

private:
    TpDatabase() = default;

    std::map<SingularityKey, TpEntry> entries_;
    std::map<std::pair<std::string, int>, CoeffVector> coeff_vectors_;
};

// Parses a tuple name such as "A1^3", "A0A1" or "I22" into (type, count)
// pairs in order of appearance; returns an empty list for non-tuple names.
std::vector<std::pair<std::string, int>> parse_tuple_name(const std::string& name);

// deg1 / |Aut| implied by a tuple name (multiplicity of the leading type in
// the whole tuple; product of factorials of per-type multiplicities).
int tuple_deg1(const std::vector<std::pair<std::string, int>>& tuple);
int tuple_aut(const std::vector<std::pair<std::string, int>>& tuple);

}  // namespace thomforge
