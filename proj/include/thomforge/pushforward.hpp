#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thomforge/poly.hpp"
#include "thomforge/tpdb.hpp"

namespace thomforge {

// Formal Gysin pushforward on the (c, s) ring: linear over the s-subring,
// sends c^J * prod s_I to s_J * prod s_I (and the c-free monomial to
// s_0 * prod s_I). Every term's degree shifts by the space's kappa. The result
// lives in the standard (c, s) space of max degree K and is truncated at K
// (or at the input's truncation + kappa, when smaller).
GradedPoly formal_pushforward(const GradedPoly& p, int K);

// rho(p) = pushforward of (1 + c_1 + c_2 + ...)^{-1} * p, the operator
// carrying source Segre-MacPherson data to the target.
GradedPoly rho(const GradedPoly& p, int K);

// Target-side class of an exact polynomial: (1/deg1) * pushforward.
GradedPoly target_tp(const TpEntry& entry, int K);

// Which classes feed the residue recursion: exact polynomials with plain
// pushforward cross terms, or Segre-MacPherson series with rho cross terms.
enum class ResidueLevel { FundamentalClass, SegreSM };

// Normalization for tuples of size >= 3 whose class carries a 1/|Aut| factor:
// AutWeighted multiplies the stored class by the symmetry count of the tail
// before running the recursion; PlainAlpha uses the class as stored.
enum class TupleConvention { PlainAlpha, AutWeighted };

// Residual polynomials R per tuple of mono-type names. Keys are canonical:
// first entry fixed, remaining entries sorted.
struct ResidueTable {
    ResidueLevel level = ResidueLevel::FundamentalClass;
    int kappa = 0;
    int K = 0;
    std::map<std::vector<std::string>, GradedPoly> residues;

    static std::vector<std::string> canonical(std::vector<std::string> tuple);

    bool contains(const std::vector<std::string>& tuple) const;
    const GradedPoly& at(const std::vector<std::string>& tuple) const;
    // Lookup ignoring which entry is first (for blocks with no distinguished
    // element); throws PreconditionError when no ordering is present.
    const GradedPoly& at_any_order(const std::vector<std::string>& types) const;
};

// Solves the recursion for the residual polynomial of every tuple-named
// database entry at the given level and kappa, shortest tuples first. The
// type "A0" (regular points) always has residue 1. Tuples of size >= 3 are
// skipped unless a convention is supplied. Throws ResidueNotSFreeError when a
// solved residue retains s-classes (a data error or a convention mismatch; in
// particular, a closure series that differs from the tuple constructible
// function on deeper strata is surfaced this way, never absorbed). A non-empty
// only_names list restricts extraction to those entry names.
ResidueTable extract_residues(const TpDatabase& db, int kappa, int K, ResidueLevel level,
                              std::optional<TupleConvention> triple_convention = std::nullopt,
                              const std::vector<std::string>& only_names = {});

struct RecursionResult {
    GradedPoly source;  // class on the source space (block of eta_1 unpushed)
    GradedPoly target;  // class on the target space (every block pushed)
};

// Evaluates the set-partition recursion over the table's residues: the source
// class sums, over partitions of the tuple, the product of residues with
// every block except eta_1's pushed forward; the target class pushes all.
RecursionResult multi_recursion(const ResidueTable& table, const std::vector<std::string>& tuple,
                                int K);

// Exponential generating function over marker variables t_<type>: the
// coefficient of t^eta / |Aut(eta)| is the target class of the tuple eta.
// Tuples are bounded by max_tuple_size.
GradedPoly generating_function(const ResidueTable& table, const std::vector<std::string>& mono_types,
                               int max_tuple_size, int K);

}  // namespace thomforge
