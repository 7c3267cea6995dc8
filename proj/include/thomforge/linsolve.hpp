#pragma once

#include <string>
#include <vector>

#include "thomforge/rational.hpp"

namespace thomforge {

// Dense exact linear system A x = b over Rational.
struct LinearSystem {
    std::vector<std::string> unknowns;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    explicit LinearSystem(std::vector<std::string> names) : unknowns(std::move(names)) {}

    void add_row(std::vector<Rational> coeffs, Rational b);
};

enum class SolveKind { Unique, Underdetermined, Inconsistent };

// Result of exact Gaussian elimination.
//  - Unique: values = the solution.
//  - Underdetermined: values = a particular solution (free unknowns set to 0);
//    free_vars lists the free unknown indices; nullspace holds a basis of the
//    homogeneous solution space (one vector per free unknown).
//  - Inconsistent: values/nullspace empty.
struct SolveResult {
    SolveKind kind = SolveKind::Inconsistent;
    int rank = 0;
    std::vector<Rational> values;
    std::vector<int> free_vars;
    std::vector<std::vector<Rational>> nullspace;
};

SolveResult solve_exact(const LinearSystem& sys);

}  // namespace thomforge
