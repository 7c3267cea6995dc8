#include "thomforge/linsolve.hpp"

#include "thomforge/errors.hpp"

namespace thomforge {

void LinearSystem::add_row(std::vector<Rational> coeffs, Rational b) {
    if (coeffs.size() != unknowns.size()) throw PreconditionError("row width does not match unknown count");
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(b));
}

SolveResult solve_exact(const LinearSystem& sys) {
    const std::size_t n = sys.unknowns.size();
    const std::size_t m = sys.rows.size();
    // Augmented working copy.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = sys.rows[i][j];
        a[i][n] = sys.rhs[i];
    }

    std::vector<int> pivot_col;  // pivot column of each eliminated row
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && a[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }

    SolveResult res;
    res.rank = static_cast<int>(row);
    for (std::size_t i = row; i < m; ++i)
        if (!a[i][n].is_zero()) {
            res.kind = SolveKind::Inconsistent;
            return res;
        }

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    res.values.assign(n, Rational(0));
    for (std::size_t r = 0; r < row; ++r) res.values[static_cast<std::size_t>(pivot_col[r])] = a[r][n];

    if (static_cast<std::size_t>(res.rank) == n) {
        res.kind = SolveKind::Unique;
        return res;
    }

    res.kind = SolveKind::Underdetermined;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        res.free_vars.push_back(static_cast<int>(j));
        std::vector<Rational> basis(n, Rational(0));
        basis[j] = Rational(1);
        for (std::size_t r = 0; r < row; ++r) basis[static_cast<std::size_t>(pivot_col[r])] = -a[r][j];
        res.nullspace.push_back(std::move(basis));
    }
    return res;
}

}  // namespace thomforge
