#include "thomforge/chern.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "thomforge/linsolve.hpp"

namespace thomforge {

GermSignature::GermSignature(std::vector<long> w, std::vector<long> d)
    : weights(std::move(w)), degrees(std::move(d)) {
    if (weights.empty() || degrees.empty()) throw PreconditionError("empty weight or degree list");
    for (long x : weights)
        if (x <= 0) throw PreconditionError("non-positive weight");
    for (long x : degrees)
        if (x <= 0) throw PreconditionError("non-positive degree");
    if (kappa() < 0) throw PreconditionError("negative relative dimension (n < m) is out of scope");
}

Rational GermSignature::weight_product() const {
    Rational p(1);
    for (long w : weights) p *= Rational(w);
    return p;
}

Rational GermSignature::degree_product() const {
    Rational p(1);
    for (long d : degrees) p *= Rational(d);
    return p;
}

GermSignature GermSignature::scaled(long lambda) const {
    if (lambda <= 0) throw PreconditionError("non-positive scale factor");
    std::vector<long> w = weights, d = degrees;
    for (long& x : w) x *= lambda;
    for (long& x : d) x *= lambda;
    return GermSignature(std::move(w), std::move(d));
}

GradedPoly quotient_chern(const GermSignature& sig, int K) {
    if (K < 0) throw PreconditionError("negative truncation order");
    auto sp = VarSpace::torus({"a"});
    auto a = GradedPoly::variable(sp, "a", K);
    auto one = GradedPoly::constant(sp, 1, K);
    GradedPoly num = one;
    for (long d : sig.degrees) num = num * (one + a * Rational(d));
    GradedPoly den = one;
    for (long w : sig.weights) den = den * (one + a * Rational(w));
    return num * invert_series(den, K);
}

GradedPoly landweber_novikov(const GermSignature& sig, const std::vector<int>& I, int K) {
    auto sp = VarSpace::torus({"a"});
    const int kappa = sig.kappa();
    GradedPoly s0 = GradedPoly::monomial(sp, {{"a", kappa}}, sig.degree_product() / sig.weight_product(), K);
    if (I.empty()) return s0;
    GradedPoly c = quotient_chern(sig, K);
    GradedPoly out = s0;
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (I[j] < 0) throw PreconditionError("negative s-index entry");
        if (I[j] > 0) out = out * c.grade_component(static_cast<int>(j + 1)).pow(I[j]);
    }
    return out;
}

GradedPoly specialize(const GradedPoly& p, const GermSignature& sig, int K) {
    const auto& sp = p.space();
    if (sp->kappa() != sig.kappa())
        throw PreconditionError("polynomial graded for kappa=" + std::to_string(sp->kappa()) +
                                " but germ has kappa=" + std::to_string(sig.kappa()));
    auto a_sp = VarSpace::torus({"a"});
    GradedPoly qc = quotient_chern(sig, K);
    std::map<std::string, GradedPoly> assign;
    for (std::size_t i = 0; i < sp->size(); ++i) {
        const Variable& v = sp->var(i);
        switch (v.kind) {
            case VarKind::QuotientChern:
                assign.emplace(v.name, qc.grade_component(v.degree));
                break;
            case VarKind::LandweberNovikov:
                assign.emplace(v.name, landweber_novikov(sig, v.s_index, K));
                break;
            default:
                throw PreconditionError("cannot specialize variable " + v.name + " by a germ signature");
        }
    }
    return p.substitute(assign, K);
}

GradedPoly total_chern_of_rep(const std::vector<MultiWeight>& weights, const VarSpace::Ptr& space,
                              std::optional<int> K) {
    GradedPoly out = GradedPoly::constant(space, 1, K);
    for (const auto& w : weights) {
        if (w.size() != space->size()) throw PreconditionError("torus rank does not match weight vector");
        GradedPoly lin = GradedPoly::constant(space, 1, K);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] != 0)
                lin = lin + GradedPoly::variable(space, space->var(j).name, K) * Rational(w[j]);
        out = out * lin;
    }
    return out;
}

namespace {

// Elementary symmetric polynomial e_k of the given torus variables.
GradedPoly elementary_symmetric(const VarSpace::Ptr& space, const std::vector<std::string>& roots, int k) {
    GradedPoly out = GradedPoly::zero(space);
    if (k == 0) return GradedPoly::constant(space, 1);
    if (k > static_cast<int>(roots.size())) return out;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            std::map<std::string, int> mono;
            for (int i : idx) mono[roots[static_cast<std::size_t>(i)]] += 1;
            out = out + GradedPoly::monomial(space, mono);
            return;
        }
        for (int i = start; i < static_cast<int>(roots.size()); ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

// Expands P(c, c') into root variables a_1..a_m, b_1..b_n via c_k = e_k(a),
// c'_k = e_k(b). Source-only variables may also carry the QuotientChern kind
// when the caller treats them as abstract symmetric inputs.
GradedPoly expand_in_roots(const GradedPoly& P, int m, int n, const VarSpace::Ptr& root_sp,
                           const std::vector<std::string>& a_roots, const std::vector<std::string>& b_roots) {
    std::map<std::string, GradedPoly> assign;
    for (std::size_t i = 0; i < P.space()->size(); ++i) {
        const Variable& v = P.space()->var(i);
        switch (v.kind) {
            case VarKind::SourceChern:
            case VarKind::QuotientChern:
                assign.emplace(v.name, elementary_symmetric(root_sp, a_roots, v.degree));
                break;
            case VarKind::TargetChern:
                assign.emplace(v.name, elementary_symmetric(root_sp, b_roots, v.degree));
                break;
            default:
                throw PreconditionError("variable " + v.name + " is not a Chern class");
        }
    }
    return P.substitute(assign);
}

}  // namespace

bool supersymmetry_check(const GradedPoly& P, int m, int n) {
    if (m < 1 || n < 1) throw PreconditionError("supersymmetry check needs m, n >= 1");
    if (m > 6 || n > 6) throw PreconditionError("root expansion bounded to m, n <= 6");
    std::vector<std::string> a_roots, b_roots, all;
    for (int i = 1; i <= m; ++i) a_roots.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n; ++i) b_roots.push_back("b" + std::to_string(i));
    all = a_roots;
    all.insert(all.end(), b_roots.begin(), b_roots.end());
    auto root_sp = VarSpace::torus(all);
    GradedPoly expanded = expand_in_roots(P, m, n, root_sp, a_roots, b_roots);

    // Substitute a_m = b_n = t, keep the other roots.
    std::vector<std::string> reduced(all.begin(), all.end());
    reduced.erase(std::remove(reduced.begin(), reduced.end(), a_roots.back()), reduced.end());
    reduced.erase(std::remove(reduced.begin(), reduced.end(), b_roots.back()), reduced.end());
    reduced.push_back("t");
    auto red_sp = VarSpace::torus(reduced);
    auto t = GradedPoly::variable(red_sp, "t");
    std::map<std::string, GradedPoly> assign{{a_roots.back(), t}, {b_roots.back(), t}};
    GradedPoly sub = expanded.substitute(assign);

    const std::size_t t_idx = red_sp->index_of("t");
    for (const auto& [e, c] : sub.terms())
        if (e[t_idx] != 0) return false;
    return true;
}

namespace {

// All partitions of d as exponent vectors (i_1, ..., i_d) with sum j*i_j = d.
std::vector<std::vector<int>> partitions_of(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int part, int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (part > remaining) return;
        for (int e = 0; e * part <= remaining; ++e) {
            cur[static_cast<std::size_t>(part - 1)] = e;
            rec(part + 1, remaining - e * part);
        }
        cur[static_cast<std::size_t>(part - 1)] = 0;
    };
    if (d == 0) {
        out.push_back({});
        return out;
    }
    rec(1, d);
    return out;
}

}  // namespace

GradedPoly to_quotient_classes(const GradedPoly& P, int m, int n, int K) {
    if (!supersymmetry_check(P, m, n))
        throw NotSupersymmetricError("polynomial cannot be written in quotient Chern classes");
    const int D = std::min(K, P.highest_degree().value_or(0));
    // Work space: source and target Chern classes up to degree D.
    auto cc_sp = VarSpace::chern(0, D, {.quotient = false, .with_s = false, .with_target = true});
    GradedPoly Pe = P.embedded(cc_sp);

    // Quotient-class expansion in (c, c'): (1 + c'_1 + ...) * (1 + c_1 + ...)^{-1},
    // with c_i = 0 for i > m and c'_j = 0 for j > n.
    auto one = GradedPoly::constant(cc_sp, 1, D);
    GradedPoly csum = one, tsum = one;
    for (int k = 1; k <= std::min(D, m); ++k) csum = csum + GradedPoly::variable(cc_sp, "c" + std::to_string(k), D);
    for (int k = 1; k <= std::min(D, n); ++k) tsum = tsum + GradedPoly::variable(cc_sp, "c'" + std::to_string(k), D);
    // Also kill the variables beyond m (resp. n) inside Pe.
    std::map<std::string, GradedPoly> kill;
    for (int k = m + 1; k <= D; ++k) kill.emplace("c" + std::to_string(k), GradedPoly::zero(cc_sp));
    for (int k = n + 1; k <= D; ++k) kill.emplace("c'" + std::to_string(k), GradedPoly::zero(cc_sp));
    if (!kill.empty()) Pe = Pe.substitute(kill);
    GradedPoly quot = tsum * invert_series(csum, D);

    auto out_sp = VarSpace::chern(0, std::max(D, 1));
    GradedPoly result = GradedPoly::constant(out_sp, Pe.constant_term());

    for (int d = 1; d <= D; ++d) {
        GradedPoly target = Pe.grade_component(d);
        auto parts = partitions_of(d);
        // Expansion of each quotient-class monomial in (c, c').
        std::vector<GradedPoly> expansions;
        std::vector<std::string> names;
        for (const auto& lambda : parts) {
            GradedPoly e = GradedPoly::constant(cc_sp, 1, D);
            std::string nm = "q";
            for (std::size_t j = 0; j < lambda.size(); ++j) {
                if (lambda[j] == 0) continue;
                e = e * quot.grade_component(static_cast<int>(j + 1)).pow(lambda[j]);
                nm += "_" + std::to_string(j + 1) + "e" + std::to_string(lambda[j]);
            }
            expansions.push_back(e.grade_component(d));
            names.push_back(nm);
        }
        // Linear system over all (c, c') monomials of degree d that occur.
        std::map<GradedPoly::Expo, std::size_t> rows;
        auto note = [&rows](const GradedPoly& p) {
            for (const auto& [e, c] : p.terms())
                rows.emplace(e, rows.size());
        };
        for (const auto& e : expansions) note(e);
        note(target);
        LinearSystem sys(names);
        for (const auto& [expo, row] : rows) {
            std::vector<Rational> coeffs;
            coeffs.reserve(expansions.size());
            for (const auto& e : expansions) coeffs.push_back(e.coefficient_of(expo));
            sys.add_row(std::move(coeffs), target.coefficient_of(expo));
        }
        auto sol = solve_exact(sys);
        if (sol.kind == SolveKind::Inconsistent)
            throw NotSupersymmetricError("no quotient-class representative at degree " + std::to_string(d));
        // Underdetermined can only happen for tiny (m, n) where quotient-class
        // monomials are dependent; any representative is valid, use the
        // particular solution.
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (sol.values[i].is_zero()) continue;
            std::map<std::string, int> mono;
            for (std::size_t j = 0; j < parts[i].size(); ++j)
                if (parts[i][j] != 0) mono["c" + std::to_string(j + 1)] = parts[i][j];
            result = result + GradedPoly::monomial(out_sp, mono, sol.values[i]);
        }
    }
    return result;
}

// ----------------------------------------------------------------------------
// Monomial maps and weight inference

MonomialMap parse_monomial_map(const std::string& text) {
    MonomialMap map;
    std::map<std::string, std::size_t> var_index;
    auto var_of = [&](const std::string& name) {
        auto it = var_index.find(name);
        if (it != var_index.end()) return it->second;
        const std::size_t idx = map.variables.size();
        map.variables.push_back(name);
        var_index.emplace(name, idx);
        return idx;
    };

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    };
    auto parse_component = [&](std::size_t end) {
        std::vector<std::vector<int>> monomials;
        while (true) {
            skip_ws();
            if (pos >= end) break;
            if (text[pos] == '+' || text[pos] == '-') {
                ++pos;  // sign irrelevant for weight structure
                skip_ws();
            }
            // optional coefficient
            while (pos < end && (std::isdigit(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '/')) ++pos;
            std::map<std::size_t, int> expo;
            bool any_var = false;
            while (true) {
                skip_ws();
                if (pos < end && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                }
                if (pos >= end || std::isalpha(static_cast<unsigned char>(text[pos])) == 0) break;
                std::size_t start = pos;
                ++pos;
                while (pos < end && (std::isalnum(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '_')) ++pos;
                const std::size_t vi = var_of(text.substr(start, pos - start));
                int e = 1;
                skip_ws();
                if (pos < end && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    std::size_t ds = pos;
                    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
                    if (ds == pos) throw ParseError("expected exponent in monomial map");
                    e = std::stoi(text.substr(ds, pos - ds));
                }
                expo[vi] += e;
                any_var = true;
            }
            if (!any_var) throw ParseError("monomial without variables in map component");
            std::vector<int> vec;
            for (const auto& [vi, e] : expo) {
                if (vec.size() <= vi) vec.resize(vi + 1, 0);
                vec[vi] = e;
            }
            monomials.push_back(std::move(vec));
            skip_ws();
            if (pos >= end) break;
            if (text[pos] != '+' && text[pos] != '-')
                throw ParseError("expected '+' or '-' between monomials in map component");
        }
        if (monomials.empty()) throw ParseError("empty component in monomial map");
        map.components.push_back(std::move(monomials));
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        pos = start;
        parse_component(end);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    // Normalize exponent vector lengths.
    for (auto& comp : map.components)
        for (auto& mono : comp) mono.resize(map.variables.size(), 0);
    return map;
}

GermSignature infer_weights(const MonomialMap& map) {
    const std::size_t mvars = map.variables.size();
    if (mvars == 0) throw ParseError("monomial map has no variables");
    LinearSystem sys(map.variables);
    for (const auto& comp : map.components) {
        const auto& base = comp.front();
        for (std::size_t k = 1; k < comp.size(); ++k) {
            std::vector<Rational> row(mvars);
            for (std::size_t j = 0; j < mvars; ++j) row[j] = Rational(comp[k][j] - base[j]);
            sys.add_row(std::move(row), Rational(0));
        }
    }
    auto sol = solve_exact(sys);
    if (sol.kind == SolveKind::Unique) throw NoPositiveSolutionError();  // only w = 0
    if (sol.kind == SolveKind::Inconsistent) throw NoPositiveSolutionError();

    // Scale a rational vector to a primitive integer vector.
    auto to_primitive = [](const std::vector<Rational>& v) {
        mpz_class lcm_den(1);
        for (const auto& r : v) {
            mpz_class den = r.raw().get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
            lcm_den = lcm_den / g * den;
        }
        std::vector<mpz_class> ints;
        ints.reserve(v.size());
        for (const auto& r : v) ints.push_back(r.raw().get_num() * (lcm_den / r.raw().get_den()));
        mpz_class g(0);
        for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        std::vector<long> out;
        out.reserve(ints.size());
        for (const auto& z : ints) {
            mpz_class q = (g == 0) ? z : mpz_class(z / g);
            if (!q.fits_slong_p()) throw PreconditionError("weight overflow");
            out.push_back(q.get_si());
        }
        return out;
    };

    if (sol.nullspace.size() > 1) {
        std::vector<std::vector<long>> basis;
        basis.reserve(sol.nullspace.size());
        for (const auto& v : sol.nullspace) basis.push_back(to_primitive(v));
        throw AmbiguousWeightsError(std::move(basis));
    }

    std::vector<long> w = to_primitive(sol.nullspace.front());
    // Orient positively; every entry must be strictly positive.
    bool any_neg = std::any_of(w.begin(), w.end(), [](long x) { return x < 0; });
    if (any_neg)
        for (long& x : w) x = -x;
    for (long x : w)
        if (x <= 0) throw NoPositiveSolutionError();

    std::vector<long> d;
    d.reserve(map.components.size());
    for (const auto& comp : map.components) {
        long deg = 0;
        for (std::size_t j = 0; j < mvars; ++j) deg += comp.front()[j] * w[j];
        if (deg <= 0) throw NoPositiveSolutionError();
        d.push_back(deg);
    }
    return GermSignature(std::move(w), std::move(d));
}

}  // namespace thomforge
