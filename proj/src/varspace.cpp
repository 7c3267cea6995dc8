#include "thomforge/varspace.hpp"

#include <algorithm>
#include <functional>

namespace thomforge {

VarSpace::VarSpace(std::vector<Variable> vars, int kappa) : vars_(std::move(vars)), kappa_(kappa) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name.empty()) throw PreconditionError("unnamed variable");
        // Markers are degree 0; s_[] at kappa=0 is also degree 0. Everything else
        // must have positive degree for truncation to make sense.
        const bool zero_ok =
            vars_[i].kind == VarKind::Marker || vars_[i].kind == VarKind::LandweberNovikov;
        if (vars_[i].degree < 0 || (vars_[i].degree == 0 && !zero_ok))
            throw PreconditionError("bad degree for variable " + vars_[i].name);
        if (!by_name_.emplace(vars_[i].name, i).second)
            throw PreconditionError("duplicate variable name " + vars_[i].name);
    }
}

std::optional<std::size_t> VarSpace::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::size_t VarSpace::index_of(const std::string& name) const {
    auto idx = find(name);
    if (!idx) throw SpaceMismatchError("no variable named '" + name + "'");
    return *idx;
}

int VarSpace::degree_of(const std::vector<int>& expo) const {
    if (expo.size() != vars_.size()) throw SpaceMismatchError("exponent vector of wrong length");
    int d = 0;
    for (std::size_t i = 0; i < expo.size(); ++i) d += expo[i] * vars_[i].degree;
    return d;
}

bool VarSpace::operator==(const VarSpace& o) const {
    if (kappa_ != o.kappa_ || vars_.size() != o.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const Variable &a = vars_[i], &b = o.vars_[i];
        if (a.name != b.name || a.kind != b.kind || a.degree != b.degree || a.s_index != b.s_index)
            return false;
    }
    return true;
}

VarSpace::Ptr VarSpace::torus(const std::vector<std::string>& names) {
    std::vector<Variable> vars;
    vars.reserve(names.size());
    for (const auto& n : names) vars.push_back({n, VarKind::Torus, 1, {}});
    return std::make_shared<const VarSpace>(std::move(vars), 0);
}

std::string VarSpace::s_name(const std::vector<int>& index) {
    std::vector<int> idx = index;
    while (!idx.empty() && idx.back() == 0) idx.pop_back();
    std::string out = "s[";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx[i]);
    }
    out += ']';
    return out;
}

int VarSpace::s_degree(const std::vector<int>& index, int kappa) {
    int d = kappa;
    for (std::size_t i = 0; i < index.size(); ++i) d += static_cast<int>(i + 1) * index[i];
    return d;
}

std::vector<std::vector<int>> VarSpace::s_indices_up_to(int kappa, int max_degree) {
    std::vector<std::vector<int>> out;
    const int budget = max_degree - kappa;
    if (budget < 0) return out;
    // Enumerate index vectors (i_1, ..., i_k) with sum j*i_j <= budget,
    // trailing zeros trimmed; ordered by weight then lexicographically.
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos > budget) {
            raw.push_back(cur);
            return;
        }
        const int maxe = remaining / pos;
        for (int e = 0; e <= maxe; ++e) {
            cur.push_back(e);
            rec(pos + 1, remaining - e * pos);
            cur.pop_back();
        }
    };
    rec(1, budget);
    for (auto& v : raw) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    std::sort(raw.begin(), raw.end(), [kappa](const std::vector<int>& a, const std::vector<int>& b) {
        const int da = s_degree(a, kappa), db = s_degree(b, kappa);
        if (da != db) return da < db;
        return a < b;
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return raw;
}

VarSpace::Ptr VarSpace::chern(int kappa, int max_degree, ChernOpts opts) {
    std::vector<Variable> vars;
    const VarKind ck = opts.quotient ? VarKind::QuotientChern : VarKind::SourceChern;
    for (int k = 1; k <= max_degree; ++k) vars.push_back({"c" + std::to_string(k), ck, k, {}});
    if (opts.with_target)
        for (int k = 1; k <= max_degree; ++k) vars.push_back({"c'" + std::to_string(k), VarKind::TargetChern, k, {}});
    if (opts.with_s)
        for (const auto& idx : s_indices_up_to(kappa, max_degree))
            vars.push_back({s_name(idx), VarKind::LandweberNovikov, s_degree(idx, kappa), idx});
    return std::make_shared<const VarSpace>(std::move(vars), kappa);
}

VarSpace::Ptr VarSpace::landweber(int kappa, int max_degree) {
    std::vector<Variable> vars;
    for (const auto& idx : s_indices_up_to(kappa, max_degree))
        vars.push_back({s_name(idx), VarKind::LandweberNovikov, s_degree(idx, kappa), idx});
    return std::make_shared<const VarSpace>(std::move(vars), kappa);
}

VarSpace::Ptr VarSpace::with_markers(const std::vector<std::string>& marker_names) const {
    std::vector<Variable> vars = vars_;
    for (const auto& n : marker_names) vars.push_back({n, VarKind::Marker, 0, {}});
    return std::make_shared<const VarSpace>(std::move(vars), kappa_);
}

}  // namespace thomforge
