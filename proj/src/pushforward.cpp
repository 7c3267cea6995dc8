#include "thomforge/pushforward.hpp"

#include <algorithm>
#include <functional>

#include "thomforge/errors.hpp"

namespace thomforge {

namespace {

VarSpace::Ptr std_space(int kappa, int K) {
    return VarSpace::chern(kappa, K, {.quotient = true, .with_s = true});
}

GradedPoly total_quotient_chern_series(const VarSpace::Ptr& space, int K) {
    GradedPoly sum = GradedPoly::constant(space, 1, K);
    for (int k = 1; k <= K; ++k) {
        const std::string name = "c" + std::to_string(k);
        if (space->find(name)) sum = sum + GradedPoly::variable(space, name, K);
    }
    return sum;
}

// Flattens a tuple name list: {"A1","A1","A2"} stays; counts per type.
std::map<std::string, int> multiplicities(const std::vector<std::string>& types) {
    std::map<std::string, int> mult;
    for (const auto& t : types) ++mult[t];
    return mult;
}

int factorial(int n) {
    int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

int aut_order(const std::vector<std::string>& types) {
    int aut = 1;
    for (const auto& [type, count] : multiplicities(types)) aut *= factorial(count);
    return aut;
}

// All partitions of {0, .., r-1} into nonempty blocks (each block sorted,
// blocks ordered by smallest element).
std::vector<std::vector<std::vector<int>>> set_partitions(int r) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    std::function<void(int)> rec = [&](int next) {
        if (next == r) {
            out.push_back(current);
            return;
        }
        const std::size_t nblocks = current.size();  // recursion grows `current`
        for (std::size_t b = 0; b < nblocks; ++b) {
            current[b].push_back(next);
            rec(next + 1);
            current[b].pop_back();
        }
        current.push_back({next});
        rec(next + 1);
        current.pop_back();
    };
    rec(0);
    return out;
}

bool is_s_free(const GradedPoly& p) {
    const auto& vars = p.space()->vars();
    for (const auto& [expo, coeff] : p.terms())
        for (std::size_t i = 0; i < expo.size(); ++i)
            if (expo[i] != 0 && vars[i].kind == VarKind::LandweberNovikov) return false;
    return true;
}

}  // namespace

GradedPoly formal_pushforward(const GradedPoly& p, int K) {
    const int kappa = p.space()->kappa();
    auto out_space = std_space(kappa, K);
    const std::optional<int> trunc =
        p.truncation() ? std::min(*p.truncation() + kappa, K) : K;
    GradedPoly out = GradedPoly::zero(out_space, trunc);
    const auto& vars = p.space()->vars();
    for (const auto& [expo, coeff] : p.terms()) {
        std::vector<int> cidx;
        std::map<std::string, int> factors;
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 0) continue;
            const Variable& v = vars[i];
            if (v.kind == VarKind::QuotientChern) {
                if (static_cast<int>(cidx.size()) < v.degree) cidx.resize(v.degree, 0);
                cidx[v.degree - 1] += expo[i];
            } else if (v.kind == VarKind::LandweberNovikov) {
                factors[v.name] += expo[i];
            } else {
                throw PreconditionError("pushforward is defined on the (c, s) ring only; found " +
                                        v.name);
            }
        }
        factors[VarSpace::s_name(cidx)] += 1;
        int degree = 0;
        bool representable = true;
        for (const auto& [name, e] : factors) {
            auto idx = out_space->find(name);
            if (!idx) {
                representable = false;  // s variable beyond K, term degree > K
                break;
            }
            degree += out_space->var(*idx).degree * e;
        }
        if (!representable || degree > *trunc) continue;
        out = out + GradedPoly::monomial(out_space, factors, coeff, trunc);
    }
    return out;
}

GradedPoly rho(const GradedPoly& p, int K) {
    const int kappa = p.space()->kappa();
    auto space = std_space(kappa, std::max(K, 1));
    auto pe = p.embedded(space);
    auto inv = invert_series(total_quotient_chern_series(space, K), K);
    return formal_pushforward(inv * pe, K);
}

GradedPoly target_tp(const TpEntry& entry, int K) {
    if (entry.key.kind != TpKind::TpSource)
        throw PreconditionError("target class requires an exact tp_source entry, got " +
                                to_string(entry.key.kind));
    return formal_pushforward(entry.polynomial, K) / Rational(entry.deg1);
}

std::vector<std::string> ResidueTable::canonical(std::vector<std::string> tuple) {
    if (tuple.size() > 1) std::sort(tuple.begin() + 1, tuple.end());
    return tuple;
}

bool ResidueTable::contains(const std::vector<std::string>& tuple) const {
    return residues.count(canonical(tuple)) != 0;
}

const GradedPoly& ResidueTable::at(const std::vector<std::string>& tuple) const {
    auto it = residues.find(canonical(tuple));
    if (it == residues.end()) {
        std::string label;
        for (const auto& t : tuple) label += (label.empty() ? "" : ",") + t;
        throw PreconditionError("no residual polynomial for tuple (" + label + ")");
    }
    return it->second;
}

const GradedPoly& ResidueTable::at_any_order(const std::vector<std::string>& types) const {
    for (std::size_t i = 0; i < types.size(); ++i) {
        std::vector<std::string> tuple = types;
        std::swap(tuple[0], tuple[i]);
        if (contains(tuple)) return at(tuple);
    }
    return at(types);  // throws with a readable message
}

namespace {

// Pushes a residual polynomial to the target side per the table's level.
GradedPoly push_class(const ResidueTable& table, const GradedPoly& p, int K) {
    return table.level == ResidueLevel::SegreSM ? rho(p, K) : formal_pushforward(p, K);
}

GradedPoly recursion_class(const ResidueTable& table, const std::vector<std::string>& tuple, int K,
                           bool push_first_block, bool skip_single_block = false) {
    auto space = std_space(table.kappa, K);
    const int r = static_cast<int>(tuple.size());
    GradedPoly sum = GradedPoly::zero(space, K);
    for (const auto& partition : set_partitions(r)) {
        if (skip_single_block && partition.size() == 1) continue;
        GradedPoly term = GradedPoly::constant(space, 1, K);
        for (const auto& block : partition) {
            std::vector<std::string> types;
            for (int i : block) types.push_back(tuple[i]);
            const bool has_first = std::find(block.begin(), block.end(), 0) != block.end();
            const GradedPoly& residue = has_first ? table.at(types) : table.at_any_order(types);
            GradedPoly factor = (has_first && !push_first_block)
                                    ? residue.embedded(space)
                                    : push_class(table, residue, K).embedded(space);
            term = term * factor;
        }
        sum = sum + term;
    }
    return sum;
}

}  // namespace

RecursionResult multi_recursion(const ResidueTable& table, const std::vector<std::string>& tuple,
                                int K) {
    if (tuple.empty()) throw PreconditionError("empty tuple");
    return {recursion_class(table, tuple, K, false), recursion_class(table, tuple, K, true)};
}

ResidueTable extract_residues(const TpDatabase& db, int kappa, int K, ResidueLevel level,
                              std::optional<TupleConvention> triple_convention,
                              const std::vector<std::string>& only_names) {
    const TpKind kind =
        level == ResidueLevel::FundamentalClass ? TpKind::TpSource : TpKind::TpsmClosure;
    auto space = std_space(kappa, K);

    struct TupleEntry {
        std::vector<std::string> types;
        const TpEntry* entry;
    };
    std::vector<TupleEntry> tuples;
    bool mentions_regular = false;
    for (const auto& [key, entry] : db.entries()) {
        if (key.kind != kind || key.kappa != kappa) continue;
        if (!only_names.empty() &&
            std::find(only_names.begin(), only_names.end(), key.name) == only_names.end())
            continue;
        auto parsed = parse_tuple_name(key.name);
        if (parsed.empty()) continue;
        std::vector<std::string> types;
        for (const auto& [type, count] : parsed)
            for (int i = 0; i < count; ++i) types.push_back(type);
        for (const auto& t : types)
            if (t == "A0") mentions_regular = true;
        tuples.push_back({std::move(types), &entry});
    }
    std::stable_sort(tuples.begin(), tuples.end(),
                     [](const TupleEntry& a, const TupleEntry& b) {
                         return a.types.size() < b.types.size();
                     });

    ResidueTable table;
    table.level = level;
    table.kappa = kappa;
    table.K = K;
    if (mentions_regular) {
        // Regular points: the class of the whole source space is 1.
        table.residues.emplace(std::vector<std::string>{"A0"}, GradedPoly::constant(space, 1, K));
    }

    for (const auto& [types, entry] : tuples) {
        const int r = static_cast<int>(types.size());
        if (r >= 3 && !triple_convention) continue;
        GradedPoly cls = entry->polynomial.embedded(space).truncated(K);
        if (r >= 3 && *triple_convention == TupleConvention::AutWeighted) {
            std::vector<std::string> tail(types.begin() + 1, types.end());
            cls = cls * Rational(aut_order(tail));
        }
        GradedPoly residue = cls;
        if (r > 1) {
            // Cross terms: every partition with at least two blocks involves
            // only shorter tuples, whose residues are already known.
            residue = cls - recursion_class(table, types, K, false, /*skip_single_block=*/true);
        }
        if (!is_s_free(residue))
            throw ResidueNotSFreeError("residual polynomial of " + entry->key.str() +
                                       " retains s-classes: " + residue.str());
        table.residues.emplace(ResidueTable::canonical(types), std::move(residue));
    }
    return table;
}

GradedPoly generating_function(const ResidueTable& table, const std::vector<std::string>& mono_types,
                               int max_tuple_size, int K) {
    if (max_tuple_size < 1) throw PreconditionError("max tuple size must be >= 1");
    std::vector<std::string> markers;
    for (const auto& t : mono_types) markers.push_back("t_" + t);
    auto space = std_space(table.kappa, K)->with_markers(markers);

    // Multisets of types of size 1..max_tuple_size.
    std::vector<std::vector<std::string>> multisets;
    std::vector<std::string> current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!current.empty()) multisets.push_back(current);
        if (static_cast<int>(current.size()) == max_tuple_size) return;
        for (std::size_t i = from; i < mono_types.size(); ++i) {
            current.push_back(mono_types[i]);
            rec(i);
            current.pop_back();
        }
    };
    rec(0);

    GradedPoly arg = GradedPoly::zero(space, K);
    for (const auto& tuple : multisets) {
        if (!table.contains(tuple)) continue;
        std::map<std::string, int> marker_expo;
        for (const auto& t : tuple) ++marker_expo["t_" + t];
        auto t_mono = GradedPoly::monomial(space, marker_expo, Rational(1), K);
        auto pushed = push_class(table, table.at_any_order(tuple), K).embedded(space);
        arg = arg + pushed * t_mono / Rational(aut_order(tuple));
    }
    return exp_series_bounded(arg, max_tuple_size);
}

}  // namespace thomforge
