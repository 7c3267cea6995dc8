#include "thomforge/restriction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace thomforge {

namespace {

// Builds a polynomial from a subset of another polynomial's terms.
GradedPoly from_terms(const VarSpace::Ptr& space, const std::map<GradedPoly::Expo, Rational>& terms,
                      std::optional<int> trunc = std::nullopt) {
    GradedPoly out = GradedPoly::zero(space, trunc);
    for (const auto& [expo, coeff] : terms) {
        std::map<std::string, int> factors;
        for (std::size_t i = 0; i < expo.size(); ++i)
            if (expo[i] != 0) factors[space->var(i).name] = expo[i];
        out = out + GradedPoly::monomial(space, factors, coeff, trunc);
    }
    return out;
}

// Exact division of a polynomial by the linear form ell (sum of degree-1
// terms). Throws PreconditionError when the division leaves a remainder.
GradedPoly divide_by_linear_form(const GradedPoly& p, const GradedPoly& ell,
                                 const std::string& context) {
    const VarSpace::Ptr& space = p.space();
    // Pivot: first torus variable with a nonzero coefficient in ell.
    std::size_t pivot = space->size();
    Rational lambda;
    for (const auto& [expo, coeff] : ell.terms()) {
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 1 && i < pivot) {
                pivot = i;
                lambda = coeff;
            }
        }
    }
    if (pivot == space->size())
        throw PreconditionError(context + ": division by a zero linear form");

    GradedPoly q = GradedPoly::zero(space);
    GradedPoly r = p;
    while (!r.is_zero()) {
        int dmax = 0;
        for (const auto& [expo, coeff] : r.terms()) dmax = std::max(dmax, expo[pivot]);
        if (dmax == 0)
            throw PreconditionError(context + ": pushforward of 1 is not a polynomial (" +
                                    p.str() + " is not divisible by " + ell.str() + ")");
        std::map<GradedPoly::Expo, Rational> top;
        for (const auto& [expo, coeff] : r.terms()) {
            if (expo[pivot] == dmax) {
                GradedPoly::Expo e = expo;
                e[pivot] -= 1;
                top[e] = coeff / lambda;
            }
        }
        GradedPoly qstep = from_terms(space, top);
        q = q + qstep;
        r = r - qstep * ell;
    }
    return q;
}

}  // namespace

ModelGerm::ModelGerm(std::vector<std::string> torus_names, std::vector<ModelBranch> brs,
                     int distinguished_branch, std::string lbl)
    : torus(std::move(torus_names)), branches(std::move(brs)),
      distinguished(distinguished_branch), label(std::move(lbl)) {
    if (branches.empty()) throw PreconditionError("model germ needs at least one branch");
    if (distinguished < 0 || distinguished >= static_cast<int>(branches.size()))
        throw PreconditionError("distinguished branch index out of range");
    const int r = torus_rank();
    const int kap = static_cast<int>(branches[0].target_degrees.size()) -
                    static_cast<int>(branches[0].source_weights.size());
    for (const ModelBranch& b : branches) {
        for (const MultiWeight& w : b.source_weights)
            if (static_cast<int>(w.size()) != r)
                throw PreconditionError("source character length does not match the torus rank");
        for (const MultiWeight& d : b.target_degrees)
            if (static_cast<int>(d.size()) != r)
                throw PreconditionError("target character length does not match the torus rank");
        if (static_cast<int>(b.target_degrees.size()) -
                static_cast<int>(b.source_weights.size()) != kap)
            throw PreconditionError("branches disagree on the relative dimension kappa");
    }
}

int ModelGerm::kappa() const {
    return static_cast<int>(branches[distinguished].target_degrees.size()) -
           static_cast<int>(branches[distinguished].source_weights.size());
}

VarSpace::Ptr ModelGerm::space() const { return VarSpace::torus(torus); }

ModelGerm ModelGerm::from_signature(const GermSignature& sig, std::string label) {
    ModelBranch branch;
    for (long w : sig.weights) branch.source_weights.push_back({w});
    for (long d : sig.degrees) branch.target_degrees.push_back({d});
    return ModelGerm({"a"}, {std::move(branch)}, 0, std::move(label));
}

GradedPoly torus_linear_form(const VarSpace::Ptr& space, const MultiWeight& w) {
    if (w.size() != space->size())
        throw PreconditionError("character length does not match the torus rank");
    GradedPoly out = GradedPoly::zero(space);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0)
            out = out + GradedPoly::variable(space, space->var(i).name) * Rational(w[i]);
    return out;
}

GradedPoly model_quotient_chern(const ModelGerm& model, int branch, int K) {
    if (branch < 0 || branch >= static_cast<int>(model.branches.size()))
        throw PreconditionError("branch index out of range");
    const VarSpace::Ptr sp = model.space();
    const ModelBranch& b = model.branches[branch];
    GradedPoly num = GradedPoly::constant(sp, 1);
    for (const MultiWeight& d : b.target_degrees)
        num = num * (GradedPoly::constant(sp, 1) + torus_linear_form(sp, d));
    GradedPoly den = GradedPoly::constant(sp, 1);
    for (const MultiWeight& w : b.source_weights)
        den = den * (GradedPoly::constant(sp, 1) + torus_linear_form(sp, w));
    return (num.truncated(K) * invert_series(den, K)).truncated(K);
}

GradedPoly model_pushforward_one(const ModelGerm& model, int branch) {
    if (branch < 0 || branch >= static_cast<int>(model.branches.size()))
        throw PreconditionError("branch index out of range");
    const VarSpace::Ptr sp = model.space();
    const ModelBranch& b = model.branches[branch];
    GradedPoly num = GradedPoly::constant(sp, 1);
    for (const MultiWeight& d : b.target_degrees) num = num * torus_linear_form(sp, d);
    GradedPoly out = num;
    const std::string ctx = "model " + (model.label.empty() ? std::string("germ") : model.label);
    for (const MultiWeight& w : b.source_weights)
        out = divide_by_linear_form(out, torus_linear_form(sp, w), ctx);
    return out;
}

GradedPoly model_s_classes(const ModelGerm& model, const std::vector<int>& I, int K) {
    if (model.branches.size() > 1 && model.kappa() < 1)
        throw PreconditionError("multi-germ s-classes need proper branches (kappa >= 1)");
    const VarSpace::Ptr sp = model.space();
    GradedPoly out = GradedPoly::zero(sp, K);
    for (std::size_t b = 0; b < model.branches.size(); ++b) {
        GradedPoly c = model_quotient_chern(model, static_cast<int>(b), K);
        GradedPoly term = model_pushforward_one(model, static_cast<int>(b)).truncated(K);
        for (std::size_t k = 0; k < I.size(); ++k)
            if (I[k] != 0)
                term = term * c.grade_component(static_cast<int>(k) + 1).pow(I[k]);
        out = out + term;
    }
    return out.truncated(K);
}

GradedPoly inverse_normal_class(const VarSpace::Ptr& space, const std::vector<MultiWeight>& nu,
                                int K) {
    if (nu.empty()) throw PreconditionError("inverse normal class needs at least one character");
    GradedPoly top = GradedPoly::constant(space, 1);
    GradedPoly total = GradedPoly::constant(space, 1);
    for (const MultiWeight& v : nu) {
        GradedPoly ell = torus_linear_form(space, v);
        top = top * ell;
        total = total * (GradedPoly::constant(space, 1) + ell);
    }
    return (top.truncated(K) * invert_series(total, K)).truncated(K);
}

GradedPoly union_ssm(const VarSpace::Ptr& space, const std::vector<std::vector<MultiWeight>>& pieces,
                     const std::vector<std::vector<MultiWeight>>& intersections, int K) {
    GradedPoly out = GradedPoly::zero(space, K);
    for (const auto& piece : pieces) out = out + inverse_normal_class(space, piece, K);
    for (const auto& cut : intersections) out = out - inverse_normal_class(space, cut, K);
    return out;
}

GradedPoly evaluate_at_model(const GradedPoly& p, const ModelGerm& model, int K) {
    int keval = K;
    for (const Variable& v : p.space()->vars()) keval = std::max(keval, v.degree);
    const GradedPoly c = model_quotient_chern(model, model.distinguished, keval);
    std::map<std::string, GradedPoly> assignment;
    for (const Variable& v : p.space()->vars()) {
        switch (v.kind) {
            case VarKind::QuotientChern:
                assignment.emplace(v.name, c.grade_component(v.degree));
                break;
            case VarKind::LandweberNovikov:
                assignment.emplace(v.name, model_s_classes(model, v.s_index, keval));
                break;
            default:
                throw PreconditionError("cannot restrict variable " + v.name +
                                        " to a model germ (only c_k and s_I restrict)");
        }
    }
    return p.substitute(assignment, keval).truncated(K);
}

Ansatz::Ansatz(VarSpace::Ptr sp, int deg, GradedPoly known_part,
               std::vector<std::pair<std::string, GradedPoly>> unknowns)
    : space(std::move(sp)), degree(deg), known(std::move(known_part)),
      unknown_terms(std::move(unknowns)) {
    if (*known.space() != *space) throw SpaceMismatchError("ansatz known part space");
    std::set<std::string> seen;
    for (const auto& [name, term] : unknown_terms) {
        if (!seen.insert(name).second)
            throw PreconditionError("duplicate unknown coefficient " + name);
        if (*term.space() != *space) throw SpaceMismatchError("ansatz basis term space");
        if (term.is_zero() || term.lowest_degree() != degree || term.highest_degree() != degree)
            throw PreconditionError("ansatz basis term for " + name +
                                    " is not homogeneous of degree " + std::to_string(degree));
    }
}

Constraint::Constraint(ModelGerm m, Kind k, GradedPoly e)
    : model(std::move(m)), kind(k), expected(std::move(e)) {}

Constraint Constraint::series_equality(ModelGerm model, GradedPoly expected,
                                       std::vector<int> degrees) {
    if (degrees.empty()) throw PreconditionError("series equality needs at least one degree");
    if (*expected.space() != *model.space())
        throw SpaceMismatchError("expected series must live in the model's torus space");
    for (int g : degrees) {
        if (g < 0) throw PreconditionError("negative comparison degree");
        if (expected.truncation() && g > *expected.truncation())
            throw PreconditionError("comparison degree " + std::to_string(g) +
                                    " exceeds the expected series' expansion order");
    }
    Constraint c(std::move(model), Kind::SeriesEquality, std::move(expected));
    c.degrees = std::move(degrees);
    return c;
}

Constraint Constraint::euler_degree(ModelGerm model, Rational chi) {
    GradedPoly zero = GradedPoly::zero(model.space());
    Constraint c(std::move(model), Kind::EulerDegree, std::move(zero));
    c.chi = std::move(chi);
    return c;
}

RestrictionOutcome assemble_and_solve(const Ansatz& ansatz,
                                      const std::vector<Constraint>& constraints) {
    std::vector<std::string> names;
    names.reserve(ansatz.unknown_terms.size());
    for (const auto& [name, term] : ansatz.unknown_terms) names.push_back(name);
    LinearSystem sys(names);

    for (const Constraint& cons : constraints) {
        int need = 0;
        if (cons.kind == Constraint::Kind::SeriesEquality) {
            for (int g : cons.degrees) need = std::max(need, g);
        } else {
            need = static_cast<int>(
                cons.model.branches[cons.model.distinguished].source_weights.size());
        }
        GradedPoly known_eval = evaluate_at_model(ansatz.known, cons.model, need);
        std::vector<GradedPoly> basis_eval;
        basis_eval.reserve(ansatz.unknown_terms.size());
        for (const auto& [name, term] : ansatz.unknown_terms)
            basis_eval.push_back(evaluate_at_model(term, cons.model, need));

        if (cons.kind == Constraint::Kind::EulerDegree) {
            const VarSpace::Ptr sp = cons.model.space();
            const auto& weights = cons.model.branches[cons.model.distinguished].source_weights;
            GradedPoly ce0 = GradedPoly::constant(sp, 1);
            GradedPoly euler = GradedPoly::constant(sp, 1);
            for (const MultiWeight& w : weights) {
                GradedPoly ell = torus_linear_form(sp, w);
                ce0 = ce0 * (GradedPoly::constant(sp, 1) + ell);
                euler = euler * ell;
            }
            known_eval = (ce0.truncated(need) * known_eval).grade_component(need);
            for (GradedPoly& b : basis_eval) b = (ce0.truncated(need) * b).grade_component(need);
            GradedPoly rhs = euler * cons.chi - known_eval;
            std::set<GradedPoly::Expo> support;
            for (const auto& [e, v] : rhs.terms()) support.insert(e);
            for (const GradedPoly& b : basis_eval)
                for (const auto& [e, v] : b.terms()) support.insert(e);
            for (const GradedPoly::Expo& e : support) {
                std::vector<Rational> row;
                row.reserve(basis_eval.size());
                for (const GradedPoly& b : basis_eval) row.push_back(b.coefficient_of(e));
                sys.add_row(std::move(row), rhs.coefficient_of(e));
            }
        } else {
            for (int g : cons.degrees) {
                GradedPoly rhs = cons.expected.grade_component(g) - known_eval.grade_component(g);
                std::vector<GradedPoly> basis_g;
                basis_g.reserve(basis_eval.size());
                for (const GradedPoly& b : basis_eval) basis_g.push_back(b.grade_component(g));
                std::set<GradedPoly::Expo> support;
                for (const auto& [e, v] : rhs.terms()) support.insert(e);
                for (const GradedPoly& b : basis_g)
                    for (const auto& [e, v] : b.terms()) support.insert(e);
                for (const GradedPoly::Expo& e : support) {
                    std::vector<Rational> row;
                    row.reserve(basis_g.size());
                    for (const GradedPoly& b : basis_g) row.push_back(b.coefficient_of(e));
                    sys.add_row(std::move(row), rhs.coefficient_of(e));
                }
            }
        }
    }

    RestrictionOutcome out;
    out.solve = solve_exact(sys);
    std::ostringstream rep;
    switch (out.solve.kind) {
        case SolveKind::Unique: {
            GradedPoly poly = ansatz.known;
            for (std::size_t i = 0; i < ansatz.unknown_terms.size(); ++i)
                poly = poly + ansatz.unknown_terms[i].second * out.solve.values[i];
            out.polynomial = poly;
            rep << "unique solution:";
            for (std::size_t i = 0; i < names.size(); ++i)
                rep << " " << names[i] << "=" << out.solve.values[i].str();
            break;
        }
        case SolveKind::Underdetermined: {
            rep << "underdetermined: rank " << out.solve.rank << " for "
                << names.size() << " unknowns; free:";
            for (int i : out.solve.free_vars) rep << " " << names[i];
            break;
        }
        case SolveKind::Inconsistent:
            rep << "inconsistent: no coefficient assignment satisfies every "
                << "restriction equation (rank " << out.solve.rank << ")";
            break;
    }
    out.report = rep.str();
    return out;
}

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string");
}

std::vector<MultiWeight> characters_from_json(const json& j) {
    std::vector<MultiWeight> out;
    for (const json& row : j) {
        MultiWeight w;
        for (const json& entry : row) w.push_back(entry.get<long>());
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

RestrictionJob parse_job(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("job file is not valid JSON: ") + e.what());
    }
    try {
        const json& ja = j.at("ansatz");
        const int kappa = j.value("kappa", 0);
        const int degree = ja.at("degree").get<int>();
        ChernOpts opts;
        opts.with_s = ja.value("with_s", false);
        VarSpace::Ptr space = VarSpace::chern(kappa, degree, opts);
        GradedPoly known = GradedPoly::parse(ja.value("known", "0"), space);
        std::vector<std::pair<std::string, GradedPoly>> unknowns;
        for (const json& u : ja.at("unknowns"))
            unknowns.emplace_back(u.at("name").get<std::string>(),
                                  GradedPoly::parse(u.at("term").get<std::string>(), space));
        Ansatz ansatz(space, degree, std::move(known), std::move(unknowns));

        std::map<std::string, ModelGerm> models;
        for (const auto& [name, jm] : j.at("models").items()) {
            std::vector<ModelBranch> branches;
            for (const json& jb : jm.at("branches"))
                branches.push_back(ModelBranch{characters_from_json(jb.at("source")),
                                               characters_from_json(jb.at("target"))});
            models.emplace(name, ModelGerm(jm.at("torus").get<std::vector<std::string>>(),
                                           std::move(branches), jm.value("distinguished", 0),
                                           name));
        }

        std::vector<Constraint> constraints;
        for (const json& jc : j.at("constraints")) {
            const std::string model_name = jc.at("model").get<std::string>();
            auto it = models.find(model_name);
            if (it == models.end()) throw ParseError("constraint refers to unknown model " + model_name);
            const std::string kind = jc.at("kind").get<std::string>();
            if (kind == "series") {
                GradedPoly expected =
                    GradedPoly::parse(jc.at("expected").get<std::string>(), it->second.space());
                constraints.push_back(Constraint::series_equality(
                    it->second, std::move(expected), jc.at("degrees").get<std::vector<int>>()));
            } else if (kind == "euler") {
                constraints.push_back(
                    Constraint::euler_degree(it->second, rational_from_json(jc.at("chi"))));
            } else {
                throw ParseError("unknown constraint kind \"" + kind + "\"");
            }
        }
        return RestrictionJob{std::move(ansatz), std::move(constraints)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed job file: ") + e.what());
    }
}

RestrictionJob load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open job file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_job(buf.str());
}

RestrictionOutcome solve_job(const RestrictionJob& job) {
    return assemble_and_solve(job.ansatz, job.constraints);
}

}  // namespace thomforge
