// Command-line front end: germ intake, invariant computation, database
// inspection, restriction-solver jobs and batch mode.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thomforge/invariants.hpp"
#include "thomforge/restriction.hpp"

namespace {

using nlohmann::json;
using namespace thomforge;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitUnknownKey = 4;
constexpr int kExitSolve = 5;

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("'" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

// Germ intake shared by count/milnor: explicit weights/degrees or a monomial
// map whose weights are inferred.
struct GermSpec {
    std::string weights, degrees, map_text;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--weights", weights, "comma-separated source weights");
        cmd->add_option("--degrees", degrees, "comma-separated target degrees");
        cmd->add_option("--map", map_text, "polynomial map components, e.g. \"x^2+y, x*y\"");
    }

    GermSignature resolve() const {
        if (!map_text.empty()) {
            if (!weights.empty() || !degrees.empty())
                throw ParseError("--map excludes --weights/--degrees");
            return infer_weights(parse_monomial_map(map_text));
        }
        if (weights.empty() || degrees.empty())
            throw ParseError("need --weights and --degrees (or --map)");
        return GermSignature(parse_longs(weights), parse_longs(degrees));
    }
};

json germ_json(const GermSignature& sig) {
    return json{{"weights", sig.weights}, {"degrees", sig.degrees}};
}

json result_json(const GermSignature& sig, const std::string& invariant,
                 const InvariantResult& r) {
    return json{{"germ", germ_json(sig)},
                {"invariant", invariant},
                {"value", r.value.str()},
                {"integral", r.integral},
                {"warnings", r.warnings}};
}

void emit_warnings(const InvariantResult& r) {
    for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

const TpDatabase& db() {
    static TpDatabase d = TpDatabase::load_default();
    return d;
}

// Counting types applicable to the germ: stable-singularity classes with the
// germ's kappa whose codimension equals the source dimension.
std::vector<SingularityKey> counting_keys(const GermSignature& sig) {
    std::vector<SingularityKey> keys;
    for (const auto& [key, entry] : db().entries())
        if (key.kind == TpKind::TpSource && key.kappa == sig.kappa() && entry.codim == sig.m())
            keys.push_back(key);
    return keys;
}

InvariantResult milnor_by_kind(const std::string& kind, const GermSignature& sig) {
    if (kind == "image") return mu_image(db(), sig);
    if (kind == "image2") return mu_image2(db(), sig);
    if (kind == "discriminant") return mu_discriminant(db(), sig);
    throw ParseError("--kind must be image, image2 or discriminant");
}

std::string milnor_name(const std::string& kind) {
    if (kind == "image") return "mu_I";
    if (kind == "image2") return "mu_I2";
    return "mu_Delta";
}

int cmd_count(const GermSpec& spec, const std::string& type, bool all, bool as_json) {
    GermSignature sig = spec.resolve();
    if (all != type.empty())
        throw ParseError(all ? "--all excludes --type" : "need --type NAME or --all");
    std::vector<SingularityKey> keys;
    if (all) {
        keys = counting_keys(sig);
    } else {
        keys.push_back({type, sig.kappa(), TpKind::TpSource});
        if (!db().contains(keys.back()))
            throw UnknownKeyError(keys.back().str() + " is not in the database");
    }
    for (const SingularityKey& key : keys) {
        InvariantResult r = count_stable(db(), sig, key);
        emit_warnings(r);
        if (as_json)
            std::cout << result_json(sig, key.name, r).dump() << "\n";
        else if (all)
            std::cout << key.name << " " << r.value.str() << "\n";
        else
            std::cout << r.value.str() << "\n";
    }
    return kExitOk;
}

int cmd_milnor(const GermSpec& spec, const std::string& kind, bool as_json) {
    GermSignature sig = spec.resolve();
    InvariantResult r = milnor_by_kind(kind, sig);
    emit_warnings(r);
    if (as_json)
        std::cout << result_json(sig, milnor_name(kind), r).dump() << "\n";
    else
        std::cout << r.value.str() << "\n";
    return kExitOk;
}

int cmd_tp(const std::string& action, const std::string& name, int kappa,
           const std::string& kind_text, const GermSpec& spec) {
    if (action == "validate") {
        ValidationReport report = db().validate_all();
        for (const auto& item : report.items)
            std::cout << (item.pass ? "pass" : "FAIL") << "  " << item.subject << ": "
                      << item.check << (item.detail.empty() ? "" : "  [" + item.detail + "]")
                      << "\n";
        return report.all_pass() ? kExitOk : 1;
    }
    if (name.empty()) throw ParseError("tp " + action + " needs a singularity key");
    SingularityKey key{name, kappa, tp_kind_from_string(kind_text)};
    const TpEntry& entry = db().get(key);
    if (action == "show") {
        std::cout << entry.polynomial.str() << "\n";
        return kExitOk;
    }
    if (action == "eval") {
        GermSignature sig = spec.resolve();
        if (sig.kappa() != kappa)
            throw PreconditionError("germ has kappa=" + std::to_string(sig.kappa()) +
                                    " but the entry is graded for kappa=" + std::to_string(kappa));
        std::cout << specialize(entry.polynomial, sig, entry.max_valid_degree).str() << "\n";
        return kExitOk;
    }
    throw ParseError("tp action must be show, eval or validate");
}

int cmd_solve(const std::string& path) {
    RestrictionJob job = load_job(path);
    RestrictionOutcome out = solve_job(job);
    if (out.solve.kind == SolveKind::Unique) {
        std::cout << out.polynomial->str() << "\n";
        return kExitOk;
    }
    std::cout << out.report << "\n";
    return kExitSolve;
}

Rational rational_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("intersection file is missing \"" + key + "\"");
    const json& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    throw ParseError("\"" + key + "\" must be an integer or a \"p/q\" string");
}

int cmd_global_chi_image(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open intersection file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("intersection file is not valid JSON: ") + e.what());
    }
    Rational chi = chi_image_global(
        rational_field(j, "c1TM_c1"), rational_field(j, "c2TM"), rational_field(j, "c1TM_s0"),
        rational_field(j, "c1_c1"), rational_field(j, "c2"), rational_field(j, "c1_s0"),
        rational_field(j, "s0_s0"), rational_field(j, "s1"));
    std::cout << chi.str() << "\n";
    return kExitOk;
}

// One batch line: {"op":"count"|"milnor", germ fields, "type"/"kind", ...}.
json run_batch_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        return json{{"error", std::string("not valid JSON: ") + e.what()}};
    }
    try {
        GermSpec spec;
        if (j.contains("map")) {
            spec.map_text = j.at("map").get<std::string>();
        } else {
            std::ostringstream w, d;
            for (long v : j.at("weights").get<std::vector<long>>()) w << v << ",";
            for (long v : j.at("degrees").get<std::vector<long>>()) d << v << ",";
            spec.weights = w.str().substr(0, w.str().size() - 1);
            spec.degrees = d.str().substr(0, d.str().size() - 1);
        }
        GermSignature sig = spec.resolve();
        const std::string op = j.value("op", "count");
        if (op == "count") {
            InvariantResult r = count_stable(db(), sig,
                                             {j.at("type").get<std::string>(), sig.kappa(),
                                              TpKind::TpSource});
            return result_json(sig, j.at("type").get<std::string>(), r);
        }
        if (op == "milnor") {
            const std::string kind = j.at("kind").get<std::string>();
            return result_json(sig, milnor_name(kind), milnor_by_kind(kind, sig));
        }
        return json{{"error", "unknown op \"" + op + "\""}};
    } catch (const json::exception& e) {
        return json{{"error", std::string("malformed job: ") + e.what()}};
    } catch (const Error& e) {
        return json{{"error", e.what()}};
    }
}

int cmd_batch(const std::string& path, int jobs) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open batch file " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    std::vector<json> results(lines.size());
    const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(lines.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++)
            results[i] = run_batch_line(lines[i]);
    };
    if (nthreads <= 1) {
        worker();
    } else {
        db();  // load once before sharing across threads
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const json& r : results) std::cout << r.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumerative invariants of weighted-homogeneous map-germs"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "stable-singularity counts");
    GermSpec count_spec;
    count_spec.add_options(count);
    std::string count_type;
    bool count_all = false, count_json = false;
    count->add_option("--type", count_type, "singularity class, e.g. A3 or A1A2");
    count->add_flag("--all", count_all, "every class applicable to the germ");
    count->add_flag("--json", count_json, "one JSON object per result line");

    // milnor
    auto* milnor = app.add_subcommand("milnor", "image/discriminant Milnor numbers");
    GermSpec milnor_spec;
    milnor_spec.add_options(milnor);
    std::string milnor_kind;
    bool milnor_json = false;
    milnor->add_option("--kind", milnor_kind, "image, image2 or discriminant")->required();
    milnor->add_flag("--json", milnor_json, "JSON output");

    // tp
    auto* tp = app.add_subcommand("tp", "database inspection and evaluation");
    std::string tp_action, tp_name, tp_kind = "tp_source";
    int tp_kappa = 0;
    GermSpec tp_spec;
    tp->add_option("action", tp_action, "show, eval or validate")->required();
    tp->add_option("key", tp_name, "singularity key, e.g. A1A2");
    tp->add_option("--kappa", tp_kappa, "relative dimension n - m");
    tp->add_option("--kind", tp_kind, "record kind (default tp_source)");
    tp_spec.add_options(tp);

    // solve
    auto* solve = app.add_subcommand("solve", "restriction-method solver");
    std::string job_path;
    solve->add_option("--job", job_path, "solver job file (JSON)")->required();

    // global
    auto* global = app.add_subcommand("global", "closed global formulas");
    auto* enriques = global->add_subcommand("enriques", "projective surface invariants");
    long g_d = 0, g_delta = 0, g_C = 0, g_T = 0;
    enriques->add_option("--d", g_d)->required();
    enriques->add_option("--delta", g_delta)->required();
    enriques->add_option("--C", g_C)->required();
    enriques->add_option("--T", g_T)->required();
    auto* izumiya = global->add_subcommand("izumiya-marar", "real surface image Euler characteristic");
    long g_chi = 0, iz_C = 0, iz_T = 0;
    izumiya->add_option("--chi", g_chi)->required();
    izumiya->add_option("--C", iz_C)->required();
    izumiya->add_option("--T", iz_T)->required();
    auto* chi_image_cmd = global->add_subcommand("chi-image", "image Euler characteristic from intersection numbers");
    std::string intersections_path;
    chi_image_cmd->add_option("--intersections", intersections_path, "JSON file")->required();
    global->require_subcommand(1);

    // batch
    auto* batch = app.add_subcommand("batch", "JSONL batch mode");
    std::string batch_path;
    int batch_jobs = 1;
    batch->add_option("--jsonl", batch_path, "job file, one JSON object per line")->required();
    batch->add_option("--jobs", batch_jobs, "max concurrent jobs (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*count) return cmd_count(count_spec, count_type, count_all, count_json);
        if (*milnor) return cmd_milnor(milnor_spec, milnor_kind, milnor_json);
        if (*tp) return cmd_tp(tp_action, tp_name, tp_kappa, tp_kind, tp_spec);
        if (*solve) return cmd_solve(job_path);
        if (*enriques) {
            EnriquesInvariants inv = enriques_invariants(g_d, g_delta, g_C, g_T);
            std::cout << "c1^2=" << inv.c1_squared.str() << " c2=" << inv.c2.str()
                      << " chi=" << inv.chi.str() << "\n";
            return kExitOk;
        }
        if (*izumiya) {
            std::cout << izumiya_marar_real(g_chi, iz_C, iz_T) << "\n";
            return kExitOk;
        }
        if (*chi_image_cmd) return cmd_global_chi_image(intersections_path);
        if (*batch) return cmd_batch(batch_path, batch_jobs);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownKeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownKey;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitParse;
}
