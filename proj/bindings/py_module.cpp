// Python bindings for the exact-arithmetic core. Rational values cross the
// boundary as "p/q" strings; the pure-python package converts them to
// fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thomforge/invariants.hpp"
#include "thomforge/restriction.hpp"

namespace py = pybind11;
using namespace thomforge;

namespace {

py::dict result_dict(const InvariantResult& r) {
    py::dict d;
    d["value"] = r.value.str();
    d["integral"] = r.integral;
    d["nonnegative"] = r.nonnegative;
    d["warnings"] = r.warnings;
    return d;
}

py::dict outcome_dict(const RestrictionOutcome& out) {
    py::dict d;
    switch (out.solve.kind) {
        case SolveKind::Unique: d["status"] = "unique"; break;
        case SolveKind::Underdetermined: d["status"] = "underdetermined"; break;
        case SolveKind::Inconsistent: d["status"] = "inconsistent"; break;
    }
    d["report"] = out.report;
    if (out.polynomial) d["polynomial"] = out.polynomial->str();
    return d;
}

}  // namespace

PYBIND11_MODULE(_thomforge, m) {
    m.doc() = "exact enumerative invariants of weighted-homogeneous map-germs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnknownKeyError>(m, "UnknownKeyError", PyExc_KeyError);
    static py::exception<Error> base_exc(m, "EngineError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError&) {
            throw;  // handled by the registration above
        } catch (const UnknownKeyError&) {
            throw;
        } catch (const Error& e) {
            PyErr_SetString(base_exc.ptr(), e.what());
        }
    });

    py::class_<GermSignature>(m, "GermSignature")
        .def(py::init<std::vector<long>, std::vector<long>>(), py::arg("weights"),
             py::arg("degrees"))
        .def_readonly("weights", &GermSignature::weights)
        .def_readonly("degrees", &GermSignature::degrees)
        .def_property_readonly("m", &GermSignature::m)
        .def_property_readonly("n", &GermSignature::n)
        .def_property_readonly("kappa", &GermSignature::kappa)
        .def("__repr__", [](const GermSignature& s) {
            py::list w = py::cast(s.weights), d = py::cast(s.degrees);
            return "GermSignature(weights=" + py::repr(w).cast<std::string>() +
                   ", degrees=" + py::repr(d).cast<std::string>() + ")";
        });

    m.def("infer_signature", [](const std::string& map_text) {
        return infer_weights(parse_monomial_map(map_text));
    }, py::arg("map_text"),
       "Weights and degrees inferred from a polynomial map such as "
       "'x^2+y^2+x*z, x*y, z'.");

    m.def("default_db_path", &TpDatabase::default_path);

    py::class_<TpDatabase>(m, "Database")
        .def_static("load", &TpDatabase::load, py::arg("path"))
        .def_static("load_default", &TpDatabase::load_default)
        .def("count", [](const TpDatabase& db, const GermSignature& sig,
                         const std::string& type) {
            return result_dict(count_stable(db, sig, {type, sig.kappa(), TpKind::TpSource}));
        }, py::arg("signature"), py::arg("type"),
           "Number of stable multi-singular points of the given type.")
        .def("counting_types", [](const TpDatabase& db, const GermSignature& sig) {
            std::vector<std::string> names;
            for (const auto& [key, entry] : db.entries())
                if (key.kind == TpKind::TpSource && key.kappa == sig.kappa() &&
                    entry.codim == sig.m())
                    names.push_back(key.name);
            return names;
        }, py::arg("signature"))
        .def("mu_image", [](const TpDatabase& db, const GermSignature& sig) {
            return result_dict(mu_image(db, sig));
        }, py::arg("signature"))
        .def("mu_image2", [](const TpDatabase& db, const GermSignature& sig) {
            return result_dict(mu_image2(db, sig));
        }, py::arg("signature"))
        .def("mu_discriminant", [](const TpDatabase& db, const GermSignature& sig) {
            return result_dict(mu_discriminant(db, sig));
        }, py::arg("signature"))
        .def("polynomial", [](const TpDatabase& db, const std::string& name, int kappa,
                              const std::string& kind) {
            return db.get({name, kappa, tp_kind_from_string(kind)}).polynomial.str();
        }, py::arg("name"), py::arg("kappa"), py::arg("kind") = "tp_source")
        .def("evaluate", [](const TpDatabase& db, const std::string& name, int kappa,
                            const std::string& kind, const GermSignature& sig) {
            const TpEntry& entry = db.get({name, kappa, tp_kind_from_string(kind)});
            return specialize(entry.polynomial, sig, entry.max_valid_degree).str();
        }, py::arg("name"), py::arg("kappa"), py::arg("kind"), py::arg("signature"))
        .def("validate", [](const TpDatabase& db) {
            py::list items;
            for (const auto& item : db.validate_all().items) {
                py::dict d;
                d["subject"] = item.subject;
                d["check"] = item.check;
                d["pass"] = item.pass;
                d["detail"] = item.detail;
                items.append(d);
            }
            return items;
        });

    m.def("solve_job_text", [](const std::string& text) {
        return outcome_dict(solve_job(parse_job(text)));
    }, py::arg("json_text"), "Runs a restriction-solver job given as JSON text.");
    m.def("solve_job_file", [](const std::string& path) {
        return outcome_dict(solve_job(load_job(path)));
    }, py::arg("path"));

    m.def("enriques_invariants", [](long d, long delta, long C, long T) {
        EnriquesInvariants inv = enriques_invariants(d, delta, C, T);
        py::dict out;
        out["c1_squared"] = inv.c1_squared.str();
        out["c2"] = inv.c2.str();
        out["chi"] = inv.chi.str();
        return out;
    }, py::arg("d"), py::arg("delta"), py::arg("C"), py::arg("T"));
    m.def("izumiya_marar_real", &izumiya_marar_real, py::arg("chi_M"), py::arg("C"),
          py::arg("T"));
    m.def("chi_image_global",
          [](const std::string& c1TM_c1, const std::string& c2TM, const std::string& c1TM_s0,
             const std::string& c1_c1, const std::string& c2, const std::string& c1_s0,
             const std::string& s0_s0, const std::string& s1) {
              return chi_image_global(
                  Rational::from_string(c1TM_c1), Rational::from_string(c2TM),
                  Rational::from_string(c1TM_s0), Rational::from_string(c1_c1),
                  Rational::from_string(c2), Rational::from_string(c1_s0),
                  Rational::from_string(s0_s0), Rational::from_string(s1)).str();
          });
}
