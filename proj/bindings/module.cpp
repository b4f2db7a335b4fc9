#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsbound/bound_engine.hpp"
#include "wsbound/certificate_io.hpp"
#include "wsbound/field_model.hpp"
#include "wsbound/oracle.hpp"
#include "wsbound/semigroup.hpp"
#include "wsbound/t_bound_engine.hpp"

namespace py = pybind11;
using namespace wsbound;

namespace {

py::dict witness_dict(const NegligibilityWitness& w) {
  py::dict out;
  if (std::holds_alternative<NonNegligible>(w)) {
    out["kind"] = "non-negligible";
  } else if (std::holds_alternative<SpaceEquality>(w)) {
    out["kind"] = "space-equality";
  } else if (const auto* d = std::get_if<Decomposition>(&w)) {
    out["kind"] = "decomposition";
    out["lambda"] = d->lambda;
    out["mu"] = d->mu;
    out["monomial"] = d->monomial;
  } else if (const auto* h = std::get_if<HorizonRule>(&w)) {
    out["kind"] = "horizon-rule";
    out["threshold"] = h->threshold;
  }
  return out;
}

HorizonMode mode_from_string(const std::string& mode) {
  if (mode == "corollary") return HorizonMode::corollary;
  if (mode == "proposition") return HorizonMode::proposition;
  throw Error("horizon mode must be 'corollary' or 'proposition'");
}

}  // namespace

PYBIND11_MODULE(_wsbound, m) {
  m.doc() = "Upper bounds on the number of rational places of a function field "
            "from (generalized) Weierstrass semigroup data";

  auto& base_exc = py::register_exception<Error>(m, "WsboundError");
  py::register_exception<ParseError>(m, "ModelParseError", base_exc);
  py::register_exception<ValidationFailure>(m, "ModelValidationError", base_exc);
  py::register_exception<CapExceeded>(m, "CapExceededError", base_exc);
  py::register_exception<InvalidPath>(m, "InvalidPathError", base_exc);
  py::register_exception<HypothesisUnverified>(m, "HypothesisUnverifiedError", base_exc);
  py::register_exception<CertificateMismatch>(m, "CertificateMismatchError", base_exc);

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def_static("from_generators",
                  [](const std::vector<Int>& gens) {
                    return NumericalSemigroup::from_generators(gens);
                  })
      .def("contains", &NumericalSemigroup::contains)
      .def("generators", &NumericalSemigroup::generators)
      .def("multiplicity", &NumericalSemigroup::multiplicity)
      .def("conductor", &NumericalSemigroup::conductor)
      .def("genus", &NumericalSemigroup::genus)
      .def("gaps", &NumericalSemigroup::gaps)
      .def("apery_set",
           [](const NumericalSemigroup& h, Int e) { return h.apery_set(e).elements; })
      .def("shifted_sum_complement", &NumericalSemigroup::shifted_sum_complement)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("__repr__", [](const NumericalSemigroup& h) {
        std::string out = "NumericalSemigroup([";
        for (std::size_t k = 0; k < h.generators().size(); ++k) {
          out += (k ? ", " : "") + std::to_string(h.generators()[k]);
        }
        return out + "])";
      });

  m.def("geil_matsumoto_bound", &geil_matsumoto_bound, py::arg("semigroup"), py::arg("q"));
  m.def("lewittes_bound", &lewittes_bound, py::arg("semigroup"), py::arg("q"));
  m.def("single_point_t_bound", &single_point_t_bound, py::arg("semigroup"), py::arg("q"));
  m.def("hasse_weil_bound", &hasse_weil_bound, py::arg("genus"), py::arg("q"));

  py::class_<CurveModel>(m, "CurveModel")
      .def_readonly("q", &CurveModel::q)
      .def_readonly("genus", &CurveModel::genus)
      .def_readonly("functions", &CurveModel::functions)
      .def_readonly("description", &CurveModel::description)
      .def_property_readonly("places",
                             [](const CurveModel& model) {
                               std::vector<std::string> names;
                               for (const auto& p : model.places) names.push_back(p.name);
                               return names;
                             })
      .def_property_readonly("distinguished",
                             [](const CurveModel& model) {
                               std::vector<std::string> names;
                               for (std::size_t idx : model.distinguished_indices()) {
                                 names.push_back(model.places[idx].name);
                               }
                               return names;
                             })
      .def("restricted_to", &CurveModel::restricted_to)
      .def("to_text", &model_to_text)
      .def("hash", &model_hash);

  m.def("parse_model", &parse_model, py::arg("text"));
  m.def("validate", [](const CurveModel& model) {
    py::list out;
    for (const auto& check : validate(model).checks) {
      py::dict entry;
      entry["name"] = check.name;
      entry["passed"] = check.passed;
      entry["detail"] = check.detail;
      out.append(entry);
    }
    return out;
  });
  m.def("place_semigroup", &place_semigroup, py::arg("model"), py::arg("place"));
  m.def(
      "valuation",
      [](const CurveModel& model, const ExponentVector& e, const std::string& place) {
        return valuation(model, e, place);
      },
      py::arg("model"), py::arg("exponents"), py::arg("place"));
  m.def("h_set_contains", &h_set_contains, py::arg("model"), py::arg("i"), py::arg("place"),
        py::arg("mu"));
  m.def("h_set_witness", &h_set_witness, py::arg("model"), py::arg("i"), py::arg("place"),
        py::arg("mu"));
  m.def("realizes_pole_increment", &realizes_pole_increment, py::arg("model"), py::arg("i"),
        py::arg("place"));
  m.def("monomial_with_exact_pole", &monomial_with_exact_pole, py::arg("model"), py::arg("place"),
        py::arg("pole_order"));

  py::class_<BoundCertificate>(m, "BoundCertificate")
      .def_readonly("model_id", &BoundCertificate::model_id)
      .def_readonly("model_hash", &BoundCertificate::model_hash)
      .def_readonly("path", &BoundCertificate::path)
      .def_readonly("final_direction", &BoundCertificate::final_direction)
      .def_readonly("horizon", &BoundCertificate::horizon)
      .def_readonly("weight", &BoundCertificate::weight)
      .def_readonly("bound", &BoundCertificate::bound)
      .def_property_readonly("deltas", [](const BoundCertificate& cert) {
        std::vector<int> out;
        for (const auto& e : cert.edges) out.push_back(e.delta);
        return out;
      });

  py::class_<TBoundCertificate>(m, "TBoundCertificate")
      .def_readonly("model_id", &TBoundCertificate::model_id)
      .def_readonly("path", &TBoundCertificate::path)
      .def_readonly("final_direction", &TBoundCertificate::final_direction)
      .def_readonly("horizon", &TBoundCertificate::horizon)
      .def_readonly("weight", &TBoundCertificate::weight)
      .def_readonly("q_bound", &TBoundCertificate::q_bound)
      .def_readonly("excluded_count", &TBoundCertificate::excluded_count)
      .def_readonly("total_bound", &TBoundCertificate::total_bound)
      .def_property_readonly("deltas", [](const TBoundCertificate& cert) {
        std::vector<int> out;
        for (const auto& e : cert.edges) out.push_back(e.delta);
        return out;
      });

  m.def(
      "delta",
      [](const CurveModel& model, const DivisorIndex& i, std::size_t j) {
        DeltaResult dr = delta(model, i, j);
        return py::make_tuple(dr.value, witness_dict(dr.witness));
      },
      py::arg("model"), py::arg("i"), py::arg("place"));
  m.def(
      "horizon",
      [](const CurveModel& model, std::size_t j, const std::string& mode) {
        return horizon(model, j, mode_from_string(mode));
      },
      py::arg("model"), py::arg("place"), py::arg("mode") = "corollary");
  m.def("evaluate_path", &evaluate_path, py::arg("model"), py::arg("path"));
  m.def("min_weight_path", &min_weight_path, py::arg("model"), py::arg("max_width"));
  m.def("multipoint_bound", &multipoint_bound, py::arg("model"));
  m.def("default_width_cap", &default_width_cap, py::arg("model"));

  m.def(
      "t_delta",
      [](const CurveModel& model, const DivisorIndex& i, std::size_t j) {
        DeltaResult dr = t_delta(model, i, j);
        return py::make_tuple(dr.value, witness_dict(dr.witness));
      },
      py::arg("model"), py::arg("i"), py::arg("place"));
  m.def(
      "verify_t_hypothesis",
      [](const CurveModel& model, std::size_t j, Int up_to) {
        HypothesisReport report = verify_t_hypothesis(model, j, up_to);
        py::dict out;
        out["place"] = report.place_name;
        out["verified"] = report.verified;
        out["up_to"] = report.up_to;
        out["realized"] = report.realized;
        out["missing"] = report.missing;
        return out;
      },
      py::arg("model"), py::arg("place"), py::arg("up_to"));
  m.def("t_evaluate_path", &t_evaluate_path, py::arg("model"), py::arg("path"),
        py::arg("excluded_count"));
  m.def("t_min_weight_path", &t_min_weight_path, py::arg("model"), py::arg("max_width"),
        py::arg("excluded_count"));
  m.def("t_negligible_degree", &t_negligible_degree, py::arg("q"), py::arg("genus"),
        py::arg("q_count"));

  m.def(
      "certificate_json",
      [](const BoundCertificate& cert, const CurveModel& model) {
        return certificate_to_json(cert, model).dump(2);
      },
      py::arg("certificate"), py::arg("model"));
  m.def(
      "certificate_json",
      [](const TBoundCertificate& cert, const CurveModel& model) {
        return certificate_to_json(cert, model).dump(2);
      },
      py::arg("certificate"), py::arg("model"));
  m.def(
      "verify_certificate",
      [](const std::string& text) {
        VerifySummary summary = verify_certificate_json(nlohmann::json::parse(text));
        py::dict out;
        out["kind"] = summary.kind;
        out["weight"] = summary.weight;
        out["bound"] = summary.bound;
        return out;
      },
      py::arg("certificate_text"));

  m.def("brute_shifted_complement", &oracle::brute_shifted_complement, py::arg("generators"),
        py::arg("e"), py::arg("cap"));
  m.def(
      "brute_min_path",
      [](const CurveModel& model, const std::vector<std::pair<Int, Int>>& window) {
        auto result = oracle::brute_min_path(model, window);
        return py::make_tuple(result.weight, result.path);
      },
      py::arg("model"), py::arg("window"));

  m.attr("__version__") = "0.1.0";
}
