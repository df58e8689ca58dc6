#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gq/checks.hpp"
#include "gq/plancherel.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

gq::Point to_point(const gq::GroupSpec& g, const std::vector<double>& c) {
  if (static_cast<int>(c.size()) != g.dim())
    throw py::value_error(g.name() + " points have " + std::to_string(g.dim()) + " coordinates");
  gq::Point p{};
  std::copy(c.begin(), c.end(), p.begin());
  return p;
}

std::vector<double> from_point(const gq::GroupSpec& g, const gq::Point& p) { return {p.begin(), p.begin() + g.dim()}; }

gq::RunConfig config_from(const std::string& text) { return gq::parse_config(nlohmann::json::parse(text)); }

// one discretization level of a config, with array access
struct PyLevel {
  gq::Level l;

  Eigen::MatrixXd nodes() const {
    const auto& g = *l.model->grid();
    Eigen::MatrixXd out(g.size(), g.dim());
    for (int i = 0; i < g.size(); ++i)
      for (int a = 0; a < g.dim(); ++a) out(i, a) = g.node(i)[a];
    return out;
  }
  gq::SampledFunction wrap(const Eigen::VectorXcd& v) const {
    if (v.size() != l.model->grid()->size()) throw py::value_error("value count does not match the grid");
    return gq::SampledFunction(l.model->grid(), v);
  }
};

}  // namespace

PYBIND11_MODULE(_gq, m) {
  m.doc() = "discretized group quantization";

  m.def("check_names", &gq::check_names);
  m.def(
      "run_check",
      [](const std::string& config, const std::string& check) {
        gq::RunConfig c = config_from(config);
        gq::Report r = gq::run_check(c, check.empty() ? c.check : check);
        return r.to_json().dump();
      },
      "config"_a, "check"_a = "", "report as a JSON string");

  m.def("multiply", [](const std::string& group, const std::vector<double>& x, const std::vector<double>& y) {
    auto g = gq::GroupSpec::parse(group);
    return from_point(g, gq::multiply(g, to_point(g, x), to_point(g, y)));
  });
  m.def("inverse", [](const std::string& group, const std::vector<double>& x) {
    auto g = gq::GroupSpec::parse(group);
    return from_point(g, gq::inverse(g, to_point(g, x)));
  });
  m.def("modular", [](const std::string& group, const std::vector<double>& x) {
    auto g = gq::GroupSpec::parse(group);
    return gq::modular(g, to_point(g, x));
  });

  py::class_<PyLevel>(m, "Level")
      .def(py::init([](const std::string& config, int index) { return PyLevel{gq::make_level(config_from(config), index)}; }),
           "config"_a, "index"_a = 0)
      .def_property_readonly("group", [](const PyLevel& p) { return p.l.model->group().name(); })
      .def_property_readonly("rep_dim", [](const PyLevel& p) { return p.l.model->d(); })
      .def_property_readonly("dual_size", [](const PyLevel& p) { return p.l.model->dual_size(); })
      .def_property_readonly("kappa", [](const PyLevel& p) { return p.l.model->dual().kappa; })
      .def("nodes", &PyLevel::nodes)
      .def("weights", [](const PyLevel& p) { return Eigen::VectorXd(p.l.model->grid()->weights()); })
      .def("tests", [](const PyLevel& p) {
        std::vector<Eigen::VectorXcd> out;
        for (const auto& t : p.l.tests) out.push_back(t.values);
        return out;
      })
      .def("forward", [](const PyLevel& p, const Eigen::VectorXcd& v) { return gq::plancherel_forward(*p.l.model, p.wrap(v)); })
      .def("inverse",
           [](const PyLevel& p, const gq::DualField& F) {
             if (static_cast<int>(F.size()) != p.l.model->dual_size()) throw py::value_error("field size does not match the dual grid");
             return gq::plancherel_inverse_values(*p.l.model, F);
           })
      .def("norm", [](const PyLevel& p, const Eigen::VectorXcd& v) { return gq::norm(p.wrap(v)); })
      .def("dual_norm", [](const PyLevel& p, const gq::DualField& F) { return gq::dual_norm(*p.l.model, F); })
      .def("parseval_residual", [](const PyLevel& p, const Eigen::VectorXcd& v) { return gq::parseval_residual(*p.l.model, p.wrap(v)); });

  py::register_exception<gq::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<gq::UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
}
