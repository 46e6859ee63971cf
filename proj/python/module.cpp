#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <cstring>

#include "cpnets/experiments.hpp"
#include "cpnets/metrics.hpp"
#include "cpnets/pde.hpp"

namespace py = pybind11;
using namespace cpnets;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// [T x ...] array -> one frame per leading index.
Trajectory to_trajectory(const Array& a) {
  if (a.ndim() < 2) throw std::invalid_argument("expected an array of frames [T x ...]");
  Trajectory t;
  Shape frame(a.shape() + 1, a.shape() + a.ndim());
  const std::size_t n = shape_size(frame);
  for (py::ssize_t k = 0; k < a.shape(0); ++k)
    t.frames.emplace_back(frame, std::vector<double>(a.data() + k * n, a.data() + (k + 1) * n));
  return t;
}

Array frames_array(const Trajectory& t) {
  if (t.frames.empty()) return Array(std::vector<py::ssize_t>{0});
  std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(t.frames.size())};
  for (auto d : t.frames.front().shape()) shape.push_back(static_cast<py::ssize_t>(d));
  Array out(shape);
  double* dst = out.mutable_data();
  for (const auto& f : t.frames) {
    std::memcpy(dst, f.values().data(), f.size() * sizeof(double));
    dst += f.size();
  }
  return out;
}

py::object metric_value(const Report& r, const std::string& scope, const std::string& metric) {
  const auto* row = r.find(scope, metric);
  if (!row) throw py::key_error(scope + " " + metric);
  if (row->value == "unbounded") return py::float_(INFINITY);
  if (auto v = r.number(scope, metric)) return py::float_(*v);
  return py::str(row->value);
}

Report run(const std::string& id, const std::string& config, const std::map<std::string, std::string>& overrides,
           std::optional<std::uint64_t> seed, const std::string& out, unsigned threads, bool plots,
           const std::string& phase) {
  Settings s = experiment_settings(id);
  if (!config.empty()) s.apply_text(config);
  for (const auto& [k, v] : overrides) s.set(k, v);
  RunOptions o;
  o.out = out;
  o.seed = seed;
  o.threads = threads;
  o.plots = plots;
  o.upto = parse_phase(phase);
  py::gil_scoped_release release;
  return run_experiment(id, s, o);
}

}  // namespace

PYBIND11_MODULE(_cpnets, m) {
  m.doc() = "Conditionally parameterized network experiments";
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Report>(m, "Report")
      .def_readonly("experiment", &Report::experiment)
      .def_readonly("seed", &Report::seed)
      .def_readonly("config", &Report::config)
      .def_readonly("seconds", &Report::seconds)
      .def_readonly("files", &Report::files)
      .def_property_readonly("ok", &Report::ok)
      .def_property_readonly("metrics",
                             [](const Report& r) {
                               py::list out;
                               for (const auto& row : r.metrics) out.append(py::make_tuple(row.scope, row.metric, row.value));
                               return out;
                             })
      .def_property_readonly("stages",
                             [](const Report& r) {
                               py::list out;
                               for (const auto& s : r.stages)
                                 out.append(py::dict(py::arg("name") = s.name, py::arg("ok") = s.ok,
                                                     py::arg("error") = s.error, py::arg("seconds") = s.seconds));
                               return out;
                             })
      .def("get", &metric_value, py::arg("scope"), py::arg("metric"),
           "Metric as float (inf when unbounded) or text such as a divergence flag.")
      .def("metrics_csv", &Report::metrics_csv)
      .def("loss_csv", &Report::loss_csv);

  m.def("experiments", [] {
    py::list out;
    for (const auto& e : list_experiments()) out.append(py::make_tuple(e.id, e.summary));
    return out;
  });
  m.def("default_config", [](const std::string& id) { return experiment_settings(id).ini(); }, py::arg("id"));
  m.def("run", &run, py::arg("id"), py::arg("config") = "", py::arg("set") = std::map<std::string, std::string>{},
        py::arg("seed") = py::none(), py::arg("out") = "", py::arg("threads") = 1, py::arg("plots") = false,
        py::arg("phase") = "eval",
        "Runs an experiment. `config` is INI text applied over the defaults, `set` maps section.key to values. "
        "Nothing is written unless `out` is given.");

  m.def(
      "read_trajectory",
      [](const std::filesystem::path& dir) {
        const auto t = read_trajectory(dir);
        py::dict grid(py::arg("dims") = t.grid.dims, py::arg("nx") = t.grid.nx, py::arg("ny") = t.grid.ny,
                      py::arg("dx") = t.grid.dx, py::arg("dy") = t.grid.dy, py::arg("dt") = t.grid.dt);
        return py::dict(py::arg("frames") = frames_array(t), py::arg("channels") = t.channels,
                        py::arg("params") = t.params, py::arg("seed") = t.seed, py::arg("kind") = t.kind,
                        py::arg("grid") = grid, py::arg("diverged_at") = t.diverged_at);
      },
      py::arg("path"));

  m.def(
      "mae",
      [](const Array& pred, const Array& truth, const std::string& mode) {
        const auto v = metric_mae(to_trajectory(pred), to_trajectory(truth), parse_mae_mode(mode));
        return v.unbounded ? INFINITY : v.value;
      },
      py::arg("pred"), py::arg("truth"), py::arg("mode") = "avg-steps",
      "MAE over frames [T x ...]; inf when the prediction is unbounded.");
  m.def(
      "rmse_normalized",
      [](const Array& pred, const Array& truth) { return metric_rmse_normalized(to_trajectory(pred), to_trajectory(truth)); },
      py::arg("pred"), py::arg("truth"), "RMSE of truth-standardized channels (last axis), averaged over channels.");
  m.def(
      "energy_spectrum",
      [](const Array& u, double length) {
        if (u.ndim() != 1) throw std::invalid_argument("expected a 1D periodic field");
        const auto e = energy_spectrum_1d(std::vector<double>(u.data(), u.data() + u.size()), length);
        return Array(static_cast<py::ssize_t>(e.size()), e.data());
      },
      py::arg("u"), py::arg("length") = 2.0 * M_PI);
}
