// Python face of the library: enough of the training/inference/rule surface
// to drive the engine from scripts and notebooks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsetlin/binarize.hpp"
#include "tsetlin/boundary.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/interpret.hpp"
#include "tsetlin/model_store.hpp"
#include "tsetlin/perceptron.hpp"
#include "tsetlin/pipeline.hpp"

namespace py = pybind11;
using namespace tsetlin;

namespace {

RawData make_raw(const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
                 std::vector<std::string> class_names,
                 std::vector<std::string> feature_names) {
    RawData raw;
    raw.rows = rows;
    raw.labels = labels;
    if (rows.empty()) throw InputError("no rows");
    if (labels.size() != rows.size()) throw InputError("row/label count mismatch");

    int max_label = 0;
    for (int l : labels) {
        if (l < 0) throw InputError("labels must be dense non-negative class ids");
        max_label = std::max(max_label, l);
    }
    if (class_names.empty())
        for (int c = 0; c <= max_label; ++c) class_names.push_back(std::to_string(c));
    if (static_cast<int>(class_names.size()) <= max_label)
        throw InputError("label id exceeds the class name list");
    if (feature_names.empty())
        for (std::size_t f = 0; f < rows.front().size(); ++f)
            feature_names.push_back("f" + std::to_string(f));
    raw.class_names = std::move(class_names);
    raw.feature_names = std::move(feature_names);
    return raw;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted Tsetlin machine: training, inference, rules, boundaries";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);

    py::class_<TMConfig>(m, "Config")
        .def(py::init<>())
        .def_readwrite("clauses", &TMConfig::n_clauses)
        .def_readwrite("T", &TMConfig::t_margin)
        .def_readwrite("s", &TMConfig::s)
        .def_readwrite("states_per_action", &TMConfig::states_per_action)
        .def_readwrite("boost_true_positive", &TMConfig::boost_true_positive)
        .def_readwrite("learnable_T", &TMConfig::learnable_t)
        .def_readwrite("tie_to_zero", &TMConfig::tie_to_zero)
        .def_readwrite("seed", &TMConfig::seed)
        .def_readwrite("epochs", &TMConfig::epochs)
        .def_readwrite("initial_weight", &TMConfig::initial_weight);

    py::class_<TMModel>(m, "Model")
        .def_property_readonly("n_classes", &TMModel::n_classes)
        .def_property_readonly("binary", &TMModel::binary)
        .def_property_readonly("class_names",
                               [](const TMModel& m_) { return m_.class_names; })
        .def_property_readonly("feature_names",
                               [](const TMModel& m_) { return m_.feature_names; })
        .def("predict",
             [](const TMModel& m_, const std::vector<double>& row) {
                 const Prediction p = m_.predict_raw(row);
                 return py::make_tuple(p.label, p.votes);
             },
             py::arg("row"), "label and per-machine vote sums for one raw row")
        .def("predict_many",
             [](const TMModel& m_, const std::vector<std::vector<double>>& rows) {
                 std::vector<int> labels;
                 labels.reserve(rows.size());
                 for (const auto& r : rows) labels.push_back(m_.predict_raw(r).label);
                 return labels;
             },
             py::arg("rows"))
        .def("rules",
             [](const TMModel& m_, int top_k) {
                 py::dict out;
                 for (std::size_t c = 0; c < m_.machines.size(); ++c) {
                     const std::string name =
                         m_.binary() ? m_.class_names.at(1) : m_.class_names.at(c);
                     const DnfExpression dnf = class_dnf(m_.machines[c], top_k);
                     out[py::str(name)] =
                         py::make_tuple(render(dnf, m_.bit_names), to_signed_ids(dnf));
                 }
                 return out;
             },
             py::arg("top_k") = 10,
             "per class: (rendered DNF, signed 1-based literal ids per term)")
        .def("boundary",
             [](const TMModel& m_, int fx, int fy, int resolution) {
                 const GridSpec spec = GridSpec::for_model(m_, fx, fy, resolution);
                 std::vector<std::tuple<double, double, int, std::int64_t>> out;
                 for (const GridCell& c : grid_eval(m_, spec))
                     out.emplace_back(c.x, c.y, c.label, c.margin);
                 return out;
             },
             py::arg("feature_x") = 0, py::arg("feature_y") = 1, py::arg("resolution") = 64,
             "(x, y, label, margin) grid rows over two raw features")
        .def("to_json", &model_to_json)
        .def_static("from_json", &model_from_json)
        .def("save", &save_model, py::arg("path"))
        .def_static("load", &load_model, py::arg("path"));

    m.def("train",
          [](const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
             const TMConfig& config, int bits_per_feature, double test_fraction,
             std::vector<std::string> class_names, std::vector<std::string> feature_names) {
              TrainOptions opt;
              opt.config = config;
              opt.bits_per_feature = bits_per_feature;
              opt.test_fraction = test_fraction;
              TrainReport r = train_model(
                  make_raw(rows, labels, std::move(class_names), std::move(feature_names)),
                  opt);
              py::dict report;
              report["train_accuracy"] = r.train_accuracy;
              report["test_accuracy"] = r.has_test ? py::cast(r.test_accuracy) : py::none();
              report["train_size"] = r.train_size;
              report["test_size"] = r.test_size;
              report["warnings"] = r.warnings;
              return py::make_tuple(r.model, report);
          },
          py::arg("rows"), py::arg("labels"), py::arg("config") = TMConfig{},
          py::arg("bits_per_feature") = 4, py::arg("test_fraction") = 0.2,
          py::arg("class_names") = std::vector<std::string>{},
          py::arg("feature_names") = std::vector<std::string>{},
          "train on raw rows with integer class labels; returns (Model, report dict)");

    m.def("perceptron_check_bound",
          [](const std::vector<std::vector<double>>& xs, const std::vector<int>& labels,
             const std::vector<double>& w_star, double gamma) {
              const BoundReport r = check_bound(xs, labels, w_star, gamma);
              py::dict out;
              out["updates"] = r.updates;
              out["bound"] = r.bound;
              out["radius"] = r.radius;
              out["gamma"] = r.gamma;
              out["converged"] = r.converged;
              out["binary_input"] = r.binary_input;
              out["holds"] = r.holds();
              return out;
          },
          py::arg("xs"), py::arg("labels"), py::arg("w_star"), py::arg("gamma"),
          "perceptron mistake bound on certified separable data (labels in {-1, +1})");
}
