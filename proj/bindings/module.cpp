#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdcann/archsearch.hpp"
#include "rdcann/data.hpp"
#include "rdcann/metrics.hpp"
#include "rdcann/model_io.hpp"
#include "rdcann/net.hpp"
#include "rdcann/parametric.hpp"
#include "rdcann/train.hpp"

namespace py = pybind11;
using namespace rdcann;

PYBIND11_MODULE(_rdcann, m) {
    m.doc() = "ANN pipeline for RDC-column product flow rate prediction";

    py::class_<Network>(m, "Network")
        .def_readonly("input_dim", &Network::input_dim)
        .def_readonly("hidden_dim", &Network::hidden_dim)
        .def_readonly("output_dim", &Network::output_dim)
        .def_readwrite("hidden_weights", &Network::hidden_weights)
        .def_readwrite("hidden_biases", &Network::hidden_biases)
        .def_readwrite("output_weights", &Network::output_weights)
        .def_readwrite("output_biases", &Network::output_biases)
        .def("parameter_count", &Network::parameter_count);

    py::class_<Sample>(m, "Sample")
        .def(py::init<>())
        .def_readwrite("sf_ratio", &Sample::sf_ratio)
        .def_readwrite("feed_temp", &Sample::feed_temp)
        .def_readwrite("solvent_temp", &Sample::solvent_temp)
        .def_readwrite("rotation", &Sample::rotation)
        .def_readwrite("product_flow", &Sample::product_flow);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<>())
        .def_readwrite("samples", &Dataset::samples)
        .def_readonly("provenance", &Dataset::provenance)
        .def("__len__", &Dataset::size);

    py::class_<NormalizationSpec>(m, "NormalizationSpec")
        .def_readonly("col_min", &NormalizationSpec::col_min)
        .def_readonly("col_max", &NormalizationSpec::col_max)
        .def_readonly("lo", &NormalizationSpec::lo)
        .def_readonly("hi", &NormalizationSpec::hi)
        .def("normalize_value", &NormalizationSpec::normalize_value)
        .def("denormalize_value", &NormalizationSpec::denormalize_value);

    py::class_<NormalizedData>(m, "NormalizedData")
        .def_readonly("inputs", &NormalizedData::inputs)
        .def_readonly("targets", &NormalizedData::targets);

    py::class_<TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("learning_rate", &TrainConfig::learning_rate)
        .def_readwrite("momentum", &TrainConfig::momentum)
        .def_readwrite("iterations", &TrainConfig::iterations)
        .def_readwrite("seed", &TrainConfig::seed)
        .def_readwrite("shuffle_each_epoch", &TrainConfig::shuffle_each_epoch)
        .def_readwrite("history_stride", &TrainConfig::history_stride);

    py::class_<TrainHistory>(m, "TrainHistory")
        .def_readonly("epochs", &TrainHistory::epochs)
        .def_readonly("mse", &TrainHistory::mse)
        .def("to_csv", &TrainHistory::to_csv);

    py::class_<RelativeErrors>(m, "RelativeErrors")
        .def_readonly("average_pct", &RelativeErrors::average_pct)
        .def_readonly("maximum_pct", &RelativeErrors::maximum_pct);

    py::class_<TrainedModel>(m, "TrainedModel")
        .def(py::init<>())
        .def_readwrite("net", &TrainedModel::net)
        .def_readwrite("norm", &TrainedModel::norm)
        .def("predict", &TrainedModel::predict, py::arg("sf_ratio"), py::arg("feed_temp"),
             py::arg("solvent_temp"), py::arg("rotation"));

    py::class_<CandidateResult>(m, "CandidateResult")
        .def_readonly("hidden_nodes", &CandidateResult::hidden_nodes)
        .def_readonly("train_mse", &CandidateResult::train_mse)
        .def_readonly("val_mse", &CandidateResult::val_mse)
        .def_readonly("val_pct_error", &CandidateResult::val_pct_error)
        .def_readonly("failed", &CandidateResult::failed);

    py::class_<ArchSearchReport>(m, "ArchSearchReport")
        .def_readonly("rows", &ArchSearchReport::rows)
        .def_readonly("selected", &ArchSearchReport::selected)
        .def("to_csv", &ArchSearchReport::to_csv)
        .def("to_table", &ArchSearchReport::to_table);

    py::enum_<SweepVariable>(m, "SweepVariable")
        .value("sf_ratio", SweepVariable::SfRatio)
        .value("feed_temp", SweepVariable::FeedTemp)
        .value("solvent_temp", SweepVariable::SolventTemp)
        .value("rotation", SweepVariable::Rotation);

    py::enum_<Trend>(m, "Trend")
        .value("increasing", Trend::Increasing)
        .value("decreasing", Trend::Decreasing)
        .value("non_monotone", Trend::NonMonotone);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("variable", &SweepSpec::variable)
        .def_readwrite("grid", &SweepSpec::grid)
        .def_readwrite("baseline_sf", &SweepSpec::baseline_sf)
        .def_readwrite("baseline_feed_temp", &SweepSpec::baseline_feed_temp)
        .def_readwrite("baseline_solvent_temp", &SweepSpec::baseline_solvent_temp)
        .def_readwrite("baseline_rotation", &SweepSpec::baseline_rotation);

    py::class_<TrendSummary>(m, "TrendSummary")
        .def_readonly("direction", &TrendSummary::direction)
        .def_readonly("violation_count", &TrendSummary::violation_count)
        .def_readonly("max_violation", &TrendSummary::max_violation)
        .def_readonly("violation_indices", &TrendSummary::violation_indices);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("grid_values", &SweepResult::grid_values)
        .def_readonly("predicted_flow", &SweepResult::predicted_flow)
        .def_readonly("extrapolated", &SweepResult::extrapolated)
        .def_readonly("trend", &SweepResult::trend);

    m.def("sigmoid", &sigmoid, py::arg("x"), py::arg("bias"));
    m.def("init_network", &init_network, py::arg("input_dim"), py::arg("hidden_dim"),
          py::arg("output_dim"), py::arg("seed"));
    m.def("forward", &forward, py::arg("net"), py::arg("input"));
    m.def("backprop_gradients",
          [](const Network& net, const std::vector<double>& in, const std::vector<double>& tgt) {
              auto g = backprop_gradients(net, in, tgt);
              return py::make_tuple(g.hidden_weights, g.hidden_biases, g.output_weights,
                                    g.output_biases);
          });
    m.def("gradient_check", &gradient_check, py::arg("net"), py::arg("input"), py::arg("target"),
          py::arg("epsilon") = 1e-5);
    m.def("train", &train, py::arg("net"), py::arg("data"), py::arg("config"));
    m.def("evaluate_mse", &evaluate_mse);

    m.def("percent_error", &percent_error);
    m.def("mse", &mse);
    m.def("relative_errors", &relative_errors);

    m.def("load_csv", &load_csv);
    m.def("save_csv", &save_csv);
    m.def("fit_normalizer", &fit_normalizer);
    m.def("normalize", &normalize);
    m.def("denormalize_output", &denormalize_output);
    m.def("split", &split, py::arg("ds"), py::arg("train_fraction"), py::arg("seed"));
    m.def("surrogate_flow", &surrogate_flow);
    m.def(
        "generate_synthetic",
        [](std::size_t n, std::uint64_t seed, double noise_sd) {
            return generate_synthetic(n, seed, noise_sd);
        },
        py::arg("n"), py::arg("seed"), py::arg("noise_sd"));

    m.def("save_model", &save_model);
    m.def("load_model", &load_model);
    m.def("model_to_string", &model_to_string);
    m.def("model_from_string", &model_from_string);

    m.def("search", &search, py::arg("ds"), py::arg("candidates"), py::arg("config"),
          py::arg("train_fraction"), py::arg("split_seed"));
    m.def("sweep", &sweep);
    m.def("monotonicity_report", &monotonicity_report, py::arg("values"),
          py::arg("tau") = kTrendTolerance);
    m.def("sweep_to_csv", &sweep_to_csv);
    m.def("scatter_pairs", &scatter_pairs);
    m.def("scatter_to_csv", &scatter_to_csv);
}
