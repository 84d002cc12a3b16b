// rdcann command-line pipeline: synthetic data generation, training,
// hidden-layer-size search, evaluation, parametric sweeps and prediction.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdcann/archsearch.hpp"
#include "rdcann/data.hpp"
#include "rdcann/errors.hpp"
#include "rdcann/format.hpp"
#include "rdcann/metrics.hpp"
#include "rdcann/model_io.hpp"
#include "rdcann/net.hpp"
#include "rdcann/parametric.hpp"
#include "rdcann/train.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitSchema = 4;

using rdcann::format_double;

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw rdcann::IoError("cannot write file: " + path);
    out << content;
    if (!out)
        throw rdcann::IoError("write failed: " + path);
}

std::map<std::string, double> parse_kv(const std::string& arg) {
    std::map<std::string, double> kv;
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("expected key=value, got '" + item + "'");
        std::size_t used = 0;
        double v = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1)
            throw CLI::ValidationError("non-numeric value in '" + item + "'");
        kv[item.substr(0, eq)] = v;
    }
    return kv;
}

struct EvalBlock {
    double mse = 0.0;
    double pct_error = 0.0;
    rdcann::RelativeErrors rel;
};

EvalBlock evaluate_model(const rdcann::TrainedModel& model, const rdcann::Dataset& ds) {
    auto nd = rdcann::normalize(ds, model.norm);
    rdcann::Matrix y, d, dy, dd;
    for (std::size_t i = 0; i < nd.inputs.size(); ++i) {
        auto out = rdcann::forward(model.net, nd.inputs[i]);
        y.push_back(out);
        d.push_back(nd.targets[i]);
        dy.push_back({rdcann::denormalize_output(out[0], model.norm)});
        dd.push_back({ds.samples[i].product_flow});
    }
    EvalBlock b;
    b.mse = rdcann::mse(y, d);
    b.pct_error = rdcann::percent_error(dy, dd);
    b.rel = rdcann::relative_errors(dy, dd);
    return b;
}

// gen-data
struct GenDataOpts {
    std::size_t n = 400;
    std::uint64_t seed = 1;
    double noise = 0.01;
    std::string out;
};

// train
struct TrainOpts {
    std::string data;
    int hidden = 7;
    std::size_t iterations = 2000;
    double lr = 0.05;
    double momentum = 0.9;
    std::uint64_t seed = 1;
    double split_fraction = 0.8;
    std::string model_out;
    std::string history_out;
};

void run_train(const TrainOpts& o) {
    std::cerr << "# effective config: data=" << o.data << " hidden=" << o.hidden
              << " iterations=" << o.iterations << " lr=" << format_double(o.lr)
              << " momentum=" << format_double(o.momentum) << " seed=" << o.seed
              << " split=" << format_double(o.split_fraction) << " model-out=" << o.model_out
              << "\n";
    auto ds = rdcann::load_csv(o.data);
    auto [train_ds, val_ds] = rdcann::split(ds, o.split_fraction, o.seed);
    auto norm = rdcann::fit_normalizer(train_ds);
    auto train_nd = rdcann::normalize(train_ds, norm);

    rdcann::TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.momentum = o.momentum;
    cfg.iterations = o.iterations;
    cfg.seed = o.seed;
    auto net = rdcann::init_network(rdcann::kNumInputs, o.hidden, 1, o.seed);
    auto history = rdcann::train(net, train_nd, cfg);

    rdcann::TrainedModel model{std::move(net), norm};
    auto train_block = evaluate_model(model, train_ds);
    auto val_block = evaluate_model(model, val_ds);
    std::cout << "train_mse " << format_double(train_block.mse) << '\n'
              << "train_pct_error " << format_double(train_block.pct_error) << '\n'
              << "val_mse " << format_double(val_block.mse) << '\n'
              << "val_pct_error " << format_double(val_block.pct_error) << '\n'
              << "val_avg_rel_error_pct " << format_double(val_block.rel.average_pct) << '\n'
              << "val_max_rel_error_pct " << format_double(val_block.rel.maximum_pct) << '\n';
    rdcann::save_model(model, o.model_out);
    if (!o.history_out.empty())
        write_text_file(o.history_out, history.to_csv());
}

// arch-search
struct ArchOpts {
    std::string data;
    int min_hidden = 2;
    int max_hidden = 12;
    std::size_t iterations = 500;
    double lr = 0.05;
    double momentum = 0.9;
    std::uint64_t seed = 1;
    double split_fraction = 0.8;
    std::uint64_t split_seed = 1;
    std::string report_out;
};

void run_arch_search(const ArchOpts& o) {
    if (o.min_hidden > o.max_hidden)
        throw CLI::ValidationError("--min-hidden must be <= --max-hidden");
    std::cerr << "# effective config: data=" << o.data << " hidden=" << o.min_hidden << ".."
              << o.max_hidden << " iterations=" << o.iterations << " lr=" << format_double(o.lr)
              << " momentum=" << format_double(o.momentum) << " seed=" << o.seed
              << " split=" << format_double(o.split_fraction) << " split-seed=" << o.split_seed
              << "\n";
    auto ds = rdcann::load_csv(o.data);
    std::vector<int> candidates;
    for (int h = o.min_hidden; h <= o.max_hidden; ++h)
        candidates.push_back(h);
    rdcann::TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.momentum = o.momentum;
    cfg.iterations = o.iterations;
    cfg.seed = o.seed;
    auto report = rdcann::search(ds, candidates, cfg, o.split_fraction, o.split_seed);
    std::cout << report.to_table();
    std::cout << "selected " << report.selected << '\n';
    if (!o.report_out.empty())
        write_text_file(o.report_out, report.to_csv());
}

// evaluate
struct EvalOpts {
    std::string model;
    std::string data;
    std::string scatter_out;
    bool csv = false;
};

void run_evaluate(const EvalOpts& o) {
    auto model = rdcann::load_model(o.model);
    auto ds = rdcann::load_csv(o.data);
    auto b = evaluate_model(model, ds);
    if (o.csv) {
        std::cout << "metric,value\n"
                  << "mse," << format_double(b.mse) << '\n'
                  << "pct_error," << format_double(b.pct_error) << '\n'
                  << "avg_rel_error_pct," << format_double(b.rel.average_pct) << '\n'
                  << "max_rel_error_pct," << format_double(b.rel.maximum_pct) << '\n';
    } else {
        std::cout << "mse " << format_double(b.mse) << '\n'
                  << "pct_error " << format_double(b.pct_error) << '\n'
                  << "avg_rel_error_pct " << format_double(b.rel.average_pct) << '\n'
                  << "max_rel_error_pct " << format_double(b.rel.maximum_pct) << '\n';
    }
    if (!o.scatter_out.empty())
        write_text_file(o.scatter_out, rdcann::scatter_to_csv(rdcann::scatter_pairs(model, ds)));
}

// sweep
struct SweepOpts {
    std::string model;
    std::string var;
    double from = 0.0;
    double to = 0.0;
    std::size_t steps = 0;
    std::string baseline; // k=v,... for the other three inputs
    std::string out;
};

void run_sweep(const SweepOpts& o) {
    auto model = rdcann::load_model(o.model);
    rdcann::SweepSpec spec;
    spec.variable = rdcann::sweep_variable_from_name(o.var);
    if (o.steps < 2)
        throw CLI::ValidationError("--steps must be >= 2");
    if (!(o.to > o.from))
        throw CLI::ValidationError("--to must exceed --from");
    for (std::size_t i = 0; i < o.steps; ++i)
        spec.grid.push_back(o.from + (o.to - o.from) * static_cast<double>(i) /
                                         static_cast<double>(o.steps - 1));

    // default baseline: midpoint of the normalizer's fitted ranges
    double base[rdcann::kNumInputs];
    for (int c = 0; c < rdcann::kNumInputs; ++c)
        base[c] = 0.5 * (model.norm.col_min[c] + model.norm.col_max[c]);
    if (!o.baseline.empty()) {
        static const std::map<std::string, int> cols = {
            {"sf_ratio", 0}, {"feed_temp", 1}, {"solvent_temp", 2}, {"rotation", 3}};
        for (const auto& [k, v] : parse_kv(o.baseline)) {
            auto it = cols.find(k);
            if (it == cols.end())
                throw CLI::ValidationError("unknown baseline key '" + k + "'");
            base[it->second] = v;
        }
    }
    spec.baseline_sf = base[0];
    spec.baseline_feed_temp = base[1];
    spec.baseline_solvent_temp = base[2];
    spec.baseline_rotation = base[3];

    auto result = rdcann::sweep(model, spec);
    auto csv = rdcann::sweep_to_csv(result, spec.variable);
    if (o.out.empty())
        std::cout << csv;
    else
        write_text_file(o.out, csv);
    if (result.extrapolated)
        std::cerr << "# warning: sweep extends outside the fitted input ranges (extrapolation)\n";
}

// predict
struct PredictOpts {
    std::string model;
    std::string input;
};

void run_predict(const PredictOpts& o) {
    auto model = rdcann::load_model(o.model);
    auto kv = parse_kv(o.input);
    const char* required[] = {"sf_ratio", "feed_temp", "solvent_temp", "rotation"};
    for (const char* k : required)
        if (!kv.count(k))
            throw CLI::ValidationError(
                "missing input key '" + std::string(k) +
                "' (required: sf_ratio, feed_temp, solvent_temp, rotation)");
    if (kv.size() != 4)
        throw CLI::ValidationError("unexpected extra input keys");
    std::cout << format_double(model.predict(kv["sf_ratio"], kv["feed_temp"], kv["solvent_temp"],
                                             kv["rotation"]))
              << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ANN pipeline for RDC-column product flow rate prediction"};
    app.require_subcommand(1);
    app.set_config("--config")->description("key=value config file; flags take precedence");

    GenDataOpts gen;
    auto* cmd_gen = app.add_subcommand("gen-data", "generate a synthetic dataset CSV");
    cmd_gen->add_option("--n", gen.n, "number of samples")->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--noise", gen.noise, "relative noise standard deviation")
        ->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--out", gen.out, "output CSV path")->required();

    TrainOpts tr;
    auto* cmd_train = app.add_subcommand("train", "train a model on a dataset CSV");
    cmd_train->add_option("--data", tr.data, "input CSV")->required();
    cmd_train->add_option("--hidden", tr.hidden, "hidden nodes")->check(CLI::PositiveNumber);
    cmd_train->add_option("--iterations", tr.iterations, "training epochs")
        ->check(CLI::PositiveNumber);
    cmd_train->add_option("--lr", tr.lr, "learning rate");
    cmd_train->add_option("--momentum", tr.momentum, "momentum in [0,1)");
    cmd_train->add_option("--seed", tr.seed, "seed for init, split and shuffling");
    cmd_train->add_option("--split", tr.split_fraction, "training fraction");
    cmd_train->add_option("--model-out", tr.model_out, "model file path")->required();
    cmd_train->add_option("--history-out", tr.history_out, "training history CSV path");

    ArchOpts ar;
    auto* cmd_arch = app.add_subcommand("arch-search", "hidden-layer-size grid search");
    cmd_arch->add_option("--data", ar.data, "input CSV")->required();
    cmd_arch->add_option("--min-hidden", ar.min_hidden)->check(CLI::PositiveNumber);
    cmd_arch->add_option("--max-hidden", ar.max_hidden)->check(CLI::PositiveNumber);
    cmd_arch->add_option("--iterations", ar.iterations, "epochs per candidate")
        ->check(CLI::PositiveNumber);
    cmd_arch->add_option("--lr", ar.lr);
    cmd_arch->add_option("--momentum", ar.momentum);
    cmd_arch->add_option("--seed", ar.seed, "base training seed (candidate seed = seed + H)");
    cmd_arch->add_option("--split", ar.split_fraction);
    cmd_arch->add_option("--split-seed", ar.split_seed);
    cmd_arch->add_option("--report-out", ar.report_out, "report CSV path");

    EvalOpts ev;
    auto* cmd_eval = app.add_subcommand("evaluate", "evaluate a model on a dataset CSV");
    cmd_eval->add_option("--model", ev.model)->required();
    cmd_eval->add_option("--data", ev.data)->required();
    cmd_eval->add_option("--scatter-out", ev.scatter_out, "actual-vs-predicted CSV path");
    cmd_eval->add_flag("--csv", ev.csv, "emit the metrics block as CSV");

    SweepOpts sw;
    auto* cmd_sweep = app.add_subcommand("sweep", "one-factor parametric sweep");
    cmd_sweep->add_option("--model", sw.model)->required();
    cmd_sweep->add_option("--var", sw.var, "sf_ratio|feed_temp|solvent_temp|rotation")->required();
    cmd_sweep->add_option("--from", sw.from)->required();
    cmd_sweep->add_option("--to", sw.to)->required();
    cmd_sweep->add_option("--steps", sw.steps, "number of grid points")->required();
    cmd_sweep->add_option("--baseline", sw.baseline,
                          "k=v,... fixed values for the other inputs (default: range midpoints)");
    cmd_sweep->add_option("--out", sw.out, "output CSV path (default stdout)");

    PredictOpts pr;
    auto* cmd_pred = app.add_subcommand("predict", "predict product flow for one input point");
    cmd_pred->add_option("--model", pr.model)->required();
    cmd_pred->add_option("--input", pr.input, "sf_ratio=..,feed_temp=..,solvent_temp=..,rotation=..")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) {
            auto ds = rdcann::generate_synthetic(gen.n, gen.seed, gen.noise);
            rdcann::save_csv(ds, gen.out);
            std::cerr << "# wrote " << ds.size() << " samples to " << gen.out << "\n";
        } else if (cmd_train->parsed()) {
            run_train(tr);
        } else if (cmd_arch->parsed()) {
            run_arch_search(ar);
        } else if (cmd_eval->parsed()) {
            run_evaluate(ev);
        } else if (cmd_sweep->parsed()) {
            run_sweep(sw);
        } else if (cmd_pred->parsed()) {
            run_predict(pr);
        }
    } catch (const rdcann::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const rdcann::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const rdcann::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
