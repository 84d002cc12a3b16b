#include "rdcann/train.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rdcann/errors.hpp"

#include "rdcann/format.hpp"
#include "rdcann/rng.hpp"

namespace rdcann {

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0))
        throw std::invalid_argument("train: learning_rate must be > 0");
    if (!(momentum >= 0.0 && momentum < 1.0))
        throw std::invalid_argument("train: momentum must be in [0, 1)");
    if (iterations < 1)
        throw std::invalid_argument("train: iterations must be >= 1");
}

std::string TrainHistory::to_csv() const {
    std::ostringstream out;
    out << "epoch,mse\n";
    for (std::size_t i = 0; i < epochs.size(); ++i)
        out << epochs[i] << ',' << format_double(mse[i]) << '\n';
    return out.str();
}

static Gradients zero_like(const Network& net) {
    Gradients g;
    g.hidden_weights.assign(net.hidden_dim, std::vector<double>(net.input_dim, 0.0));
    g.hidden_biases.assign(net.hidden_dim, 0.0);
    g.output_weights.assign(net.output_dim, std::vector<double>(net.hidden_dim, 0.0));
    g.output_biases.assign(net.output_dim, 0.0);
    return g;
}

Gradients backprop_gradients(const Network& net, const std::vector<double>& input,
                             const std::vector<double>& target) {
    if (target.size() != static_cast<std::size_t>(net.output_dim))
        throw std::invalid_argument("backprop: expected target of length " +
                                    std::to_string(net.output_dim) + ", got " +
                                    std::to_string(target.size()));
    ForwardTrace t = forward_with_hidden(net, input);
    Gradients g = zero_like(net);

    // linear output: dL/d(pre_o) = y_o - d_o
    std::vector<double> out_delta(net.output_dim);
    for (int o = 0; o < net.output_dim; ++o) {
        out_delta[o] = t.output[o] - target[o];
        g.output_biases[o] = out_delta[o];
        for (int j = 0; j < net.hidden_dim; ++j)
            g.output_weights[o][j] = out_delta[o] * t.hidden[j];
    }
    // sigmoid hidden: sigma' = h * (1 - h)
    for (int j = 0; j < net.hidden_dim; ++j) {
        double back = 0.0;
        for (int o = 0; o < net.output_dim; ++o)
            back += out_delta[o] * net.output_weights[o][j];
        double delta = back * t.hidden[j] * (1.0 - t.hidden[j]);
        g.hidden_biases[j] = delta;
        for (int k = 0; k < net.input_dim; ++k)
            g.hidden_weights[j][k] = delta * input[k];
    }
    return g;
}

static double sample_loss(const Network& net, const std::vector<double>& input,
                          const std::vector<double>& target) {
    auto y = forward(net, input);
    double l = 0.0;
    for (std::size_t o = 0; o < y.size(); ++o) {
        double e = y[o] - target[o];
        l += 0.5 * e * e;
    }
    return l;
}

double gradient_check(const Network& net, const std::vector<double>& input,
                      const std::vector<double>& target, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1e-3))
        throw std::invalid_argument("gradient_check: epsilon must be in (0, 1e-3]");
    Gradients analytic = backprop_gradients(net, input, target);
    Network probe = net;

    double worst = 0.0;
    auto compare = [&](double* param, double grad) {
        double orig = *param;
        *param = orig + epsilon;
        double lp = sample_loss(probe, input, target);
        *param = orig - epsilon;
        double lm = sample_loss(probe, input, target);
        *param = orig;
        double numeric = (lp - lm) / (2.0 * epsilon);
        double mag = std::max(std::abs(grad), std::abs(numeric));
        double disc = (mag < 1e-10) ? std::abs(grad - numeric) : std::abs(grad - numeric) / mag;
        worst = std::max(worst, disc);
    };

    for (int j = 0; j < net.hidden_dim; ++j) {
        for (int k = 0; k < net.input_dim; ++k)
            compare(&probe.hidden_weights[j][k], analytic.hidden_weights[j][k]);
        compare(&probe.hidden_biases[j], analytic.hidden_biases[j]);
    }
    for (int o = 0; o < net.output_dim; ++o) {
        for (int j = 0; j < net.hidden_dim; ++j)
            compare(&probe.output_weights[o][j], analytic.output_weights[o][j]);
        compare(&probe.output_biases[o], analytic.output_biases[o]);
    }
    return worst;
}

double evaluate_mse(const Network& net, const NormalizedData& data) {
    double sum = 0.0;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < data.inputs.size(); ++i) {
        auto y = forward(net, data.inputs[i]);
        for (std::size_t o = 0; o < y.size(); ++o) {
            double e = data.targets[i][o] - y[o];
            sum += e * e;
            ++terms;
        }
    }
    return sum / static_cast<double>(terms);
}

TrainHistory train(Network& net, const NormalizedData& data, const TrainConfig& config) {
    config.validate();
    if (data.inputs.empty())
        throw std::invalid_argument("train: empty dataset");
    if (data.inputs.size() != data.targets.size())
        throw std::invalid_argument("train: inputs/targets length mismatch");

    Gradients velocity = zero_like(net);
    Rng rng(config.seed);
    std::vector<std::size_t> order(data.inputs.size());
    std::iota(order.begin(), order.end(), 0);

    TrainHistory history;
    for (std::size_t epoch = 1; epoch <= config.iterations; ++epoch) {
        if (config.shuffle_each_epoch)
            rng.shuffle(order);
        for (std::size_t idx : order) {
            Gradients g = backprop_gradients(net, data.inputs[idx], data.targets[idx]);
            for (int j = 0; j < net.hidden_dim; ++j) {
                for (int k = 0; k < net.input_dim; ++k) {
                    double& v = velocity.hidden_weights[j][k];
                    v = config.momentum * v - config.learning_rate * g.hidden_weights[j][k];
                    net.hidden_weights[j][k] += v;
                }
                double& vb = velocity.hidden_biases[j];
                vb = config.momentum * vb - config.learning_rate * g.hidden_biases[j];
                net.hidden_biases[j] += vb;
            }
            for (int o = 0; o < net.output_dim; ++o) {
                for (int j = 0; j < net.hidden_dim; ++j) {
                    double& v = velocity.output_weights[o][j];
                    v = config.momentum * v - config.learning_rate * g.output_weights[o][j];
                    net.output_weights[o][j] += v;
                }
                double& vb = velocity.output_biases[o];
                vb = config.momentum * vb - config.learning_rate * g.output_biases[o];
                net.output_biases[o] += vb;
            }
        }
        bool record = (epoch % config.history_stride == 0) || epoch == config.iterations || epoch == 1;
        double m = evaluate_mse(net, data);
        if (!std::isfinite(m))
            throw NumericError("train: loss diverged (non-finite MSE) at epoch " +
                                     std::to_string(epoch) + " with learning_rate " +
                                     format_double(config.learning_rate));
        if (record) {
            history.epochs.push_back(epoch);
            history.mse.push_back(m);
        }
    }
    return history;
}

} // namespace rdcann
