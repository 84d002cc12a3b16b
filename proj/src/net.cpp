#include "rdcann/net.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rdcann/rng.hpp"

namespace rdcann {

double sigmoid(double x, double bias) {
    return 1.0 / (1.0 + std::exp(-x - bias));
}

Network init_network(int input_dim, int hidden_dim, int output_dim, std::uint64_t seed) {
    if (input_dim < 1 || hidden_dim < 1 || output_dim < 1)
        throw std::invalid_argument("init_network: dimensions must be >= 1, got " +
                                    std::to_string(input_dim) + "-" + std::to_string(hidden_dim) +
                                    "-" + std::to_string(output_dim));
    Rng rng(seed);
    Network net;
    net.input_dim = input_dim;
    net.hidden_dim = hidden_dim;
    net.output_dim = output_dim;
    net.hidden_weights.assign(hidden_dim, std::vector<double>(input_dim));
    net.hidden_biases.assign(hidden_dim, 0.0);
    net.output_weights.assign(output_dim, std::vector<double>(hidden_dim));
    net.output_biases.assign(output_dim, 0.0);
    for (auto& row : net.hidden_weights)
        for (double& w : row)
            w = rng.uniform(-0.5, 0.5);
    for (double& b : net.hidden_biases)
        b = rng.uniform(-0.5, 0.5);
    for (auto& row : net.output_weights)
        for (double& w : row)
            w = rng.uniform(-0.5, 0.5);
    for (double& b : net.output_biases)
        b = rng.uniform(-0.5, 0.5);
    return net;
}

void validate_network(const Network& net) {
    if (net.input_dim < 1 || net.hidden_dim < 1 || net.output_dim < 1)
        throw std::invalid_argument("network: dimensions must be >= 1");
    auto h = static_cast<std::size_t>(net.hidden_dim);
    auto o = static_cast<std::size_t>(net.output_dim);
    if (net.hidden_weights.size() != h || net.hidden_biases.size() != h ||
        net.output_weights.size() != o || net.output_biases.size() != o)
        throw std::invalid_argument("network: layer sizes inconsistent with dims");
    for (const auto& row : net.hidden_weights)
        if (row.size() != static_cast<std::size_t>(net.input_dim))
            throw std::invalid_argument("network: hidden weight row length != input_dim");
    for (const auto& row : net.output_weights)
        if (row.size() != h)
            throw std::invalid_argument("network: output weight row length != hidden_dim");
    auto check_finite = [](double v) {
        if (!std::isfinite(v))
            throw std::invalid_argument("network: non-finite parameter");
    };
    for (const auto& row : net.hidden_weights)
        for (double w : row)
            check_finite(w);
    for (double b : net.hidden_biases)
        check_finite(b);
    for (const auto& row : net.output_weights)
        for (double w : row)
            check_finite(w);
    for (double b : net.output_biases)
        check_finite(b);
}

static void check_input_len(const Network& net, const std::vector<double>& input) {
    if (input.size() != static_cast<std::size_t>(net.input_dim))
        throw std::invalid_argument("forward: expected input of length " +
                                    std::to_string(net.input_dim) + ", got " +
                                    std::to_string(input.size()));
}

ForwardTrace forward_with_hidden(const Network& net, const std::vector<double>& input) {
    check_input_len(net, input);
    ForwardTrace t;
    t.hidden.resize(net.hidden_dim);
    for (int j = 0; j < net.hidden_dim; ++j) {
        double pre = 0.0;
        for (int k = 0; k < net.input_dim; ++k)
            pre += net.hidden_weights[j][k] * input[k];
        t.hidden[j] = sigmoid(pre, net.hidden_biases[j]);
    }
    t.output.resize(net.output_dim);
    for (int o = 0; o < net.output_dim; ++o) {
        double acc = net.output_biases[o];
        for (int j = 0; j < net.hidden_dim; ++j)
            acc += net.output_weights[o][j] * t.hidden[j];
        t.output[o] = acc; // linear output
    }
    return t;
}

std::vector<double> forward(const Network& net, const std::vector<double>& input) {
    return forward_with_hidden(net, input).output;
}

} // namespace rdcann
