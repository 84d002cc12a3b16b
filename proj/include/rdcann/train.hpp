#ifndef RDCANN_TRAIN_HPP
#define RDCANN_TRAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rdcann/data.hpp"
#include "rdcann/net.hpp"

namespace rdcann {

// Training hyperparameters. Rate and momentum are this artifact's defaults;
// only the iteration count is dictated by the model being mirrored.
struct TrainConfig {
    double learning_rate = 0.05;
    double momentum = 0.9;
    std::size_t iterations = 100000; // one iteration = one epoch
    std::uint64_t seed = 1;
    bool shuffle_each_epoch = true;
    std::size_t history_stride = 100; // record training MSE every k epochs

    void validate() const;
};

struct TrainHistory {
    std::vector<std::size_t> epochs;
    std::vector<double> mse; // on normalized values

    /// `epoch,mse` rows
    std::string to_csv() const;
};

// Parameter-shaped gradient container.
struct Gradients {
    std::vector<std::vector<double>> hidden_weights;
    std::vector<double> hidden_biases;
    std::vector<std::vector<double>> output_weights;
    std::vector<double> output_biases;
};

/// Analytic gradients of the per-sample loss L = 1/2 * ||y - d||^2 (on
/// normalized values) with respect to every parameter. Exact chain rule
/// through the linear output and sigmoid hidden layer.
Gradients backprop_gradients(const Network& net, const std::vector<double>& input,
                             const std::vector<double>& target);

/// Worst relative discrepancy between backprop_gradients and central finite
/// differences with the given epsilon, over all parameters. Falls back to
/// absolute difference when both magnitudes are below 1e-10.
double gradient_check(const Network& net, const std::vector<double>& input,
                      const std::vector<double>& target, double epsilon);

/// Per-sample SGD with classical momentum:
///   v <- momentum * v - learning_rate * grad;  theta <- theta + v
/// Deterministic for fixed (net, data, config). Throws std::runtime_error
/// if the loss becomes non-finite (reports the epoch and learning rate).
TrainHistory train(Network& net, const NormalizedData& data, const TrainConfig& config);

/// Training-set MSE of the current network on normalized data.
double evaluate_mse(const Network& net, const NormalizedData& data);

} // namespace rdcann

#endif
