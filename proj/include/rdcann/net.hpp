#ifndef RDCANN_NET_HPP
#define RDCANN_NET_HPP

#include <cstdint>
#include <vector>

namespace rdcann {

// Activation kinds actually used by the model. The hidden layer is always
// sigmoid; the output layer is linear (recorded here so it is auditable
// rather than implicit).
enum class Activation { Sigmoid, Linear };

/// Logistic sigmoid with an additive pre-activation bias:
/// f(x) = 1 / (1 + exp(-x - bias)). Strictly in (0, 1) for finite inputs.
double sigmoid(double x, double bias);

// Feed-forward perceptron with one sigmoid hidden layer and a linear output
// layer. Weights operate on normalized values; denormalization is the data
// module's job. Immutable in normal use; the trainer mutates it in place.
struct Network {
    int input_dim = 0;
    int hidden_dim = 0;
    int output_dim = 0;
    std::vector<std::vector<double>> hidden_weights; // [hidden][input]
    std::vector<double> hidden_biases;               // [hidden]
    std::vector<std::vector<double>> output_weights; // [output][hidden]
    std::vector<double> output_biases;               // [output]

    Activation hidden_activation = Activation::Sigmoid;
    Activation output_activation = Activation::Linear;

    std::size_t parameter_count() const {
        return static_cast<std::size_t>(hidden_dim) * input_dim + hidden_dim +
               static_cast<std::size_t>(output_dim) * hidden_dim + output_dim;
    }
};

/// Builds a network with all weights and biases drawn i.i.d. uniform on
/// [-0.5, 0.5] from a seeded generator. Same (dims, seed) gives a
/// bit-identical network. Throws std::invalid_argument on non-positive dims.
Network init_network(int input_dim, int hidden_dim, int output_dim, std::uint64_t seed);

/// Checks dimension consistency and finiteness of every parameter;
/// throws std::invalid_argument describing the first violation.
void validate_network(const Network& net);

/// Forward pass on a normalized input vector. Throws std::invalid_argument
/// on length mismatch (message names expected vs actual).
std::vector<double> forward(const Network& net, const std::vector<double>& input);

/// Forward pass that also returns the hidden activations (needed by
/// backprop and the gradient check). Output agrees with forward() bit for bit.
struct ForwardTrace {
    std::vector<double> hidden;
    std::vector<double> output;
};
ForwardTrace forward_with_hidden(const Network& net, const std::vector<double>& input);

} // namespace rdcann

#endif
