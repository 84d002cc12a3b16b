#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "rdcann/net.hpp"
#include "rdcann/rng.hpp"

using namespace rdcann;

namespace {

Network ones_net(int in, int hid, int out) {
    Network net;
    net.input_dim = in;
    net.hidden_dim = hid;
    net.output_dim = out;
    net.hidden_weights.assign(hid, std::vector<double>(in, 1.0));
    net.hidden_biases.assign(hid, 0.0);
    net.output_weights.assign(out, std::vector<double>(hid, 1.0));
    net.output_biases.assign(out, 0.0);
    return net;
}

} // namespace

TEST_CASE("sigmoid point values") {
    CHECK(sigmoid(0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sigmoid(1.0, 0.5) == doctest::Approx(0.8175744761936437).epsilon(1e-15));
    // saturation
    CHECK(sigmoid(50.0, 0.0) > 1.0 - 1e-12);
    CHECK(sigmoid(-50.0, 0.0) < 1e-12);
}

TEST_CASE("sigmoid properties") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        double x = rng.uniform(-10.0, 10.0);
        double b = rng.uniform(-10.0, 10.0);
        double s = sigmoid(x, b);
        CHECK(s > 0.0);
        CHECK(s < 1.0);
        CHECK(s + sigmoid(-x, -b) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sigmoid(x, b) == sigmoid(x + b, 0.0)); // bias is a pre-activation shift
    }
    // monotone in x and in bias
    CHECK(sigmoid(0.5, 0.0) > sigmoid(0.4, 0.0));
    CHECK(sigmoid(0.5, 0.2) > sigmoid(0.5, 0.1));
}

TEST_CASE("forward zero-weight net outputs zero") {
    Network net = ones_net(4, 7, 1);
    for (auto& row : net.hidden_weights)
        for (double& w : row)
            w = 0.0;
    for (auto& row : net.output_weights)
        for (double& w : row)
            w = 0.0;
    auto t = forward_with_hidden(net, {0.3, 0.4, 0.5, 0.6});
    for (double h : t.hidden)
        CHECK(h == 0.5);
    CHECK(t.output[0] == 0.0);
}

TEST_CASE("forward 1-1-1 hand evaluation") {
    Network net = ones_net(1, 1, 1);
    CHECK(forward(net, {0.0})[0] == doctest::Approx(0.5).epsilon(1e-15));
    auto t = forward_with_hidden(net, {1.0});
    CHECK(t.hidden[0] == doctest::Approx(0.7310585786300049).epsilon(1e-15));
}

TEST_CASE("forward_with_hidden agrees with forward bit-for-bit") {
    Network net = init_network(4, 7, 1, 42);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> in = {rng.uniform01(), rng.uniform01(), rng.uniform01(),
                                  rng.uniform01()};
        CHECK(forward(net, in)[0] == forward_with_hidden(net, in).output[0]);
    }
}

TEST_CASE("forward rejects wrong input length") {
    Network net = init_network(4, 7, 1, 1);
    CHECK_THROWS_WITH_AS(forward(net, {0.1, 0.2}), doctest::Contains("expected input of length 4"),
                         std::invalid_argument);
}

TEST_CASE("forward output is finite on a 4-7-1 net") {
    Network net = init_network(4, 7, 1, 99);
    auto y = forward(net, {0.1, 0.9, 0.5, 0.3});
    REQUIRE(y.size() == 1);
    CHECK(std::isfinite(y[0]));
}

TEST_CASE("forward continuity smoke test") {
    Network net = init_network(4, 7, 1, 5);
    std::vector<double> in = {0.5, 0.5, 0.5, 0.5};
    double y0 = forward(net, in)[0];
    // Lipschitz bound: |dy| <= delta * sum_j |w_out_j| * max|w_hid_jk| / 4 is loose;
    // a crude global bound from weight magnitudes suffices for the smoke test
    double wmax = 0.0;
    for (const auto& row : net.hidden_weights)
        for (double w : row)
            wmax = std::max(wmax, std::abs(w));
    double wsum = 0.0;
    for (double w : net.output_weights[0])
        wsum += std::abs(w);
    double delta = 1e-8;
    in[2] += delta;
    double y1 = forward(net, in)[0];
    CHECK(std::abs(y1 - y0) <= wsum * 0.25 * wmax * delta * 1.0001);
}

TEST_CASE("init_network determinism and shape") {
    Network a = init_network(4, 7, 1, 123);
    Network b = init_network(4, 7, 1, 123);
    CHECK(a.hidden_weights == b.hidden_weights);
    CHECK(a.hidden_biases == b.hidden_biases);
    CHECK(a.output_weights == b.output_weights);
    CHECK(a.output_biases == b.output_biases);
    CHECK(a.parameter_count() == 43);

    Network c = init_network(4, 7, 1, 124);
    CHECK(a.hidden_weights != c.hidden_weights);

    for (const auto& row : a.hidden_weights)
        for (double w : row) {
            CHECK(w >= -0.5);
            CHECK(w <= 0.5);
        }
    CHECK_NOTHROW(validate_network(a));
}

TEST_CASE("init_network rejects bad dims") {
    CHECK_THROWS_AS(init_network(0, 7, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(init_network(4, -1, 1, 1), std::invalid_argument);
}
