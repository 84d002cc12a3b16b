#include "rdcann/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rdcann/errors.hpp"

#include "rdcann/format.hpp"

namespace rdcann {

double TrainedModel::predict(double sf_ratio, double feed_temp, double solvent_temp,
                             double rotation) const {
    std::vector<double> in(kNumInputs);
    double raw[kNumInputs] = {sf_ratio, feed_temp, solvent_temp, rotation};
    for (int c = 0; c < kNumInputs; ++c)
        in[c] = norm.normalize_value(c, raw[c]);
    auto out = forward(net, in);
    return denormalize_output(out[0], norm);
}

std::string model_to_string(const TrainedModel& model) {
    const Network& net = model.net;
    std::ostringstream out;
    out << "rdcann-model v1\n";
    out << "dims " << net.input_dim << ' ' << net.hidden_dim << ' ' << net.output_dim << '\n';
    out << "activation hidden=sigmoid output=linear\n";
    out << "hidden_weights\n";
    for (const auto& row : net.hidden_weights) {
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? " " : "") << format_double(row[k]);
        out << '\n';
    }
    out << "hidden_biases\n";
    for (std::size_t j = 0; j < net.hidden_biases.size(); ++j)
        out << (j ? " " : "") << format_double(net.hidden_biases[j]);
    out << '\n';
    out << "output_weights\n";
    for (const auto& row : net.output_weights) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << format_double(row[j]);
        out << '\n';
    }
    out << "output_biases\n";
    for (std::size_t o = 0; o < net.output_biases.size(); ++o)
        out << (o ? " " : "") << format_double(net.output_biases[o]);
    out << '\n';
    for (int c = 0; c < 5; ++c)
        out << "norm " << kColumnNames[c] << ' ' << format_double(model.norm.col_min[c]) << ' '
            << format_double(model.norm.col_max[c]) << '\n';
    out << "norm_range " << format_double(model.norm.lo) << ' ' << format_double(model.norm.hi)
        << '\n';
    return out.str();
}

namespace {

struct LineReader {
    std::istringstream in;
    std::string line;
    int lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::string next() {
        if (!std::getline(in, line))
            throw SchemaError("model file: unexpected end of file after line " +
                                     std::to_string(lineno));
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    }

    void expect(const std::string& want) {
        std::string got = next();
        if (got != want)
            throw SchemaError("model file line " + std::to_string(lineno) + ": expected '" +
                                     want + "', got '" + got + "'");
    }

    std::vector<double> numbers(std::size_t count) {
        std::istringstream ls(next());
        std::vector<double> vals(count);
        for (std::size_t i = 0; i < count; ++i)
            if (!(ls >> vals[i]))
                throw SchemaError("model file line " + std::to_string(lineno) +
                                         ": expected " + std::to_string(count) + " numbers");
        std::string rest;
        if (ls >> rest)
            throw SchemaError("model file line " + std::to_string(lineno) +
                                     ": trailing content '" + rest + "'");
        return vals;
    }
};

} // namespace

TrainedModel model_from_string(const std::string& text) {
    LineReader r(text);
    r.expect("rdcann-model v1");

    std::istringstream dims(r.next());
    std::string tag;
    int in_dim = 0, hid_dim = 0, out_dim = 0;
    if (!(dims >> tag >> in_dim >> hid_dim >> out_dim) || tag != "dims")
        throw SchemaError("model file line 2: malformed dims line");
    if (in_dim < 1 || hid_dim < 1 || out_dim < 1)
        throw SchemaError("model file: dims must be >= 1");
    r.expect("activation hidden=sigmoid output=linear");

    TrainedModel model;
    Network& net = model.net;
    net.input_dim = in_dim;
    net.hidden_dim = hid_dim;
    net.output_dim = out_dim;

    r.expect("hidden_weights");
    for (int j = 0; j < hid_dim; ++j)
        net.hidden_weights.push_back(r.numbers(in_dim));
    r.expect("hidden_biases");
    net.hidden_biases = r.numbers(hid_dim);
    r.expect("output_weights");
    for (int o = 0; o < out_dim; ++o)
        net.output_weights.push_back(r.numbers(hid_dim));
    r.expect("output_biases");
    net.output_biases = r.numbers(out_dim);

    for (int c = 0; c < 5; ++c) {
        std::istringstream ls(r.next());
        std::string kw, col;
        double lo = 0.0, hi = 0.0;
        if (!(ls >> kw >> col >> lo >> hi) || kw != "norm" || col != kColumnNames[c])
            throw SchemaError("model file line " + std::to_string(r.lineno) +
                                     ": expected 'norm " + std::string(kColumnNames[c]) + " <min> <max>'");
        if (!(hi > lo))
            throw SchemaError("model file: norm max must exceed min for " + col);
        model.norm.col_min[c] = lo;
        model.norm.col_max[c] = hi;
    }
    {
        std::istringstream ls(r.next());
        std::string kw;
        if (!(ls >> kw >> model.norm.lo >> model.norm.hi) || kw != "norm_range")
            throw SchemaError("model file line " + std::to_string(r.lineno) +
                                     ": expected 'norm_range <lo> <hi>'");
    }
    validate_network(net);
    return model;
}

void save_model(const TrainedModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write file: " + path);
    out << model_to_string(model);
    if (!out)
        throw IoError("write failed: " + path);
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return model_from_string(buf.str());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

} // namespace rdcann
