#ifndef RDCANN_MODEL_IO_HPP
#define RDCANN_MODEL_IO_HPP

#include <string>

#include "rdcann/data.hpp"
#include "rdcann/net.hpp"

namespace rdcann {

// A network plus the normalizer it was trained with; the self-contained
// unit needed for prediction in engineering units.
struct TrainedModel {
    Network net;
    NormalizationSpec norm;

    /// Normalize raw inputs, run the net, denormalize the output (m3/hr).
    double predict(double sf_ratio, double feed_temp, double solvent_temp, double rotation) const;
};

/// Writes the versioned plain-text model format (`rdcann-model v1`).
/// All floats carry 17 significant digits so a load reproduces the saved
/// parameters exactly.
void save_model(const TrainedModel& model, const std::string& path);

/// Parses a model file; throws std::runtime_error with the offending line
/// on any format violation.
TrainedModel load_model(const std::string& path);

std::string model_to_string(const TrainedModel& model);
TrainedModel model_from_string(const std::string& text);

} // namespace rdcann

#endif
