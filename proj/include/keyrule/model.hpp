#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "keyrule/evidence.hpp"
#include "keyrule/partition.hpp"
#include "keyrule/trainer.hpp"

namespace keyrule {

/// Identifier of the text-handling convention a model was built with;
/// persisted so a model is never applied under different matching rules.
inline constexpr const char* kNormalizationId = "ascii-lower-collapse-v1/padded-match";

struct ClassTrainerInfo {
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    FitnessReport fitness;

    bool operator==(const ClassTrainerInfo&) const = default;
};

struct ModelProvenance {
    std::string corpus_digest;  // fnv1a-64 hex over the training corpus
    std::string created;        // ISO-8601, informational
    std::map<std::string, ClassTrainerInfo> trainer;  // by label; absent for imposed word sets

    bool operator==(const ModelProvenance&) const = default;
};

/// One binary classifier per label of the frame, plus provenance.
class MultiClassModel {
public:
    /// Throws std::invalid_argument when models and frame labels do not
    /// align one-to-one in order.
    MultiClassModel(ClassFrame frame, std::vector<ClassModel> models,
                    ModelProvenance provenance = {});

    const ClassFrame& frame() const { return frame_; }
    const std::vector<ClassModel>& models() const { return models_; }
    const ClassModel& model(std::size_t i) const { return models_.at(i); }
    const ModelProvenance& provenance() const { return provenance_; }

    bool operator==(const MultiClassModel&) const = default;

private:
    ClassFrame frame_;
    std::vector<ClassModel> models_;
    ModelProvenance provenance_;
};

/// FNV-1a 64-bit digest, hex-encoded; used for corpus provenance.
std::string fnv1a_hex(const std::vector<std::string>& pieces);

}  // namespace keyrule
