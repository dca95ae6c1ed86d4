#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace keyrule {

/// The frame of discernment: the ordered set of class labels evidence
/// is combined over.
class ClassFrame {
public:
    /// Throws std::invalid_argument when empty or containing duplicates.
    explicit ClassFrame(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Index of a label, or size() when absent.
    std::size_t index_of(const std::string& label) const;

    bool operator==(const ClassFrame& other) const = default;

private:
    std::vector<std::string> labels_;
};

/// One source of evidence: probability p that the document belongs to
/// the class at class_index, mass 1-p on the complement.
struct ClassEvidence {
    std::size_t class_index = 0;
    double p = 0.0;
};

/// Every numerator of the combination rule vanished: all p are 0, or
/// two or more p are exactly 1. No mass function exists; classification
/// maps this to an abstention.
class TotalConflictError : public std::domain_error {
public:
    TotalConflictError() : std::domain_error("total conflict: all combined masses vanish") {}
};

/// Normalized singleton masses after combining the supplied evidence.
/// Classes that supplied no evidence are vacuous: they receive no
/// singleton mass and do not enter the products.
class CombinedMass {
public:
    CombinedMass(std::vector<ClassEvidence> inputs, std::vector<double> masses);

    std::size_t size() const { return inputs_.size(); }
    const std::vector<ClassEvidence>& inputs() const { return inputs_; }
    const std::vector<double>& masses() const { return masses_; }

    /// Mass on the singleton {class_index}; 0 for vacuous classes.
    double mass_of(std::size_t class_index) const;

    /// Index (into the frame) of the largest mass; ties report the
    /// smallest index — callers needing tie detection use masses().
    std::size_t argmax_class() const;

private:
    std::vector<ClassEvidence> inputs_;
    std::vector<double> masses_;  // parallel to inputs_
};

/// Closed-form combination: m(C_k) proportional to p_k prod_{j!=k}(1-p_j),
/// normalized to sum 1. Evaluated in log space so long products survive;
/// exact 0/1 evidence is handled symbolically. Throws TotalConflictError
/// when no mass survives.
CombinedMass combine_feasible(const std::vector<ClassEvidence>& evidence);

/// Direct evaluation of Dempster's rule by enumerating all 2^n
/// intersections of the singleton/complement hypotheses: numerator the
/// single surviving product per class, denominator one minus the total
/// mass on empty intersections. Exponential; guarded by max_sources.
/// Agrees with combine_feasible to tight tolerance - kept as the
/// independent cross-check of the closed form.
CombinedMass combine_bruteforce(const std::vector<ClassEvidence>& evidence,
                                std::size_t max_sources = 12);

/// Belief and plausibility of the singleton {class_index}:
/// bel = m(C_k), pl = 1 - sum_{j != k} m(C_j). Equal by construction
/// because the combined singleton masses sum to one.
struct BeliefPlausibility {
    double belief = 0.0;
    double plausibility = 0.0;
};

BeliefPlausibility belief_plausibility(const CombinedMass& cm, std::size_t class_index);

}  // namespace keyrule
