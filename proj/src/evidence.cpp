#include "keyrule/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace keyrule {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using accum_t = __float128;
#else
using accum_t = long double;
#endif

void check_evidence(const std::vector<ClassEvidence>& evidence) {
    if (evidence.empty())
        throw std::invalid_argument("evidence list must not be empty");
    for (const auto& e : evidence) {
        if (!(e.p >= 0.0 && e.p <= 1.0))
            throw std::invalid_argument("evidence probability must lie in [0, 1]");
    }
    for (std::size_t i = 0; i < evidence.size(); ++i)
        for (std::size_t j = i + 1; j < evidence.size(); ++j)
            if (evidence[i].class_index == evidence[j].class_index)
                throw std::invalid_argument("at most one evidence entry per class");
}

}  // namespace

ClassFrame::ClassFrame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("class frame must hold at least one label");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw std::invalid_argument("class frame holds duplicate label: " + labels_[i]);
}

std::size_t ClassFrame::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return labels_.size();
}

CombinedMass::CombinedMass(std::vector<ClassEvidence> inputs, std::vector<double> masses)
    : inputs_(std::move(inputs)), masses_(std::move(masses)) {
    if (inputs_.size() != masses_.size())
        throw std::invalid_argument("one mass per evidence entry required");
}

double CombinedMass::mass_of(std::size_t class_index) const {
    for (std::size_t i = 0; i < inputs_.size(); ++i)
        if (inputs_[i].class_index == class_index) return masses_[i];
    return 0.0;
}

std::size_t CombinedMass::argmax_class() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < masses_.size(); ++i)
        if (masses_[i] > masses_[best]) best = i;
    return inputs_[best].class_index;
}

CombinedMass combine_feasible(const std::vector<ClassEvidence>& evidence) {
    check_evidence(evidence);
    const std::size_t n = evidence.size();

    std::size_t certain_count = 0;
    std::size_t certain_at = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (evidence[i].p == 1.0) {
            ++certain_count;
            certain_at = i;
        }
    }
    if (certain_count >= 2) throw TotalConflictError();
    if (certain_count == 1) {
        // Every other numerator carries the (1 - 1) factor.
        std::vector<double> masses(n, 0.0);
        masses[certain_at] = 1.0;
        return CombinedMass(evidence, std::move(masses));
    }
    if (std::all_of(evidence.begin(), evidence.end(),
                    [](const ClassEvidence& e) { return e.p == 0.0; }))
        throw TotalConflictError();

    // log numerator_k = log p_k + sum_{j != k} log(1 - p_j); all p < 1 here.
    double total_log1m = 0.0;
    for (const auto& e : evidence) total_log1m += std::log1p(-e.p);

    std::vector<double> log_num(n, -std::numeric_limits<double>::infinity());
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (evidence[i].p == 0.0) continue;  // zero singleton mass
        log_num[i] = std::log(evidence[i].p) + total_log1m - std::log1p(-evidence[i].p);
        max_log = std::max(max_log, log_num[i]);
    }

    std::vector<double> masses(n, 0.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isinf(log_num[i])) continue;
        masses[i] = std::exp(log_num[i] - max_log);
        norm += masses[i];
    }
    for (double& m : masses) m /= norm;
    return CombinedMass(evidence, std::move(masses));
}

CombinedMass combine_bruteforce(const std::vector<ClassEvidence>& evidence,
                                std::size_t max_sources) {
    check_evidence(evidence);
    const std::size_t n = evidence.size();
    if (n > max_sources)
        throw std::length_error("brute-force combination limited to " +
                                std::to_string(max_sources) + " evidence sources");

    // Enumerate every assignment H_k in {C_k, complement}. A product lands
    // in numerator k when exactly hypothesis k is the singleton; any other
    // cardinality has an empty intersection and feeds the conflict sum.
    // Accumulated in extended precision: the final 1 - conflict subtraction
    // cancels catastrophically in double when the surviving mass is small.
    std::vector<accum_t> numerator(n, accum_t(0));
    accum_t conflict = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        accum_t product = 1;
        for (std::size_t k = 0; k < n; ++k) {
            const double p = evidence[k].p;
            product *= (bits >> k) & 1u ? accum_t(p) : accum_t(1.0 - p);
        }
        if (std::popcount(bits) == 1) {
            std::size_t k = 0;
            while (!((bits >> k) & 1u)) ++k;
            numerator[k] += product;
        } else {
            conflict += product;
        }
    }

    if (std::all_of(numerator.begin(), numerator.end(),
                    [](accum_t v) { return v == accum_t(0); }))
        throw TotalConflictError();

    const accum_t denominator = accum_t(1) - conflict;
    std::vector<double> masses(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        masses[i] = static_cast<double>(numerator[i] / denominator);
    return CombinedMass(evidence, std::move(masses));
}

BeliefPlausibility belief_plausibility(const CombinedMass& cm, std::size_t class_index) {
    BeliefPlausibility bp;
    bp.belief = cm.mass_of(class_index);
    double others = 0.0;
    for (std::size_t i = 0; i < cm.size(); ++i)
        if (cm.inputs()[i].class_index != class_index) others += cm.masses()[i];
    bp.plausibility = 1.0 - others;
    return bp;
}

}  // namespace keyrule
