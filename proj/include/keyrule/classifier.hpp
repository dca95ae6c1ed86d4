#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "keyrule/model.hpp"
#include "keyrule/stats.hpp"

namespace keyrule {

/// Classification gate: assign only when the winning score strictly
/// exceeds q. Mode precision gates on the winning p_k, mode
/// plausibility on the winning combined mass (= bel = pl).
struct Gate {
    enum class Mode { precision, plausibility };
    Mode mode = Mode::precision;
    double q = 0.9;
};

/// Per-class audit detail attached to every decision.
struct ClassDetail {
    std::string label;
    Partition induced;
    std::optional<double> p;     // absent: partition unseen in training
    std::optional<double> mass;  // plausibility mode, classes with evidence
};

struct Decision {
    enum class Verdict {
        assigned,
        abstain_below_threshold,
        abstain_total_conflict,
        abstain_all_unseen,
        abstain_tie,
    };

    Verdict verdict = Verdict::abstain_all_unseen;
    std::optional<std::size_t> assigned_index;  // into the frame, when assigned
    std::optional<double> score;                // winning (or tied) score
    std::vector<std::size_t> tie_indices;       // populated for abstain_tie
    std::vector<ClassDetail> detail;            // one entry per frame class

    bool assigned() const { return verdict == Verdict::assigned; }
};

const char* verdict_name(Decision::Verdict v);

Decision classify(const MultiClassModel& model, const NormalizedDocument& doc,
                  const Gate& gate);

struct ClassEval {
    std::string label;
    std::uint64_t total_in_class = 0;  // gold-label documents in the corpus
    std::uint64_t assigned = 0;        // documents assigned this label
    std::uint64_t correct = 0;
    std::uint64_t abstained_in_class = 0;
    std::optional<double> precision;  // absent when nothing was assigned
    std::optional<double> recall;     // absent when the class has no documents
};

struct EvalReport {
    Gate gate;
    std::uint64_t documents = 0;
    std::uint64_t assigned_total = 0;
    std::uint64_t abstained_total = 0;
    std::vector<ClassEval> per_class;  // frame order
};

/// Gold-labeled document; labels outside the model's frame act as pure
/// negatives.
using EvalDocument = std::pair<NormalizedDocument, std::string>;

EvalReport evaluate(const MultiClassModel& model,
                    const std::vector<EvalDocument>& corpus, const Gate& gate);

/// Per-class partition tables, e.g. training vs testing counts.
using CountsByClass = std::map<std::string, PartitionTable>;

struct AuditRow {
    enum class Status {
        compared,        // two-sample test ran
        only_in_train,   // not comparable: absent from the test counts
        only_in_test,    // not comparable: absent from the training counts
        degenerate_pool, // pooled proportion 0 or 1, statistic undefined
    };

    std::string class_label;
    std::string partition_bits;
    PartitionStats train;
    PartitionStats test;
    Status status = Status::compared;
    std::optional<TwoSidedTest> test_result;  // present when compared
};

/// One row per (class, partition) seen in either count table, in frame
/// order then ascending partition value, testing train vs test precision.
std::vector<AuditRow> audit_report(const MultiClassModel& model,
                                   const CountsByClass& train_counts,
                                   const CountsByClass& test_counts, double alpha);

bool has_rejections(const std::vector<AuditRow>& rows);

}  // namespace keyrule
