#include "keyrule/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace keyrule {

namespace {

void check_gate(const Gate& gate) {
    if (!(gate.q >= 0.0 && gate.q < 1.0))
        throw std::invalid_argument("gate threshold q must lie in [0, 1)");
}

// Scores carry the frame index of every class with defined evidence.
struct Scored {
    std::size_t class_index;
    double score;
};

Decision decide(std::vector<ClassDetail> detail, const std::vector<Scored>& scores,
                double q) {
    Decision decision;
    decision.detail = std::move(detail);
    if (scores.empty()) {
        decision.verdict = Decision::Verdict::abstain_all_unseen;
        return decision;
    }
    double best = scores.front().score;
    for (const Scored& s : scores) best = std::max(best, s.score);
    decision.score = best;
    if (!(best > q)) {
        decision.verdict = Decision::Verdict::abstain_below_threshold;
        return decision;
    }
    std::vector<std::size_t> winners;
    for (const Scored& s : scores)
        if (s.score == best) winners.push_back(s.class_index);
    if (winners.size() > 1) {
        decision.verdict = Decision::Verdict::abstain_tie;
        decision.tie_indices = std::move(winners);
        return decision;
    }
    decision.verdict = Decision::Verdict::assigned;
    decision.assigned_index = winners.front();
    return decision;
}

}  // namespace

const char* verdict_name(Decision::Verdict v) {
    switch (v) {
        case Decision::Verdict::assigned: return "assigned";
        case Decision::Verdict::abstain_below_threshold: return "below-threshold";
        case Decision::Verdict::abstain_total_conflict: return "total-conflict";
        case Decision::Verdict::abstain_all_unseen: return "all-unseen";
        case Decision::Verdict::abstain_tie: return "tie";
    }
    return "?";
}

Decision classify(const MultiClassModel& model, const NormalizedDocument& doc,
                  const Gate& gate) {
    check_gate(gate);
    const std::size_t n = model.frame().size();

    std::vector<ClassDetail> detail;
    detail.reserve(n);
    std::vector<ClassEvidence> evidence;  // classes with a seen partition
    for (std::size_t k = 0; k < n; ++k) {
        const LookupResult lookup_result = lookup(model.model(k), doc);
        ClassDetail d{model.frame().label(k), lookup_result.induced, std::nullopt,
                      std::nullopt};
        if (!lookup_result.unseen()) {
            d.p = precision(*lookup_result.stats);
            evidence.push_back(ClassEvidence{k, *d.p});
        }
        detail.push_back(std::move(d));
    }

    if (gate.mode == Gate::Mode::precision) {
        std::vector<Scored> scores;
        scores.reserve(evidence.size());
        for (const ClassEvidence& e : evidence)
            scores.push_back(Scored{e.class_index, e.p});
        return decide(std::move(detail), scores, gate.q);
    }

    // Plausibility mode: combine the defined evidence; unseen partitions
    // stay vacuous and can never be selected.
    if (evidence.empty()) return decide(std::move(detail), {}, gate.q);
    std::vector<Scored> scores;
    try {
        const CombinedMass cm = combine_feasible(evidence);
        scores.reserve(cm.size());
        for (std::size_t i = 0; i < cm.size(); ++i) {
            const std::size_t k = cm.inputs()[i].class_index;
            detail[k].mass = cm.masses()[i];
            scores.push_back(Scored{k, cm.masses()[i]});
        }
    } catch (const TotalConflictError&) {
        Decision decision;
        decision.detail = std::move(detail);
        decision.verdict = Decision::Verdict::abstain_total_conflict;
        return decision;
    }
    return decide(std::move(detail), scores, gate.q);
}

EvalReport evaluate(const MultiClassModel& model,
                    const std::vector<EvalDocument>& corpus, const Gate& gate) {
    check_gate(gate);
    EvalReport report;
    report.gate = gate;
    report.documents = corpus.size();

    const std::size_t n = model.frame().size();
    report.per_class.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        report.per_class[k].label = model.frame().label(k);

    for (const auto& [doc, gold_label] : corpus) {
        const std::size_t gold = model.frame().index_of(gold_label);
        if (gold < n) ++report.per_class[gold].total_in_class;

        const Decision decision = classify(model, doc, gate);
        if (decision.assigned()) {
            ++report.assigned_total;
            ClassEval& assigned_class = report.per_class[*decision.assigned_index];
            ++assigned_class.assigned;
            if (*decision.assigned_index == gold) ++assigned_class.correct;
        } else {
            ++report.abstained_total;
            if (gold < n) ++report.per_class[gold].abstained_in_class;
        }
    }

    for (ClassEval& c : report.per_class) {
        if (c.assigned > 0)
            c.precision = static_cast<double>(c.correct) / static_cast<double>(c.assigned);
        if (c.total_in_class > 0)
            c.recall = static_cast<double>(c.correct) / static_cast<double>(c.total_in_class);
    }
    return report;
}

std::vector<AuditRow> audit_report(const MultiClassModel& model,
                                   const CountsByClass& train_counts,
                                   const CountsByClass& test_counts, double alpha) {
    std::vector<AuditRow> rows;
    for (std::size_t k = 0; k < model.frame().size(); ++k) {
        const std::string& label = model.frame().label(k);
        const std::size_t width = model.model(k).word_set().size();

        const auto train_it = train_counts.find(label);
        const auto test_it = test_counts.find(label);
        const PartitionTable empty;
        const PartitionTable& train = train_it == train_counts.end() ? empty : train_it->second;
        const PartitionTable& test = test_it == test_counts.end() ? empty : test_it->second;

        std::map<std::uint32_t, char> seen;  // deterministic row order
        for (const auto& [value, _] : train) seen[value] |= 1;
        for (const auto& [value, _] : test) seen[value] |= 2;

        for (const auto& [value, where] : seen) {
            AuditRow row;
            row.class_label = label;
            row.partition_bits = Partition(value, width).bit_string();
            if (where == 1) {
                row.train = train.at(value);
                row.status = AuditRow::Status::only_in_train;
            } else if (where == 2) {
                row.test = test.at(value);
                row.status = AuditRow::Status::only_in_test;
            } else {
                row.train = train.at(value);
                row.test = test.at(value);
                try {
                    row.test_result = two_sided_t(row.train.in_count, row.train.out_count,
                                                  row.test.in_count, row.test.out_count,
                                                  alpha);
                    row.status = AuditRow::Status::compared;
                } catch (const std::domain_error&) {
                    row.status = AuditRow::Status::degenerate_pool;
                } catch (const std::invalid_argument&) {
                    row.status = AuditRow::Status::degenerate_pool;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

bool has_rejections(const std::vector<AuditRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const AuditRow& r) {
        return r.test_result && r.test_result->reject;
    });
}

}  // namespace keyrule
