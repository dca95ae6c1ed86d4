#include "keyrule/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace keyrule {

WordSet::WordSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty())
        throw std::invalid_argument("word set must hold at least one pattern");
    for (std::size_t i = 0; i < patterns_.size(); ++i)
        for (std::size_t j = i + 1; j < patterns_.size(); ++j)
            if (patterns_[i] == patterns_[j])
                throw std::invalid_argument("word set holds duplicate pattern: \"" +
                                            patterns_[i].chars() + "\"");
}

Partition::Partition(std::uint32_t value, std::size_t width)
    : value_(value), width_(width) {
    if (width == 0 || width > 32)
        throw std::invalid_argument("partition width must be in [1, 32]");
    if (width < 32 && (value >> width) != 0)
        throw std::invalid_argument("partition value exceeds bit width");
}

std::string Partition::bit_string() const {
    std::string bits(width_, '0');
    for (std::size_t i = 0; i < width_; ++i)
        if (pattern_present(i)) bits[i] = '1';
    return bits;
}

Partition Partition::from_bit_string(std::string_view bits) {
    if (bits.empty() || bits.size() > 32)
        throw std::invalid_argument("partition bit string must have 1..32 digits");
    std::uint32_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("partition bit string may only contain 0/1");
        value = (value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return Partition(value, bits.size());
}

double precision(const PartitionStats& stats) {
    if (stats.total() == 0)
        throw std::domain_error("precision undefined for a partition with no observations");
    return static_cast<double>(stats.in_count) / static_cast<double>(stats.total());
}

ClassModel::ClassModel(std::string label, WordSet word_set, PartitionTable table)
    : label_(std::move(label)), word_set_(std::move(word_set)), table_(std::move(table)) {
    const std::uint32_t limit =
        word_set_.size() >= 32 ? 0xffffffffu
                               : (std::uint32_t{1} << word_set_.size()) - 1u;
    for (const auto& [value, stats] : table_) {
        if (value > limit)
            throw std::invalid_argument("partition key out of range for word set");
        if (stats.total() == 0)
            throw std::invalid_argument("stored partition must have at least one observation");
    }
}

Partition induce(const WordSet& word_set, const NormalizedDocument& doc) {
    std::uint32_t value = 0;
    for (const Pattern& pat : word_set)
        value = (value << 1) | (contains(doc, pat) ? 1u : 0u);
    return Partition(value, word_set.size());
}

PartitionTable count_corpus(const WordSet& word_set,
                            const std::vector<FlaggedDocument>& docs) {
    PartitionTable table;
    for (const auto& [doc, in_class] : docs) {
        PartitionStats& stats = table[induce(word_set, doc).value()];
        if (in_class)
            ++stats.in_count;
        else
            ++stats.out_count;
    }
    return table;
}

PartitionTable merge_counts(const PartitionTable& a, const PartitionTable& b) {
    PartitionTable merged = a;
    for (const auto& [value, stats] : b) {
        PartitionStats& slot = merged[value];
        slot.in_count += stats.in_count;
        slot.out_count += stats.out_count;
    }
    return merged;
}

LookupResult lookup(const ClassModel& model, const NormalizedDocument& doc) {
    Partition induced = induce(model.word_set(), doc);
    auto it = model.table().find(induced.value());
    if (it == model.table().end()) return LookupResult{induced, std::nullopt};
    return LookupResult{induced, it->second};
}

}  // namespace keyrule
