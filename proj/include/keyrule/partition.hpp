#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keyrule/text.hpp"

namespace keyrule {

/// Ordered set of key sub-strings for one class. The order is fixed at
/// creation and defines the bit positions of the induced partitions.
class WordSet {
public:
    /// Throws std::invalid_argument when empty or containing duplicates.
    explicit WordSet(std::vector<Pattern> patterns);

    std::size_t size() const { return patterns_.size(); }
    const Pattern& at(std::size_t i) const { return patterns_.at(i); }
    const std::vector<Pattern>& patterns() const { return patterns_; }

    auto begin() const { return patterns_.begin(); }
    auto end() const { return patterns_.end(); }

    bool operator==(const WordSet& other) const = default;

private:
    std::vector<Pattern> patterns_;
};

/// The in/out split of a word set induced by a document, encoded as a
/// bit pattern: bit i is 1 iff pattern i is present. The first pattern
/// maps to the most significant bit, so the rendering of {first=1,
/// second=0} is "10" and its integer key is 0b10.
class Partition {
public:
    Partition(std::uint32_t value, std::size_t width);

    std::uint32_t value() const { return value_; }
    std::size_t width() const { return width_; }

    bool pattern_present(std::size_t i) const {
        return (value_ >> (width_ - 1 - i)) & 1u;
    }

    /// "10", "110", ... most significant bit first.
    std::string bit_string() const;

    /// Inverse of bit_string. Throws std::invalid_argument on anything
    /// other than a non-empty string of 0s and 1s.
    static Partition from_bit_string(std::string_view bits);

    bool operator==(const Partition& other) const = default;
    auto operator<=>(const Partition& other) const = default;

private:
    std::uint32_t value_;
    std::size_t width_;
};

/// In-class / out-of-class counts for one partition.
struct PartitionStats {
    std::uint64_t in_count = 0;
    std::uint64_t out_count = 0;

    std::uint64_t total() const { return in_count + out_count; }

    bool operator==(const PartitionStats& other) const = default;
};

/// in_count / (in_count + out_count). Throws std::domain_error when the
/// partition has no observations (callers must apply the unseen-partition
/// policy instead).
double precision(const PartitionStats& stats);

/// Partition table keyed by the integer partition value; only partitions
/// actually induced during counting are present.
using PartitionTable = std::map<std::uint32_t, PartitionStats>;

/// One class label with its word set and partition count table.
class ClassModel {
public:
    ClassModel(std::string label, WordSet word_set, PartitionTable table);

    const std::string& label() const { return label_; }
    const WordSet& word_set() const { return word_set_; }
    const PartitionTable& table() const { return table_; }

    bool operator==(const ClassModel& other) const = default;

private:
    std::string label_;
    WordSet word_set_;
    PartitionTable table_;
};

/// The single partition a document induces: bit i set iff pattern i
/// occurs in the document.
Partition induce(const WordSet& word_set, const NormalizedDocument& doc);

/// Corpus document paired with its in-class flag.
using FlaggedDocument = std::pair<NormalizedDocument, bool>;

/// Count how many in-class and out-of-class documents induce each
/// partition. Partitions induced by no document are absent.
PartitionTable count_corpus(const WordSet& word_set,
                            const std::vector<FlaggedDocument>& docs);

/// Field-wise addition; counting a concatenated corpus equals merging
/// the counts of its parts.
PartitionTable merge_counts(const PartitionTable& a, const PartitionTable& b);

struct LookupResult {
    Partition induced;
    std::optional<PartitionStats> stats;  // nullopt: unseen partition

    bool unseen() const { return !stats.has_value(); }
};

/// Induce the document's partition and fetch its stats, or report the
/// partition as unseen when it never occurred in training.
LookupResult lookup(const ClassModel& model, const NormalizedDocument& doc);

}  // namespace keyrule
