#pragma once

#include <cstdint>
#include <vector>

#include "keyrule/partition.hpp"
#include "keyrule/text.hpp"

namespace keyrule {

/// Coverage-based fitness of a word set: a document counts as covered
/// when at least one pattern occurs in it.
///
///   P = t / (t + f),  R = t / d,  F = 2PR / (P + R)  (0 when t = 0)
///
/// with t covered in-class documents, f covered out-of-class documents,
/// d total in-class documents.
struct FitnessReport {
    std::uint64_t t_count = 0;
    std::uint64_t f_count = 0;
    std::uint64_t d = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
};

/// Exact F comparison via integer cross-multiplication
/// (F = 2t / (d + t + f)); avoids float ties.
int compare_f(const FitnessReport& a, const FitnessReport& b);

FitnessReport fitness(const WordSet& word_set,
                      const std::vector<NormalizedDocument>& in_docs,
                      const std::vector<NormalizedDocument>& out_docs);

enum class Preferred { first, second };

/// Rank two candidate solutions: higher F wins; on equal F the one with
/// fewer patterns wins, then the one with larger mean pattern length;
/// a full tie keeps the first argument.
Preferred prefer(const WordSet& a, const FitnessReport& fa,
                 const WordSet& b, const FitnessReport& fb);

struct SearchConfig {
    std::size_t max_patterns = 2;
    std::size_t max_pattern_len = 15;
    std::uint64_t iteration_budget = 50000;
    std::uint64_t rng_seed = 1;
    bool record_trace = true;
};

/// One search iteration for the audit trace. move: 'a' add, 'r' remove,
/// 'c' change. candidate_f is NaN when the mutation produced an invalid
/// set (duplicate pattern) and was rejected unevaluated.
struct TraceEntry {
    std::uint64_t iteration = 0;
    char move = '?';
    double candidate_f = 0.0;
    bool accepted = false;
};

struct SearchResult {
    WordSet word_set;
    FitnessReport fitness;
    std::vector<TraceEntry> trace;
};

/// Stochastic hill climb over word sets: random initial set built from
/// document substrings, then add/remove/change mutations with the
/// candidate substring drawn from a document picked with equal chance
/// from the in-class and out-of-class pools. A candidate replaces the
/// incumbent when prefer() ranks it first. Deterministic for a fixed
/// seed. Throws std::invalid_argument when in_docs is empty.
SearchResult search(const std::vector<NormalizedDocument>& in_docs,
                    const std::vector<NormalizedDocument>& out_docs,
                    const SearchConfig& config);

}  // namespace keyrule
