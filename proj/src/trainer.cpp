#include "keyrule/trainer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace keyrule {

namespace {

// mt19937_64 is fully specified by the standard, and the rejection loop
// below avoids the implementation-defined std::uniform_int_distribution,
// so traces replay identically across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = engine_();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

    bool coin() { return engine_() & 1u; }

private:
    std::mt19937_64 engine_;
};

struct DocMask {
    std::vector<std::uint64_t> bits;

    explicit DocMask(std::size_t n_docs) : bits((n_docs + 63) / 64, 0) {}

    void set(std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }
};

std::uint64_t union_popcount(const std::vector<const DocMask*>& masks) {
    if (masks.empty()) return 0;
    std::uint64_t count = 0;
    const std::size_t words = masks.front()->bits.size();
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t merged = 0;
        for (const DocMask* m : masks) merged |= m->bits[w];
        count += std::popcount(merged);
    }
    return count;
}

FitnessReport report_from_counts(std::uint64_t t, std::uint64_t f, std::uint64_t d) {
    FitnessReport report;
    report.t_count = t;
    report.f_count = f;
    report.d = d;
    if (t > 0) {
        report.precision = static_cast<double>(t) / static_cast<double>(t + f);
        report.recall = static_cast<double>(t) / static_cast<double>(d);
        report.f_score = 2.0 * report.precision * report.recall /
                         (report.precision + report.recall);
    }
    return report;
}

// Memoizes per-pattern document coverage so re-evaluating a mutated word
// set touches only the pattern that changed.
class CoverageCache {
public:
    CoverageCache(const std::vector<NormalizedDocument>& in_docs,
                  const std::vector<NormalizedDocument>& out_docs)
        : in_docs_(in_docs), out_docs_(out_docs) {}

    FitnessReport evaluate(const std::vector<Pattern>& patterns) {
        std::vector<const DocMask*> in_masks, out_masks;
        in_masks.reserve(patterns.size());
        out_masks.reserve(patterns.size());
        for (const Pattern& p : patterns) {
            const Entry& e = entry(p);
            in_masks.push_back(&e.in_mask);
            out_masks.push_back(&e.out_mask);
        }
        return report_from_counts(union_popcount(in_masks),
                                  union_popcount(out_masks), in_docs_.size());
    }

private:
    struct Entry {
        DocMask in_mask;
        DocMask out_mask;
    };

    const Entry& entry(const Pattern& p) {
        auto it = cache_.find(p.chars());
        if (it != cache_.end()) return it->second;
        Entry e{DocMask(in_docs_.size()), DocMask(out_docs_.size())};
        for (std::size_t i = 0; i < in_docs_.size(); ++i)
            if (contains(in_docs_[i], p)) e.in_mask.set(i);
        for (std::size_t i = 0; i < out_docs_.size(); ++i)
            if (contains(out_docs_[i], p)) e.out_mask.set(i);
        return cache_.emplace(p.chars(), std::move(e)).first->second;
    }

    const std::vector<NormalizedDocument>& in_docs_;
    const std::vector<NormalizedDocument>& out_docs_;
    std::unordered_map<std::string, Entry> cache_;
};

class PatternSampler {
public:
    PatternSampler(const std::vector<NormalizedDocument>& in_docs,
                   const std::vector<NormalizedDocument>& out_docs,
                   std::size_t max_pattern_len, Rng& rng)
        : in_docs_(in_docs), out_docs_(out_docs),
          max_len_(std::min(max_pattern_len, Pattern::kMaxLength)), rng_(rng) {}

    // Substring of a document drawn with equal chance from the two
    // pools; the padded text keeps boundary-anchored candidates
    // (" cts", " net ") reachable.
    Pattern sample() {
        const auto& pool = pick_pool();
        const NormalizedDocument& doc = pool[rng_.below(pool.size())];
        const std::string& text = doc.padded();
        const std::size_t len = 1 + rng_.below(std::min(max_len_, text.size()));
        const std::size_t start = rng_.below(text.size() - len + 1);
        return Pattern(text.substr(start, len));
    }

private:
    const std::vector<NormalizedDocument>& pick_pool() {
        if (out_docs_.empty()) return in_docs_;
        if (in_docs_.empty()) return out_docs_;
        return rng_.coin() ? in_docs_ : out_docs_;
    }

    const std::vector<NormalizedDocument>& in_docs_;
    const std::vector<NormalizedDocument>& out_docs_;
    std::size_t max_len_;
    Rng& rng_;
};

bool has_pattern(const std::vector<Pattern>& patterns, const Pattern& p) {
    return std::find(patterns.begin(), patterns.end(), p) != patterns.end();
}

std::uint64_t total_length(const WordSet& ws) {
    std::uint64_t sum = 0;
    for (const Pattern& p : ws) sum += p.length();
    return sum;
}

}  // namespace

int compare_f(const FitnessReport& a, const FitnessReport& b) {
    // F = 2t / (d + t + f); cross-multiply, denominators positive.
    const auto lhs = static_cast<unsigned __int128>(a.t_count) *
                     (b.d + b.t_count + b.f_count);
    const auto rhs = static_cast<unsigned __int128>(b.t_count) *
                     (a.d + a.t_count + a.f_count);
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

FitnessReport fitness(const WordSet& word_set,
                      const std::vector<NormalizedDocument>& in_docs,
                      const std::vector<NormalizedDocument>& out_docs) {
    if (in_docs.empty())
        throw std::invalid_argument("fitness requires at least one in-class document");
    auto covered = [&](const NormalizedDocument& doc) {
        for (const Pattern& p : word_set)
            if (contains(doc, p)) return true;
        return false;
    };
    std::uint64_t t = 0, f = 0;
    for (const auto& doc : in_docs)
        if (covered(doc)) ++t;
    for (const auto& doc : out_docs)
        if (covered(doc)) ++f;
    return report_from_counts(t, f, in_docs.size());
}

Preferred prefer(const WordSet& a, const FitnessReport& fa,
                 const WordSet& b, const FitnessReport& fb) {
    const int f_order = compare_f(fa, fb);
    if (f_order > 0) return Preferred::first;
    if (f_order < 0) return Preferred::second;
    if (a.size() < b.size()) return Preferred::first;
    if (b.size() < a.size()) return Preferred::second;
    // Equal counts: mean length order equals total length order.
    const std::uint64_t len_a = total_length(a), len_b = total_length(b);
    if (len_a > len_b) return Preferred::first;
    if (len_b > len_a) return Preferred::second;
    return Preferred::first;
}

SearchResult search(const std::vector<NormalizedDocument>& in_docs,
                    const std::vector<NormalizedDocument>& out_docs,
                    const SearchConfig& config) {
    if (in_docs.empty())
        throw std::invalid_argument("search requires at least one in-class document");
    if (config.max_patterns < 1)
        throw std::invalid_argument("max_patterns must be >= 1");
    if (config.max_pattern_len < 1 || config.max_pattern_len > Pattern::kMaxLength)
        throw std::invalid_argument("max_pattern_len must lie in [1, 15]");

    Rng rng(config.rng_seed);
    PatternSampler sampler(in_docs, out_docs, config.max_pattern_len, rng);
    CoverageCache cache(in_docs, out_docs);

    // Random initial set; duplicates are redrawn a bounded number of
    // times, settling for a smaller set if the corpus is too uniform.
    std::vector<Pattern> incumbent;
    const std::size_t init_size = 1 + rng.below(config.max_patterns);
    for (std::size_t i = 0; i < init_size; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            Pattern candidate = sampler.sample();
            if (!has_pattern(incumbent, candidate)) {
                incumbent.push_back(std::move(candidate));
                break;
            }
        }
    }

    WordSet incumbent_set(incumbent);
    FitnessReport incumbent_fit = cache.evaluate(incumbent);

    std::vector<TraceEntry> trace;
    if (config.record_trace) trace.reserve(config.iteration_budget);

    for (std::uint64_t iter = 1; iter <= config.iteration_budget; ++iter) {
        // Moves legal at the current size, picked uniformly.
        std::vector<char> moves{'c'};
        if (incumbent.size() < config.max_patterns) moves.push_back('a');
        if (incumbent.size() > 1) moves.push_back('r');
        const char move = moves[rng.below(moves.size())];

        std::vector<Pattern> candidate = incumbent;
        bool valid = true;
        switch (move) {
            case 'a': {
                Pattern p = sampler.sample();
                if (has_pattern(candidate, p))
                    valid = false;
                else
                    candidate.push_back(std::move(p));
                break;
            }
            case 'r': {
                candidate.erase(candidate.begin() +
                                static_cast<std::ptrdiff_t>(rng.below(candidate.size())));
                break;
            }
            case 'c': {
                const std::size_t at = rng.below(candidate.size());
                Pattern p = sampler.sample();
                candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(at));
                if (has_pattern(candidate, p))
                    valid = false;
                else
                    candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(at),
                                     std::move(p));
                break;
            }
        }

        if (!valid) {
            if (config.record_trace)
                trace.push_back({iter, move,
                                 std::numeric_limits<double>::quiet_NaN(), false});
            continue;
        }

        WordSet candidate_set(candidate);
        FitnessReport candidate_fit = cache.evaluate(candidate);
        const bool accepted = prefer(candidate_set, candidate_fit, incumbent_set,
                                     incumbent_fit) == Preferred::first;
        if (config.record_trace)
            trace.push_back({iter, move, candidate_fit.f_score, accepted});
        if (accepted) {
            incumbent = std::move(candidate);
            incumbent_set = std::move(candidate_set);
            incumbent_fit = candidate_fit;
        }
    }

    return SearchResult{std::move(incumbent_set), incumbent_fit, std::move(trace)};
}

}  // namespace keyrule
