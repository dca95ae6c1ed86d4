#pragma once

#include <string>
#include <string_view>

namespace keyrule {

/// A document reduced to the matching alphabet: lowercase a-z words
/// separated by single spaces, no leading or trailing whitespace.
///
/// For substring matching the document is treated as bounded by one
/// space on each side, so space-anchored patterns (" cts", " net ")
/// can match at the document edges. The same boundary convention is
/// used everywhere a pattern is tested against a document.
class NormalizedDocument {
public:
    NormalizedDocument() : padded_(" ") {}

    /// Lowercase ASCII letters, map every other byte to whitespace,
    /// collapse whitespace runs. Total: accepts any byte sequence.
    static NormalizedDocument normalize(std::string_view raw);

    /// Wrap text that already satisfies the invariants.
    /// Throws std::invalid_argument otherwise.
    static NormalizedDocument from_normalized(std::string_view text);

    /// The normalized text (trimmed, single-spaced).
    std::string_view text() const {
        std::string_view p(padded_);
        p.remove_prefix(1);
        if (!p.empty()) p.remove_suffix(1);
        return p;
    }

    /// The text with the one-space boundary on each side.
    const std::string& padded() const { return padded_; }

    bool empty() const { return padded_.size() <= 2; }

    bool operator==(const NormalizedDocument& other) const = default;

private:
    explicit NormalizedDocument(std::string padded) : padded_(std::move(padded)) {}

    // " " + text + " "; just " " when the text is empty.
    std::string padded_;
};

/// A key sub-string: 1..15 characters from {a..z, ' '}.
/// Leading/trailing spaces are significant (they anchor the pattern
/// to word or document boundaries).
class Pattern {
public:
    static constexpr std::size_t kMaxLength = 15;

    /// Throws std::invalid_argument when the invariants are violated.
    explicit Pattern(std::string chars);

    static bool valid(std::string_view chars);

    const std::string& chars() const { return chars_; }
    std::size_t length() const { return chars_.size(); }

    bool operator==(const Pattern& other) const = default;
    auto operator<=>(const Pattern& other) const = default;

private:
    std::string chars_;
};

/// True iff the pattern occurs as a contiguous substring of the
/// space-bounded document. Raw containment, not token matching:
/// "arrel" matches "barrels".
bool contains(const NormalizedDocument& doc, const Pattern& pat);

}  // namespace keyrule
