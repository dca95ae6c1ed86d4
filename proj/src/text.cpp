#include "keyrule/text.hpp"

#include <stdexcept>

namespace keyrule {

namespace {

bool is_lower_alpha(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

NormalizedDocument NormalizedDocument::normalize(std::string_view raw) {
    std::string padded;
    padded.reserve(raw.size() + 2);
    padded.push_back(' ');
    for (char c : raw) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (is_lower_alpha(c)) {
            padded.push_back(c);
        } else if (padded.back() != ' ') {
            padded.push_back(' ');
        }
    }
    if (padded.back() != ' ') padded.push_back(' ');
    return NormalizedDocument(std::move(padded));
}

NormalizedDocument NormalizedDocument::from_normalized(std::string_view text) {
    if (text.empty()) return NormalizedDocument();
    bool prev_space = true;  // catches a leading space
    for (char c : text) {
        if (c == ' ') {
            if (prev_space)
                throw std::invalid_argument("not normalized: repeated or leading space");
            prev_space = true;
        } else if (is_lower_alpha(c)) {
            prev_space = false;
        } else {
            throw std::invalid_argument("not normalized: character outside {a..z, ' '}");
        }
    }
    if (prev_space) throw std::invalid_argument("not normalized: trailing space");
    std::string padded;
    padded.reserve(text.size() + 2);
    padded.push_back(' ');
    padded.append(text);
    padded.push_back(' ');
    return NormalizedDocument(std::move(padded));
}

Pattern::Pattern(std::string chars) : chars_(std::move(chars)) {
    if (!valid(chars_))
        throw std::invalid_argument("pattern must be 1..15 characters from {a..z, ' '}");
}

bool Pattern::valid(std::string_view chars) {
    if (chars.empty() || chars.size() > kMaxLength) return false;
    for (char c : chars)
        if (c != ' ' && !is_lower_alpha(c)) return false;
    return true;
}

bool contains(const NormalizedDocument& doc, const Pattern& pat) {
    return doc.padded().find(pat.chars()) != std::string::npos;
}

}  // namespace keyrule
