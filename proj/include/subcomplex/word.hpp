// word.hpp -- finite binary words, Parikh vectors, prefix/suffix machinery

#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace subcomplex {

/// One of the two letters of the alphabet. The total order a < b is fixed.
enum class Letter : char { A = 'a', B = 'b' };

constexpr std::array<Letter, 2> kAlphabet{Letter::A, Letter::B};

constexpr char to_char(Letter l) noexcept { return static_cast<char>(l); }

constexpr Letter other(Letter l) noexcept {
    return l == Letter::A ? Letter::B : Letter::A;
}

inline Letter letter_from_char(char c) {
    if (c == 'a') return Letter::A;
    if (c == 'b') return Letter::B;
    throw Error(std::string("invalid letter '") + c + "' (alphabet is {a, b})");
}

/// Index 0 for a, 1 for b; the canonical byte encoding used for ordering and hashing.
constexpr int letter_index(Letter l) noexcept { return l == Letter::A ? 0 : 1; }

/// An immutable finite word over {a, b}. Indexing is 0-based internally;
/// user-facing reports convert to 1-based positions.
class Word {
public:
    Word() = default;

    explicit Word(std::string_view text) : text_(text) {
        for (char c : text_) {
            if (c != 'a' && c != 'b')
                throw Error(std::string("invalid letter '") + c + "' in word \"" +
                            std::string(text) + "\"");
        }
    }

    static Word single(Letter l) { return Word(std::string(1, to_char(l)), unchecked_tag{}); }

    /// Internal: adopt a string already known to be over {a, b}.
    struct unchecked_tag {};
    Word(std::string text, unchecked_tag) : text_(std::move(text)) {}

    std::size_t size() const noexcept { return text_.size(); }
    bool empty() const noexcept { return text_.empty(); }
    std::string_view text() const noexcept { return text_; }

    Letter at(std::size_t i) const {
        assert(i < text_.size());
        return static_cast<Letter>(text_[i]);
    }
    Letter front() const { return at(0); }
    Letter back() const { return at(text_.size() - 1); }

    Word substr(std::size_t pos, std::size_t len) const {
        return Word(text_.substr(pos, len), unchecked_tag{});
    }
    Word prefix(std::size_t len) const { return substr(0, len); }
    Word suffix(std::size_t len) const {
        assert(len <= text_.size());
        return substr(text_.size() - len, len);
    }

    Word operator+(const Word& rhs) const { return Word(text_ + rhs.text_, unchecked_tag{}); }
    Word operator+(Letter l) const { return Word(text_ + to_char(l), unchecked_tag{}); }
    friend Word operator+(Letter l, const Word& w) {
        return Word(to_char(l) + w.text_, unchecked_tag{});
    }

    // 'a' < 'b' in the underlying bytes, so this matches the canonical order.
    auto operator<=>(const Word&) const = default;

    /// Human-readable form: the empty word renders as "ε".
    std::string display() const { return text_.empty() ? std::string("\xCE\xB5") : text_; }

private:
    std::string text_;
};

inline Word word(std::string_view text) { return Word(text); }

/// Letter-count vector L(w) = (|w|_a, |w|_b).
struct ParikhVector {
    std::int64_t count_a = 0;
    std::int64_t count_b = 0;

    std::int64_t sum() const noexcept { return count_a + count_b; }
    bool operator==(const ParikhVector&) const = default;
    ParikhVector operator+(const ParikhVector& rhs) const {
        return {count_a + rhs.count_a, count_b + rhs.count_b};
    }
    ParikhVector operator-(const ParikhVector& rhs) const {
        return {count_a - rhs.count_a, count_b - rhs.count_b};
    }
};

inline ParikhVector parikh(const Word& w) {
    ParikhVector v;
    for (char c : w.text())
        (c == 'a' ? v.count_a : v.count_b)++;
    return v;
}

/// All length-n contiguous blocks of w. {ε} for n = 0, empty for n > |w|.
inline std::set<Word> factors_of(const Word& w, std::size_t n) {
    std::set<Word> out;
    if (n == 0) {
        out.insert(Word());
        return out;
    }
    if (n > w.size()) return out;
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        out.insert(w.substr(i, n));
    return out;
}

inline bool is_prefix(const Word& v, const Word& w) {
    return v.size() <= w.size() && w.text().substr(0, v.size()) == v.text();
}

inline bool is_suffix(const Word& v, const Word& w) {
    return v.size() <= w.size() && w.text().substr(w.size() - v.size()) == v.text();
}

/// Suffix comparability: v is a suffix of w or w is a suffix of v.
inline bool comparable_suffix(const Word& v, const Word& w) {
    return is_suffix(v, w) || is_suffix(w, v);
}

inline Word longest_common_suffix(const Word& v, const Word& w) {
    std::size_t n = 0;
    std::size_t limit = std::min(v.size(), w.size());
    while (n < limit && v.text()[v.size() - 1 - n] == w.text()[w.size() - 1 - n])
        ++n;
    return v.suffix(n);
}

} // namespace subcomplex

template <>
struct std::hash<subcomplex::Word> {
    std::size_t operator()(const subcomplex::Word& w) const noexcept {
        return std::hash<std::string_view>{}(w.text());
    }
};
