// substitution.hpp -- binary substitutions, incidence matrices, the
// normalization pipeline (rotate / square-for-marking / square-for-determinant),
// and the substitution spec file format.

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "word.hpp"

namespace subcomplex {

/// A non-erasing morphism on {a, b}*, given by the images of the two letters.
struct Substitution {
    Word image_a{std::string("a"), Word::unchecked_tag{}};
    Word image_b{std::string("b"), Word::unchecked_tag{}};

    Substitution() = default;
    Substitution(Word a, Word b) : image_a(std::move(a)), image_b(std::move(b)) {
        if (image_a.empty() || image_b.empty())
            throw ErasingError("letter image must not be empty");
    }
    Substitution(std::string_view a, std::string_view b) : Substitution(Word(a), Word(b)) {}

    const Word& image(Letter l) const noexcept {
        return l == Letter::A ? image_a : image_b;
    }

    bool operator==(const Substitution&) const = default;
};

/// Letterwise extension of the morphism to words.
inline Word apply(const Substitution& s, const Word& w) {
    std::string out;
    out.reserve(w.size() * std::max(s.image_a.size(), s.image_b.size()));
    for (char c : w.text())
        out += (c == 'a' ? s.image_a : s.image_b).text();
    return Word(std::move(out), Word::unchecked_tag{});
}

inline Substitution compose(const Substitution& outer, const Substitution& inner) {
    return Substitution(apply(outer, inner.image_a), apply(outer, inner.image_b));
}

/// 2x2 non-negative integer matrix whose column k is the Parikh vector of the
/// image of letter k. Row index: 0 counts a's, 1 counts b's.
struct IncidenceMatrix {
    std::int64_t m[2][2] = {{1, 0}, {0, 1}};

    std::int64_t trace() const noexcept { return m[0][0] + m[1][1]; }
    std::int64_t determinant() const noexcept { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    /// tr(M)^2 - 4 det(M); the discriminant of the characteristic polynomial.
    std::int64_t discriminant() const noexcept {
        return trace() * trace() - 4 * determinant();
    }

    bool all_positive() const noexcept {
        return m[0][0] > 0 && m[0][1] > 0 && m[1][0] > 0 && m[1][1] > 0;
    }

    IncidenceMatrix operator*(const IncidenceMatrix& rhs) const noexcept {
        IncidenceMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
        return r;
    }

    IncidenceMatrix pow(int n) const noexcept {
        IncidenceMatrix r, base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    ParikhVector apply_to(const ParikhVector& v) const noexcept {
        return {m[0][0] * v.count_a + m[0][1] * v.count_b,
                m[1][0] * v.count_a + m[1][1] * v.count_b};
    }

    bool operator==(const IncidenceMatrix&) const = default;
};

inline IncidenceMatrix incidence(const Substitution& s) {
    IncidenceMatrix r;
    ParikhVector la = parikh(s.image_a), lb = parikh(s.image_b);
    r.m[0][0] = la.count_a;
    r.m[1][0] = la.count_b;
    r.m[0][1] = lb.count_a;
    r.m[1][1] = lb.count_b;
    return r;
}

/// "λ² - tr λ + det" rendered with explicit signs, e.g. "λ² - 3λ + 1".
inline std::string characteristic_polynomial(const IncidenceMatrix& m) {
    auto term = [](std::int64_t c, const std::string& var) {
        std::string s = c < 0 ? " - " : " + ";
        std::int64_t a = c < 0 ? -c : c;
        if (var.empty()) return s + std::to_string(a);
        return s + (a == 1 ? var : std::to_string(a) + var);
    };
    std::string p = "\xCE\xBB\xC2\xB2"; // λ²
    if (std::int64_t t = m.trace(); t != 0) p += term(-t, "\xCE\xBB");
    if (std::int64_t d = m.determinant(); d != 0) p += term(d, "");
    return p;
}

/// Primitivity for dimension 2: some power of M is entrywise positive iff
/// M or M² already is (Wielandt bound (n-1)² + 1 = 2).
inline bool is_primitive(const IncidenceMatrix& m) {
    return m.all_positive() || (m * m).all_positive();
}

inline bool is_marked(const Substitution& s) {
    return s.image_a.front() != s.image_b.front();
}

inline bool is_well_marked(const Substitution& s) {
    return s.image_a.front() == Letter::A && s.image_b.front() == Letter::B;
}

/// The result of the normalization pipeline: `normalized` is well-marked with
/// det(M) >= 0 and shares the language of `base`.
struct NormalizedSubstitution {
    Substitution base;
    Substitution normalized;
    /// normalized = (rotated base)^power
    int power = 1;
    /// Common image prefix the base was rotated by (empty when no rotation ran).
    Word conjugator;
    bool marked = false;
    bool well_marked = false;
    bool det_nonnegative = false;
    bool primitive = false;
    /// Largest bound the Morse-Hedlund aperiodicity test has passed (0 = untested).
    int aperiodic_up_to = 0;
};

/// Bring a substitution to well-marked form with non-negative determinant:
/// (i) if the images share a first letter, rotate both by their maximal common
/// prefix (an inner automorphism, which preserves the language); (ii) square
/// once if marked but not well-marked; (iii) square once more if det < 0.
inline NormalizedSubstitution normalize(const Substitution& input) {
    NormalizedSubstitution out;
    out.base = input;

    Substitution cur = input;
    if (!is_marked(cur)) {
        std::string_view a = cur.image_a.text(), b = cur.image_b.text();
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        Word common(std::string(a.substr(0, k)), Word::unchecked_tag{});
        Word ua(std::string(a.substr(k)), Word::unchecked_tag{});
        Word vb(std::string(b.substr(k)), Word::unchecked_tag{});
        cur = Substitution(ua + common, vb + common);
        out.conjugator = common;
        if (!is_marked(cur))
            throw NotMarkableError("images still share a first letter after rotating by \"" +
                                   common.display() + "\"");
    }
    out.marked = true;

    out.power = 1;
    if (!is_well_marked(cur)) {
        cur = compose(cur, cur);
        out.power *= 2;
        if (!is_well_marked(cur))
            throw NotMarkableError("square of the marked substitution is not well-marked");
    }
    if (incidence(cur).determinant() < 0) {
        cur = compose(cur, cur);
        out.power *= 2;
    }

    out.normalized = std::move(cur);
    out.well_marked = true;
    out.det_nonnegative = true;
    out.primitive = is_primitive(incidence(out.normalized));
    return out;
}

/// The shortest iterate σ^k(seed) of length >= min_len. Requires the image of
/// the seed letter to begin with the seed letter, so that each iterate is a
/// prefix of the next (and of the fixed point).
inline Word fixed_point_prefix(const NormalizedSubstitution& ns, Letter seed,
                               std::size_t min_len) {
    const Substitution& s = ns.normalized;
    if (s.image(seed).front() != seed)
        throw SeedNotExtendableError(std::string("image of '") + to_char(seed) +
                                     "' does not begin with it");
    Word w = Word::single(seed);
    while (w.size() < min_len)
        w = apply(s, w);
    return w;
}

/// Parse the two-line spec format:
///   a -> <word>
///   b -> <word>
/// Blank lines and lines starting with '#' are ignored.
inline Substitution parse_substitution_spec(std::istream& in) {
    std::optional<Word> image_a, image_b;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError(lineno, "expected '<letter> -> <word>'");
        std::string lhs = line.substr(start, arrow - start);
        while (!lhs.empty() && (lhs.back() == ' ' || lhs.back() == '\t')) lhs.pop_back();
        if (lhs != "a" && lhs != "b")
            throw ParseError(lineno, "left-hand side must be 'a' or 'b', got \"" + lhs + "\"");
        std::string rhs = line.substr(arrow + 2);
        std::string img;
        for (char c : rhs) {
            if (c == ' ' || c == '\t' || c == '\r') continue;
            if (c != 'a' && c != 'b')
                throw ParseError(lineno, std::string("invalid letter '") + c + "' in image");
            img += c;
        }
        if (img.empty()) throw ParseError(lineno, "empty image for '" + lhs + "'");
        auto& slot = (lhs == "a") ? image_a : image_b;
        if (slot) throw ParseError(lineno, "duplicate image for '" + lhs + "'");
        slot = Word(std::move(img), Word::unchecked_tag{});
    }
    if (!image_a) throw ParseError(lineno, "missing image for 'a'");
    if (!image_b) throw ParseError(lineno, "missing image for 'b'");
    return Substitution(*image_a, *image_b);
}

inline Substitution parse_substitution_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_substitution_spec(in);
}

inline std::string format_substitution(const Substitution& s) {
    return "a -> " + std::string(s.image_a.text()) + ", b -> " + std::string(s.image_b.text());
}

} // namespace subcomplex
