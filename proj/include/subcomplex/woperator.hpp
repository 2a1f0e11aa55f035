// woperator.hpp -- the boundary word W0 with its marker letters, the operator
// T(W) = W0 σ(W), exact length recurrences for |σ^n(W)| and |T^n(W)|, and the
// final-sign (fsgn) decision in the quadratic field of the incidence matrix.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quadratic.hpp"
#include "substitution.hpp"
#include "word.hpp"

namespace subcomplex {

/// W0 = longest common suffix of the left-infinite powers A^∞ and B^∞, the
/// distinct letters delta_a/delta_b immediately preceding it in each power,
/// and the constant a = |σ(W0)| - (tr(M) - 1)|W0| of the T-length recurrence.
struct SeedData {
    Word w0;
    Letter delta_a = Letter::B;
    Letter delta_b = Letter::A;
    std::int64_t offset_a = 0;
};

/// Suffix of the left-infinite power ...XXX of the given length.
inline Word power_suffix(const Word& block, std::size_t len) {
    std::string out;
    out.reserve(len);
    std::size_t n = block.size();
    for (std::size_t i = 0; i < len; ++i)
        out += block.text()[(n - 1 - (i % n))];
    // built right-to-left above; reverse into reading order
    std::string rev(out.rbegin(), out.rend());
    return Word(std::move(rev), Word::unchecked_tag{});
}

/// Compute W0 and its markers by materializing suffixes of A^∞ and B^∞ of
/// length |A| + |B| - 1. A common suffix that long contradicts aperiodicity
/// (Fine–Wilf), which is reported as Periodic.
inline SeedData compute_seed(const NormalizedSubstitution& ns) {
    const Word& a = ns.normalized.image_a;
    const Word& b = ns.normalized.image_b;
    std::size_t window = a.size() + b.size() - 1;
    Word sa = power_suffix(a, window);
    Word sb = power_suffix(b, window);
    Word w0 = longest_common_suffix(sa, sb);
    if (w0.size() >= window)
        throw PeriodicError("A^inf and B^inf agree on a suffix of length " +
                            std::to_string(window) + "; the fixed point is periodic");
    SeedData seed;
    seed.delta_a = sa.at(sa.size() - w0.size() - 1);
    seed.delta_b = sb.at(sb.size() - w0.size() - 1);
    seed.w0 = std::move(w0);
    std::int64_t tr = incidence(ns.normalized).trace();
    seed.offset_a = static_cast<std::int64_t>(apply(ns.normalized, seed.w0).size()) -
                    (tr - 1) * static_cast<std::int64_t>(seed.w0.size());
    return seed;
}

/// T(W) = W0 σ(W). Injective; preserves prefix and suffix order.
inline Word t_apply(const SeedData& seed, const Substitution& s, const Word& w) {
    return seed.w0 + apply(s, w);
}

/// |σ^n(w)| by the Cayley–Hamilton recurrence
/// x(k+2) = tr(M) x(k+1) - det(M) x(k), started from |w| and |σ(w)|.
inline BigInt sigma_length(const Substitution& s, const Word& w, int n) {
    IncidenceMatrix m = incidence(s);
    ParikhVector l = parikh(w);
    BigInt x0 = l.sum();
    BigInt x1 = m.apply_to(l).sum();
    if (n == 0) return x0;
    BigInt tr = m.trace(), det = m.determinant();
    for (int k = 1; k < n; ++k) {
        BigInt x2 = tr * x1 - det * x0;
        x0 = std::move(x1);
        x1 = std::move(x2);
    }
    return x1;
}

/// |T^n(w)| by the affine recurrence
/// x(k+2) = tr(M) x(k+1) - det(M) x(k) + a, with a from SeedData.
inline BigInt t_length(const SeedData& seed, const Substitution& s, const Word& w, int n) {
    IncidenceMatrix m = incidence(s);
    ParikhVector l = parikh(w);
    BigInt x0 = l.sum();
    if (n == 0) return x0;
    BigInt x1 = BigInt(seed.w0.size()) + m.apply_to(l).sum();
    BigInt tr = m.trace(), det = m.determinant(), a = seed.offset_a;
    for (int k = 1; k < n; ++k) {
        BigInt x2 = tr * x1 - det * x0 + a;
        x0 = std::move(x1);
        x1 = std::move(x2);
    }
    return x1;
}

/// Eigen data of a primitive incidence matrix over Q(sqrt(D)).
/// Eigenvectors are taken as V_i = (m01, λ_i - m00); m01 > 0 for primitive M.
struct EigenData {
    BigInt tr, det, disc;
    QuadraticNumber lambda1, lambda2;
    std::int64_t m00 = 0, m01 = 0;

    QuadraticNumber row_sum(const QuadraticNumber& lambda) const {
        // (1,1) * V for V = (m01, lambda - m00)
        return QuadraticNumber(BigRat(m01)) + lambda - QuadraticNumber(BigRat(m00));
    }
};

inline EigenData eigen_data(const IncidenceMatrix& m) {
    EigenData e;
    e.tr = m.trace();
    e.det = m.determinant();
    e.disc = m.discriminant();
    e.m00 = m.m[0][0];
    e.m01 = m.m[0][1];
    BigRat half_tr(e.tr, 2);
    e.lambda1 = QuadraticNumber(half_tr, BigRat(1, 2), e.disc);
    e.lambda2 = QuadraticNumber(half_tr, BigRat(-1, 2), e.disc);
    return e;
}

/// Eigenbasis coordinates (mu1, mu2) of an integer vector d: d = mu1 V1 + mu2 V2.
inline std::pair<QuadraticNumber, QuadraticNumber>
eigen_coordinates(const EigenData& e, const ParikhVector& d) {
    // m01 mu1 + m01 mu2 = d0 ; (λ1 - m00) mu1 + (λ2 - m00) mu2 = d1
    QuadraticNumber d0{BigRat(d.count_a)}, d1{BigRat(d.count_b)};
    QuadraticNumber m01{BigRat(e.m01)}, m00{BigRat(e.m00)};
    QuadraticNumber denom = m01 * (e.lambda1 - e.lambda2); // m01 * sqrt(D) != 0
    QuadraticNumber mu1 = (d1 * m01 - (e.lambda2 - m00) * d0) / denom;
    QuadraticNumber mu2 = d0 / m01 - mu1;
    return {mu1, mu2};
}

/// Eventual sign of |T^k(w1)| - |T^k(w2)| (equivalently |σ^k(w1)| - |σ^k(w2)|;
/// the W0 telescoping terms cancel). Decided exactly: the sign of the dominant
/// eigencomponent, falling back to the λ2 component when it vanishes.
inline int fsgn(const IncidenceMatrix& m, const ParikhVector& x, const ParikhVector& y) {
    ParikhVector d = x - y;
    if (d.count_a == 0 && d.count_b == 0) return 0;
    EigenData e = eigen_data(m);
    auto [mu1, mu2] = eigen_coordinates(e, d);
    int s1 = (mu1 * e.row_sum(e.lambda1)).sign();
    if (s1 != 0) return s1;
    return (e.lambda2 * mu2 * e.row_sum(e.lambda2)).sign();
}

inline int fsgn(const NormalizedSubstitution& ns, const Word& w1, const Word& w2) {
    return fsgn(incidence(ns.normalized), parikh(w1), parikh(w2));
}

/// Decide whether every term of x(k+2) = tr x(k+1) - det x(k), started from
/// (x0, x1), satisfies x(k) > 0 (strict) or x(k) >= 0. Exact: writes
/// x(k) = c1 λ1^k + c2 λ2^k and scans until the dominant term provably wins.
inline bool recurrence_all_positive(const EigenData& e, const BigInt& x0, const BigInt& x1,
                                    bool strict) {
    auto ok = [&](const BigInt& v) { return strict ? v > 0 : v >= 0; };
    QuadraticNumber q0{BigRat(x0)}, q1{BigRat(x1)};
    QuadraticNumber denom = e.lambda1 - e.lambda2; // sqrt(D) > 0 for primitive M
    QuadraticNumber c1 = (q1 - e.lambda2 * q0) / denom;
    QuadraticNumber c2 = (e.lambda1 * q0 - q1) / denom;

    int sc1 = c1.sign();
    if (sc1 < 0) return false;
    if (sc1 == 0) {
        // x(k) = c2 λ2^k for k >= 1 (and x0 = c2)
        if (e.det == 0) return ok(x0) && ok(x1) && (!strict || x1 > 0);
        int sc2 = c2.sign();
        if (strict) return sc2 > 0;
        return sc2 >= 0;
    }

    // c1 > 0: once c1 λ1^k > |c2| λ2^k, every later term is positive.
    QuadraticNumber dom = c1;
    QuadraticNumber sub = c2.abs();
    BigInt tr = e.tr, det = e.det;
    BigInt a = x0, b = x1;
    for (int k = 0; k < 20000; ++k) {
        if (dom > sub) return true;
        if (!ok(a)) return false;
        dom = dom * e.lambda1;
        sub = sub * e.lambda2;
        BigInt c = tr * b - det * a;
        a = std::move(b);
        b = std::move(c);
    }
    throw Error("recurrence_all_positive: dominance scan did not terminate");
}

/// Exact stream of T-orbit lengths |T^k(seed)| with a sign and the alignment
/// shift chosen by the jump schedule.
struct TOrbit {
    Word seed;
    int sgn = 0;       // +1 strong, -1 weak
    int alignment = 0; // n_k: schedule counts from |T^{alignment}(seed)|

    Substitution sub;
    SeedData seed_data;

    const BigInt& length_at(int k) const {
        while (static_cast<int>(cache_.size()) <= k) grow();
        return cache_[static_cast<std::size_t>(k)];
    }
    /// Breakpoint stream N^j = |T^{alignment + j}(seed)|.
    const BigInt& aligned_length(int j) const { return length_at(alignment + j); }

private:
    void grow() const {
        if (cache_.empty()) {
            cache_.push_back(t_length(seed_data, sub, seed, 0));
            return;
        }
        if (cache_.size() == 1) {
            cache_.push_back(t_length(seed_data, sub, seed, 1));
            return;
        }
        IncidenceMatrix m = incidence(sub);
        BigInt next = BigInt(m.trace()) * cache_[cache_.size() - 1] -
                      BigInt(m.determinant()) * cache_[cache_.size() - 2] + seed_data.offset_a;
        cache_.push_back(std::move(next));
    }
    mutable std::vector<BigInt> cache_;
};

enum class AlignmentKind { Synchronized, Interleaved };

inline const char* to_string(AlignmentKind k) {
    return k == AlignmentKind::Synchronized ? "synchronized" : "interleaved";
}

struct OrbitAlignment {
    int m1 = 0;
    int m2 = 0;
    AlignmentKind kind = AlignmentKind::Synchronized;
};

/// Find shifts realizing one of the Corollary alternatives: either the two
/// length streams coincide from (m1, m2) on, or they strictly interleave
/// |T^{m1}(w1)| < |T^{m2}(w2)| < |T^{m1+1}(w1)| < ... forever. Both outcomes
/// are certified exactly (a difference stream that starts with two zeros is
/// identically zero; interleaving uses recurrence_all_positive).
inline OrbitAlignment orbit_alignment(const SeedData& seed, const Substitution& s,
                                      const Word& w1, const Word& w2, int budget = 64) {
    EigenData e = eigen_data(incidence(s));
    auto len1 = [&](int k) { return t_length(seed, s, w1, k); };
    auto len2 = [&](int k) { return t_length(seed, s, w2, k); };
    for (int total = 0; total <= 2 * budget; ++total) {
        for (int m1 = std::max(0, total - budget); m1 <= std::min(total, budget); ++m1) {
            int m2 = total - m1;
            BigInt a0 = len1(m1), a1 = len1(m1 + 1), a2 = len1(m1 + 2);
            BigInt b0 = len2(m2), b1 = len2(m2 + 1);
            if (a0 == b0 && a1 == b1)
                return {m1, m2, AlignmentKind::Synchronized};
            if (recurrence_all_positive(e, b0 - a0, b1 - a1, true) &&
                recurrence_all_positive(e, a1 - b0, a2 - b1, true))
                return {m1, m2, AlignmentKind::Interleaved};
        }
    }
    throw AlignmentBudgetError("no orbit alignment within shift budget " +
                               std::to_string(budget));
}

} // namespace subcomplex
