// quadratic.hpp -- exact arithmetic in the quadratic field Q(sqrt(D)) of the
// incidence matrix. Every sign decision downstream of the eigen-decomposition
// goes through this type; no floating point is involved anywhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <sstream>
#include <string>

namespace subcomplex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigRat& r) {
    return r.sign();
}

inline BigInt isqrt_floor(const BigInt& n) {
    assert(n >= 0);
    return boost::multiprecision::sqrt(n);
}

/// Value rational_part + radical_part * sqrt(disc), disc >= 0. When disc is a
/// perfect square the radical folds into the rational part on construction, so
/// integer-eigenvalue matrices degenerate to plain rational arithmetic.
class QuadraticNumber {
public:
    QuadraticNumber() = default;

    QuadraticNumber(BigRat rational, BigRat radical, BigInt disc)
        : rat_(std::move(rational)), rad_(std::move(radical)), disc_(std::move(disc)) {
        assert(disc_ >= 0);
        BigInt root = isqrt_floor(disc_);
        if (root * root == disc_) {
            rat_ += rad_ * BigRat(root);
            rad_ = 0;
            disc_ = 0;
        }
        if (rad_ == 0) disc_ = 0;
    }

    explicit QuadraticNumber(BigRat rational) : rat_(std::move(rational)) {}
    explicit QuadraticNumber(std::int64_t n) : rat_(n) {}

    const BigRat& rational_part() const noexcept { return rat_; }
    const BigRat& radical_part() const noexcept { return rad_; }
    const BigInt& discriminant() const noexcept { return disc_; }

    bool is_zero() const noexcept { return rat_ == 0 && rad_ == 0; }
    bool is_rational() const noexcept { return rad_ == 0; }

    /// Exact sign in {-1, 0, +1}, decided by comparing squares when the two
    /// parts have opposite signs.
    int sign() const {
        int sr = sign_of(rat_);
        int sq = sign_of(rad_);
        if (sq == 0) return sr;
        if (sr == 0) return sq; // disc_ > 0 here: a square disc would have folded
        if (sr == sq) return sr;
        BigRat lhs = rat_ * rat_;
        BigRat rhs = rad_ * rad_ * BigRat(disc_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sr : sq;
    }

    QuadraticNumber operator-() const {
        QuadraticNumber r(*this);
        r.rat_ = -r.rat_;
        r.rad_ = -r.rad_;
        return r;
    }

    QuadraticNumber operator+(const QuadraticNumber& o) const {
        return make(rat_ + o.rat_, rad_ + o.rad_, joint_disc(o));
    }
    QuadraticNumber operator-(const QuadraticNumber& o) const {
        return make(rat_ - o.rat_, rad_ - o.rad_, joint_disc(o));
    }
    QuadraticNumber operator*(const QuadraticNumber& o) const {
        BigInt d = joint_disc(o);
        return make(rat_ * o.rat_ + rad_ * o.rad_ * BigRat(d),
                    rat_ * o.rad_ + rad_ * o.rat_, d);
    }
    QuadraticNumber operator/(const QuadraticNumber& o) const {
        assert(!o.is_zero());
        BigInt d = joint_disc(o);
        // multiply by the conjugate; the norm is rational and nonzero
        BigRat norm = o.rat_ * o.rat_ - o.rad_ * o.rad_ * BigRat(d);
        assert(norm != 0);
        QuadraticNumber conj = make(o.rat_, -o.rad_, d);
        QuadraticNumber num = *this * conj;
        return make(num.rat_ / norm, num.rad_ / norm, d);
    }

    bool operator==(const QuadraticNumber& o) const { return (*this - o).is_zero(); }
    bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadraticNumber& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadraticNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadraticNumber& o) const { return (*this - o).sign() >= 0; }

    QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }

    /// "p + q*sqrt(D)" with exact rationals; plain "p" when rational.
    std::string str() const {
        std::ostringstream os;
        if (rad_ == 0) {
            os << rat_;
            return os.str();
        }
        os << rat_;
        os << (sign_of(rad_) < 0 ? " - " : " + ");
        BigRat a = rad_ < 0 ? BigRat(-rad_) : rad_;
        if (a != 1) os << a << "*";
        os << "sqrt(" << disc_ << ")";
        return os.str();
    }

private:
    static QuadraticNumber make(BigRat p, BigRat q, BigInt d) {
        return QuadraticNumber(std::move(p), std::move(q), std::move(d));
    }
    // Numbers with rad_ == 0 carry disc_ == 0 and combine with any field.
    BigInt joint_disc(const QuadraticNumber& o) const {
        if (disc_ == 0) return o.disc_;
        if (o.disc_ == 0) return disc_;
        assert(disc_ == o.disc_);
        return disc_;
    }

    BigRat rat_ = 0;
    BigRat rad_ = 0;
    BigInt disc_ = 0;
};

} // namespace subcomplex
