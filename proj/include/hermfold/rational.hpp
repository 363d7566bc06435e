#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hermfold {

// Exact rational number with a canonical representation: the denominator is
// always positive and gcd(|num|, den) == 1.  All dimension and rate
// bookkeeping in this project goes through this type so that quantities like
// 43/2 are never rounded.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(long long num, long long den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    // Valid only when is_integer().
    long long as_integer() const {
        if (!is_integer()) throw std::domain_error("rational: not an integer");
        return num_;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // "p/q" in lowest terms, or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_;
    long long den_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace hermfold
