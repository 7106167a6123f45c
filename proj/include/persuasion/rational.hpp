#ifndef PERSUASION_RATIONAL_HPP
#define PERSUASION_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "persuasion/errors.hpp"

namespace persuasion {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction. Always stored in lowest terms with a positive
// denominator, so equality is structural and serialization is canonical.
// No floating point anywhere.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw InvalidRational("zero denominator");
        normalize();
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(long long n) : num_(n), den_(1) {}

    static Rational parse(const std::string &text);

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    std::string str() const;  // "p/q", lowest terms

    friend Rational operator+(const Rational &a, const Rational &b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) throw InvalidRational("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational &operator+=(const Rational &b) { return *this = *this + b; }
    Rational &operator-=(const Rational &b) { return *this = *this - b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

  private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0
};

inline Rational rational(long long num, long long den) { return Rational(num, den); }

}  // namespace persuasion

#endif
