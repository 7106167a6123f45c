#include "persuasion/rational.hpp"

#include <ostream>

namespace persuasion {

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string &text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error &) {
        throw InvalidRational("malformed rational: " + text);
    }
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
}

}  // namespace persuasion
