#include "triplecover/big_rational.hpp"

#include <stdexcept>
#include <utility>

namespace triplecover {

BigRational::BigRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw std::invalid_argument("BigRational: zero denominator");
    }
    normalize();
}

void BigRational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = big_gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigRational BigRational::operator+(const BigRational& o) const {
    return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BigRational BigRational::operator-(const BigRational& o) const {
    return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BigRational BigRational::operator*(const BigRational& o) const {
    return BigRational(num_ * o.num_, den_ * o.den_);
}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.num_ == 0) {
        throw std::invalid_argument("BigRational: division by zero");
    }
    return BigRational(num_ * o.den_, den_ * o.num_);
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::string BigRational::str() const {
    if (den_ == 1) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

}  // namespace triplecover
