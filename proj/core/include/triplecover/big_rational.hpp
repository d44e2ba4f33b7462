#pragma once

#include <string>

#include "triplecover/big_int.hpp"

namespace triplecover {

/// Exact rational number. Invariants: always stored in lowest terms and the
/// denominator is strictly positive.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt numerator, BigInt denominator);
    explicit BigRational(BigInt integer) : num_(std::move(integer)), den_(1) {}
    explicit BigRational(long value) : num_(value), den_(1) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;  // throws on division by zero
    BigRational operator-() const;

    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    bool operator<(const BigRational& o) const { return num_ * o.den_ < o.num_ * den_; }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

}  // namespace triplecover
