#pragma once

#include <string>
#include <vector>

#include "triplecover/big_int.hpp"

namespace triplecover {

/// Dense homogeneous polynomial in two variables x, y with integer
/// coefficients. coeff(i) multiplies x^i y^(degree-i), so the coefficient
/// sequence has length degree+1. The zero polynomial of any degree is
/// representable (all coefficients zero).
class HomogPoly {
public:
    /// Zero polynomial of the given degree.
    explicit HomogPoly(int degree);

    /// coeffs[i] is the coefficient of x^i y^(degree-i); size must be degree+1.
    HomogPoly(int degree, std::vector<BigInt> coeffs);

    /// c * x^x_exp * y^(degree - x_exp).
    static HomogPoly monomial(int degree, int x_exp, BigInt c = BigInt(1));

    int degree() const { return degree_; }
    const BigInt& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    bool operator==(const HomogPoly& o) const { return degree_ == o.degree_ && coeffs_ == o.coeffs_; }
    bool operator!=(const HomogPoly& o) const { return !(*this == o); }

    /// Human-readable form, e.g. "x^2 - y^2".
    std::string str() const;

private:
    int degree_;
    std::vector<BigInt> coeffs_;
};

/// Exact product; degree = deg p + deg q, coefficients are integer convolutions.
HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q);

HomogPoly derivative_x(const HomogPoly& p);
HomogPoly derivative_y(const HomogPoly& p);

/// Whether p has no repeated irreducible factor over the algebraic closure.
/// Decided by gcd(p, dp/dx, dp/dy) being a constant, which catches repeated
/// factors of x and of y symmetrically. Throws std::invalid_argument for the
/// zero polynomial, which has no squarefree status.
bool is_squarefree(const HomogPoly& p);

/// Greatest common divisor, primitive with positive leading coefficient.
/// gcd(p, 0) = primitive part of p. Exposed for tests and diagnostics.
HomogPoly poly_gcd(const HomogPoly& p, const HomogPoly& q);

}  // namespace triplecover
