#include "triplecover/homog_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace triplecover {

namespace {

// Univariate helpers on coefficient vectors (index = power of t), used by the
// homogeneous gcd below. Vectors are kept trimmed: back() != 0 unless empty.

using UniPoly = std::vector<BigInt>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

BigInt content(const UniPoly& p) {
    BigInt c(0);
    for (const BigInt& a : p) {
        c = big_gcd(c, a);
        if (c == 1) break;
    }
    return c;
}

// Divides by the content and fixes the sign of the leading coefficient.
UniPoly primitive(UniPoly p) {
    trim(p);
    if (p.empty()) return p;
    BigInt c = content(p);
    if (p.back() < 0) c = -c;
    if (c != 1) {
        for (BigInt& a : p) {
            a /= c;
        }
    }
    return p;
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lead_b = b.back();
    while (a.size() >= b.size()) {
        trim(a);
        if (a.size() < b.size()) break;
        const std::size_t shift = a.size() - b.size();
        const BigInt q = a.back();
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            a[i] *= lead_b;
        }
        for (std::size_t i = 0; i < db; ++i) {
            a[shift + i] -= q * b[i];
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

// Primitive polynomial remainder sequence.
UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        UniPoly r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

struct MonomialSplit {
    int x_mult = 0;   // multiplicity of the factor x
    int y_mult = 0;   // multiplicity of the factor y
    UniPoly core;     // dehomogenized core, nonzero constant term, exact degree
};

MonomialSplit split_monomial_part(const HomogPoly& p) {
    MonomialSplit s;
    int lo = -1;
    int hi = -1;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) != 0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    s.x_mult = lo;
    s.y_mult = p.degree() - hi;
    s.core.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (int i = lo; i <= hi; ++i) {
        s.core.push_back(p.coeff(i));
    }
    return s;
}

HomogPoly assemble(int x_mult, int y_mult, const UniPoly& core) {
    const int deg = x_mult + y_mult + static_cast<int>(core.size()) - 1;
    std::vector<BigInt> coeffs(static_cast<std::size_t>(deg) + 1);
    for (std::size_t j = 0; j < core.size(); ++j) {
        coeffs[static_cast<std::size_t>(x_mult) + j] = core[j];
    }
    return HomogPoly(deg, std::move(coeffs));
}

}  // namespace

HomogPoly::HomogPoly(int degree) : degree_(degree) {
    if (degree < 0) {
        throw std::invalid_argument("HomogPoly: negative degree");
    }
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
}

HomogPoly::HomogPoly(int degree, std::vector<BigInt> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) {
        throw std::invalid_argument("HomogPoly: negative degree");
    }
    if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
        throw std::invalid_argument("HomogPoly: coefficient count must be degree+1");
    }
}

HomogPoly HomogPoly::monomial(int degree, int x_exp, BigInt c) {
    if (x_exp < 0 || x_exp > degree) {
        throw std::invalid_argument("HomogPoly::monomial: exponent out of range");
    }
    HomogPoly p(degree);
    p.coeffs_[static_cast<std::size_t>(x_exp)] = std::move(c);
    return p;
}

bool HomogPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::string HomogPoly::str() const {
    std::string out;
    for (int i = degree_; i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool first = out.empty();
        BigInt a = c;
        if (a < 0) {
            out += first ? "-" : " - ";
            a = -a;
        } else if (!first) {
            out += " + ";
        }
        const int xe = i;
        const int ye = degree_ - i;
        std::string mono;
        if (xe > 0) mono += (xe == 1) ? "x" : "x^" + std::to_string(xe);
        if (ye > 0) {
            if (!mono.empty()) mono += "*";
            mono += (ye == 1) ? "y" : "y^" + std::to_string(ye);
        }
        if (mono.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += mono;
        }
    }
    return out.empty() ? "0" : out;
}

HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q) {
    HomogPoly res(p.degree() + q.degree());
    std::vector<BigInt> coeffs(static_cast<std::size_t>(res.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        for (int j = 0; j <= q.degree(); ++j) {
            if (q.coeff(j) == 0) continue;
            BigInt& slot = coeffs[static_cast<std::size_t>(i + j)];
            mpz_addmul(slot.get_mpz_t(), p.coeff(i).get_mpz_t(), q.coeff(j).get_mpz_t());
        }
    }
    return HomogPoly(p.degree() + q.degree(), std::move(coeffs));
}

HomogPoly derivative_x(const HomogPoly& p) {
    if (p.degree() == 0) {
        return HomogPoly(0);
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
        coeffs[static_cast<std::size_t>(i - 1)] = BigInt(i) * p.coeff(i);
    }
    return HomogPoly(p.degree() - 1, std::move(coeffs));
}

HomogPoly derivative_y(const HomogPoly& p) {
    if (p.degree() == 0) {
        return HomogPoly(0);
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) {
        coeffs[static_cast<std::size_t>(i)] = BigInt(p.degree() - i) * p.coeff(i);
    }
    return HomogPoly(p.degree() - 1, std::move(coeffs));
}

HomogPoly poly_gcd(const HomogPoly& p, const HomogPoly& q) {
    const bool pz = p.is_zero();
    const bool qz = q.is_zero();
    if (pz && qz) {
        return HomogPoly(0);
    }
    if (pz || qz) {
        const MonomialSplit s = split_monomial_part(pz ? q : p);
        return assemble(s.x_mult, s.y_mult, primitive(s.core));
    }
    const MonomialSplit sp = split_monomial_part(p);
    const MonomialSplit sq = split_monomial_part(q);
    const UniPoly g = uni_gcd(sp.core, sq.core);
    return assemble(std::min(sp.x_mult, sq.x_mult), std::min(sp.y_mult, sq.y_mult), g);
}

bool is_squarefree(const HomogPoly& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("zero polynomial has no squarefree status");
    }
    if (p.degree() == 0) {
        return true;
    }
    const HomogPoly g = poly_gcd(poly_gcd(p, derivative_x(p)), derivative_y(p));
    return g.degree() == 0;
}

}  // namespace triplecover
