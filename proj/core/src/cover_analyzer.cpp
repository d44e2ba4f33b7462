#include "triplecover/cover_analyzer.hpp"

#include <stdexcept>

#include "triplecover/cohomology.hpp"

namespace triplecover {

// Keeps every degree and dimension the analyzer derives inside long long.
constexpr int kMaxDimension = 10'000;
constexpr long long kMaxDegree = 1'000'000'000'000LL;

CoverParams::CoverParams(int m_in, long long r_in, int cover_degree_in)
    : m(m_in), r(r_in), cover_degree(cover_degree_in) {
    if (m < 2) {
        throw std::domain_error("cover dimension m must be at least 2");
    }
    if (m > kMaxDimension) {
        throw std::domain_error("cover dimension m exceeds the supported bound " +
                                std::to_string(kMaxDimension));
    }
    if (r < 1) {
        throw std::domain_error("target degree r must be at least 1");
    }
    if (r > kMaxDegree) {
        throw std::domain_error("target degree r exceeds the supported bound " +
                                std::to_string(kMaxDegree));
    }
    if (cover_degree != 3) {
        throw std::domain_error("only cover degree 3 is supported");
    }
    if (m % 2 == 1 && r % 2 == 1) {
        throw std::domain_error(
            "Theorem 3.1: r must be even (odd-dimensional covers force an even target degree; "
            "got m = " + std::to_string(m) + ", r = " + std::to_string(r) + ")");
    }
}

SplittingType splitting(const CoverParams& params) {
    const long long mr = static_cast<long long>(params.m) * params.r;
    return {(mr + 2) / 2, mr + 2};
}

BlockDims block_dims(const CoverParams& params, int n) {
    if (n < 0) {
        throw std::invalid_argument("block_dims: exponent must be non-negative");
    }
    const long long m = params.m;
    const long long r = params.r;
    BlockDims b;
    b.n = n;
    b.deg_a = n * r;
    b.deg_b = ((2 * n - m) * r - 2) / 2;  // integral: m*r is even for accepted params
    b.deg_c = (n - m) * r - 2;
    b.dim_a = h_p1(b.deg_a, 0);
    b.dim_b = h_p1(b.deg_b, 0);
    b.dim_c = h_p1(b.deg_c, 0);
    return b;
}

ImageProfile beta_image(const CoverParams& params, int s1, int s2) {
    if (s1 < 0 || s2 < 0) {
        throw std::invalid_argument("beta_image: exponents must be non-negative");
    }
    const BlockDims b1 = block_dims(params, s1);
    const BlockDims b2 = block_dims(params, s2);
    const BlockDims bt = block_dims(params, s1 + s2);

    ImageProfile p;
    p.s1 = s1;
    p.s2 = s2;
    p.covers_a = true;
    p.covers_b = b1.dim_b > 0 || b2.dim_b > 0;
    p.covers_c = b1.dim_c > 0 || b2.dim_c > 0 || (b1.dim_b > 0 && b2.dim_b > 0);
    p.image_dim = bt.dim_a + (p.covers_b ? bt.dim_b : 0) + (p.covers_c ? bt.dim_c : 0);
    p.codim = bt.h0() - p.image_dim;
    return p;
}

GeneratorProfile generator_profile(const CoverParams& params) {
    GeneratorProfile profile;
    profile.new_generators[1] = params.r + params.m;
    for (int n = 2; n <= params.m + 2; ++n) {
        const BlockDims bd = block_dims(params, n);
        bool b_covered = false;
        bool c_covered = false;
        for (int s = 1; s < n; ++s) {
            const ImageProfile ip = beta_image(params, s, n - s);
            b_covered = b_covered || ip.covers_b;
            c_covered = c_covered || ip.covers_c;
        }
        const long long covered =
            bd.dim_a + (b_covered ? bd.dim_b : 0) + (c_covered ? bd.dim_c : 0);
        const long long fresh = bd.h0() - covered;
        if (n == params.m + 2 && fresh != 0) {
            throw std::logic_error("generator_profile: multiplication must surject from degree "
                                   "m+2 on, got a fresh generator");
        }
        if (fresh > 0) {
            profile.new_generators[n] = fresh;
        }
    }
    return profile;
}

long long lift_codim(const CoverParams& params, int s1, int s2) {
    if (s1 < 1 || s2 < 1) {
        throw std::invalid_argument("lift_codim: both exponents must be at least 1");
    }
    for (int s = 1; s < s1; ++s) {
        if (beta_image(params, s, s2).codim != 0) {
            throw std::domain_error(
                "Lemma 2.3 hypothesis not met: beta(" + std::to_string(s) + ", " +
                std::to_string(s2) + ") does not surject");
        }
    }
    return beta_image(params, s1, s2).codim;
}

std::string to_string(N0Status s) {
    switch (s) {
        case N0Status::Holds: return "Holds";
        case N0Status::Fails: return "Fails";
        case N0Status::Unknown: return "Unknown";
    }
    return "?";
}

N0Verdict n0_status(const CoverParams& params, int n) {
    if (n < 1) {
        throw std::invalid_argument("n0_status: power must be at least 1");
    }
    const int m = params.m;
    if (m % 2 == 1) {
        const bool holds = n >= (m + 1) / 2;
        return {holds ? N0Status::Holds : N0Status::Fails, "Theorem 2.9"};
    }
    if (params.r == 1) {
        const bool holds = n >= (m + 2) / 2;
        return {holds ? N0Status::Holds : N0Status::Fails, "Theorem 2.13 (1)"};
    }
    if (n <= m / 2) {
        return {N0Status::Fails, "Theorem 2.13 (2)"};
    }
    if (n >= m + 1) {
        return {N0Status::Holds, "Theorem 2.13 (2)"};
    }
    return {N0Status::Unknown, "Question 2.14"};
}

}  // namespace triplecover
