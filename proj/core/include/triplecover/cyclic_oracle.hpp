#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "triplecover/cover_analyzer.hpp"
#include "triplecover/homog_poly.hpp"

namespace triplecover {

enum class CoeffMode { DistinctRoots, SeededRandom };

/// An explicit cyclic triple cover z^3 = f(x, y) of the projective line with
/// branch degree d = 3*(mr+2)/2 and f squarefree, realizing the splitting
/// O + O(-d/3) + O(-2d/3).
///
/// Chart convention, fixed project-wide: a section u * z^k of theta^n
/// corresponds to u of P^1-degree n*r - k*(d/3).
struct OracleCover {
    CoverParams params;
    long long branch_degree;
    HomogPoly f;
    unsigned long seed;  // seed that produced f (SeededRandom only, else 0)
};

/// Monomial bases of the three blocks of H^0(theta^n): block k holds
/// u * z^k with u = x^i y^(deg-i), deg = n*r - k*(d/3). Monomials are listed
/// by their x-exponent; a block with negative degree is empty.
struct SectionBasis {
    int n;
    std::array<long long, 3> block_degrees;
    std::array<std::vector<int>, 3> monomials;

    std::size_t block_size(int k) const { return monomials[static_cast<std::size_t>(k)].size(); }
    std::size_t total_size() const {
        return monomials[0].size() + monomials[1].size() + monomials[2].size();
    }
};

/// One certified multiplication map: exact rank of the image of
/// beta(s1, s2) against the closed-form prediction.
struct RankReport {
    int s1, s2;
    long long oracle_rank;
    long long predicted_dim;
    bool match;
};

struct GenusCheck {
    long long genus_hurwitz;   // from 2g - 2 = 3*(-2) + 2d
    long long genus_sections;  // h^0(theta^m) counted from the monomial basis
    long long three_mr;        // the degree identity 2g - 2 = 3mr
    bool pass;
};

/// Caps the assembled product-matrix size; the oracle refuses grids beyond it.
struct OracleGuard {
    std::size_t max_entries = 8'000'000;
};

/// DistinctRoots uses f = prod_{i=0}^{d-1} (x - i*y). SeededRandom draws
/// small coefficients from the seed and retries with incremented seeds until
/// f is squarefree (bounded; throws when exhausted). Rejects parity-invalid
/// (m, r) like CoverParams.
OracleCover build_cover(int m, long long r, CoeffMode mode = CoeffMode::DistinctRoots,
                        unsigned long seed = 0);

SectionBasis section_basis(const OracleCover& cov, int n);

GenusCheck genus_check(const OracleCover& cov);

/// Assembles every product (u z^j)(v z^k) = u v z^{j+k} with the reduction
/// z^3 = f, expresses the results in the SectionBasis(s1+s2) coordinates and
/// returns the exact rank of their span next to the predicted image
/// dimension. Products are block-graded: the product of block j and block k
/// lands entirely in block (j+k) mod 3, which is asserted during assembly.
RankReport mult_image_rank(const OracleCover& cov, int s1, int s2,
                           const OracleGuard& guard = {});

/// Runs mult_image_rank for all 1 <= s1 <= s2 with s1+s2 <= max_total, in
/// (s1+s2, s1) order. Requires max_total >= 2.
std::vector<RankReport> verify_grid(const OracleCover& cov, int max_total,
                                    const OracleGuard& guard = {});

}  // namespace triplecover
