#include "triplecover/cyclic_oracle.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "triplecover/exact_matrix.hpp"

namespace triplecover {

namespace {

constexpr int kSquarefreeAttempts = 64;

HomogPoly distinct_roots_form(long long d) {
    // prod_{i=0}^{d-1} (x - i*y): d distinct roots, squarefree by construction.
    HomogPoly f(0, {BigInt(1)});
    for (long long i = 0; i < d; ++i) {
        f = poly_mul(f, HomogPoly(1, {BigInt(static_cast<long>(-i)), BigInt(1)}));
    }
    return f;
}

HomogPoly seeded_form(long long d, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
    for (BigInt& c : coeffs) {
        // Raw modulo keeps the stream identical across standard libraries.
        c = BigInt(static_cast<long>(rng() % 19) - 9);
    }
    return HomogPoly(static_cast<int>(d), std::move(coeffs));
}

}  // namespace

OracleCover build_cover(int m, long long r, CoeffMode mode, unsigned long seed) {
    CoverParams params(m, r);  // rejects parity-invalid input
    const long long a1 = splitting(params).a1;
    const long long d = 3 * a1;

    if (mode == CoeffMode::DistinctRoots) {
        OracleCover cov{params, d, distinct_roots_form(d), 0};
        if (!is_squarefree(cov.f)) {
            throw std::logic_error("build_cover: distinct-roots branch form not squarefree");
        }
        return cov;
    }

    for (int attempt = 0; attempt < kSquarefreeAttempts; ++attempt) {
        const unsigned long s = seed + static_cast<unsigned long>(attempt);
        HomogPoly f = seeded_form(d, s);
        if (!f.is_zero() && is_squarefree(f)) {
            return OracleCover{params, d, std::move(f), s};
        }
    }
    throw std::domain_error("build_cover: no squarefree branch form found after " +
                            std::to_string(kSquarefreeAttempts) + " seeded attempts");
}

SectionBasis section_basis(const OracleCover& cov, int n) {
    if (n < 0) {
        throw std::invalid_argument("section_basis: exponent must be non-negative");
    }
    const long long a1 = cov.branch_degree / 3;
    SectionBasis basis;
    basis.n = n;
    for (int k = 0; k < 3; ++k) {
        const long long deg = static_cast<long long>(n) * cov.params.r - k * a1;
        basis.block_degrees[static_cast<std::size_t>(k)] = deg;
        auto& monos = basis.monomials[static_cast<std::size_t>(k)];
        for (long long i = 0; deg >= 0 && i <= deg; ++i) {
            monos.push_back(static_cast<int>(i));
        }
    }
    return basis;
}

GenusCheck genus_check(const OracleCover& cov) {
    GenusCheck g;
    // Every root of f is a point of total ramification (index 3).
    g.genus_hurwitz = cov.branch_degree - 2;
    g.genus_sections = static_cast<long long>(section_basis(cov, cov.params.m).total_size());
    g.three_mr = 3LL * cov.params.m * cov.params.r;
    g.pass = g.genus_hurwitz == g.genus_sections &&
             2 * g.genus_hurwitz - 2 == g.three_mr;
    return g;
}

RankReport mult_image_rank(const OracleCover& cov, int s1, int s2, const OracleGuard& guard) {
    if (s1 < 0 || s2 < 0) {
        throw std::invalid_argument("mult_image_rank: exponents must be non-negative");
    }
    const SectionBasis src1 = section_basis(cov, s1);
    const SectionBasis src2 = section_basis(cov, s2);
    const SectionBasis dst = section_basis(cov, s1 + s2);

    const std::size_t entries = src1.total_size() * src2.total_size() * dst.total_size();
    if (entries > guard.max_entries) {
        throw std::domain_error("mult_image_rank: matrix guard exceeded at (s1, s2) = (" +
                                std::to_string(s1) + ", " + std::to_string(s2) + "): " +
                                std::to_string(src1.total_size()) + " x " +
                                std::to_string(src2.total_size()) + " products into dimension " +
                                std::to_string(dst.total_size()));
    }

    // One row list per target block; rows never straddle blocks.
    std::array<std::vector<std::vector<BigInt>>, 3> rows;

    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const auto& monos1 = src1.monomials[static_cast<std::size_t>(j)];
            const auto& monos2 = src2.monomials[static_cast<std::size_t>(k)];
            if (monos1.empty() || monos2.empty()) continue;

            const int target_block = (j + k) % 3;
            const long long target_deg =
                dst.block_degrees[static_cast<std::size_t>(target_block)];
            const long long deg1 = src1.block_degrees[static_cast<std::size_t>(j)];
            const long long deg2 = src2.block_degrees[static_cast<std::size_t>(k)];

            for (int iu : monos1) {
                for (int iv : monos2) {
                    HomogPoly prod = poly_mul(
                        HomogPoly::monomial(static_cast<int>(deg1), iu),
                        HomogPoly::monomial(static_cast<int>(deg2), iv));
                    if (j + k >= 3) {
                        prod = poly_mul(prod, cov.f);  // z^3 = f
                    }
                    if (prod.degree() != target_deg) {
                        throw std::logic_error("mult_image_rank: product violates the cyclic "
                                               "block grading");
                    }
                    std::vector<BigInt> row(static_cast<std::size_t>(target_deg) + 1);
                    for (long long i = 0; i <= target_deg; ++i) {
                        row[static_cast<std::size_t>(i)] = prod.coeff(static_cast<int>(i));
                    }
                    rows[static_cast<std::size_t>(target_block)].push_back(std::move(row));
                }
            }
        }
    }

    long long total_rank = 0;
    for (int block = 0; block < 3; ++block) {
        const auto& block_rows = rows[static_cast<std::size_t>(block)];
        if (block_rows.empty()) continue;
        const std::size_t cols = dst.block_size(block);
        ExactMatrix mat(block_rows.size(), cols);
        for (std::size_t i = 0; i < block_rows.size(); ++i) {
            for (std::size_t c = 0; c < cols; ++c) {
                mat.at(i, c) = block_rows[i][c];
            }
        }
        total_rank += static_cast<long long>(rank(mat));
    }

    RankReport report;
    report.s1 = s1;
    report.s2 = s2;
    report.oracle_rank = total_rank;
    report.predicted_dim = beta_image(cov.params, s1, s2).image_dim;
    report.match = report.oracle_rank == report.predicted_dim;
    return report;
}

std::vector<RankReport> verify_grid(const OracleCover& cov, int max_total,
                                    const OracleGuard& guard) {
    if (max_total < 2) {
        throw std::invalid_argument("verify_grid: max_total must be at least 2");
    }
    std::vector<RankReport> reports;
    for (int total = 2; total <= max_total; ++total) {
        for (int s1 = 1; 2 * s1 <= total; ++s1) {
            reports.push_back(mult_image_rank(cov, s1, total - s1, guard));
        }
    }
    return reports;
}

}  // namespace triplecover
