#include "triplecover/exact_matrix.hpp"

namespace triplecover {

// Fraction-free elimination: after k pivot steps every entry is a (k+1)x(k+1)
// minor of the (row-permuted) input, so division by the previous pivot is
// exact and all intermediates stay integral.
std::size_t rank(const ExactMatrix& mat) {
    const std::size_t m = mat.rows();
    const std::size_t n = mat.cols();
    if (m == 0 || n == 0) {
        return 0;
    }

    std::vector<std::vector<BigInt>> w(m, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w[i][j] = mat.at(i, j);
        }
    }

    std::size_t row = 0;
    BigInt prev(1);
    BigInt tmp;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w[piv][col] == 0) {
            ++piv;
        }
        if (piv == m) {
            continue;
        }
        if (piv != row) {
            std::swap(w[piv], w[row]);
        }
        const BigInt pivot = w[row][col];
        for (std::size_t i = row + 1; i < m; ++i) {
            if (w[i][col] == 0) {
                // Still needs the Bareiss rescale to keep the minor invariant.
                for (std::size_t j = col + 1; j < n; ++j) {
                    if (w[i][j] == 0) continue;
                    mpz_mul(tmp.get_mpz_t(), w[i][j].get_mpz_t(), pivot.get_mpz_t());
                    mpz_divexact(w[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = col + 1; j < n; ++j) {
                mpz_mul(tmp.get_mpz_t(), w[i][j].get_mpz_t(), pivot.get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), w[i][col].get_mpz_t(), w[row][j].get_mpz_t());
                mpz_divexact(w[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            w[i][col] = 0;
        }
        prev = pivot;
        ++row;
    }
    return row;
}

ExactMatrix transpose(const ExactMatrix& mat) {
    ExactMatrix t(mat.cols(), mat.rows());
    for (std::size_t i = 0; i < mat.rows(); ++i) {
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            t.at(j, i) = mat.at(i, j);
        }
    }
    return t;
}

}  // namespace triplecover
