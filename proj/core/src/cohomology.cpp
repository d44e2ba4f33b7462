#include "triplecover/cohomology.hpp"

#include <numeric>
#include <stdexcept>

#include "triplecover/big_int.hpp"

namespace triplecover {

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_slong_p()) {
        throw std::overflow_error("binomial coefficient exceeds the machine range");
    }
    return b.get_si();
}

// h^i of O(k) on P^n: only h^0 and h^n can be nonzero.
long long h_proj(int n, long long k, int i) {
    if (i == 0) {
        return k >= 0 ? binomial(n + k, n) : 0;
    }
    if (i == n) {
        return binomial(-k - 1, n);
    }
    return 0;
}

// Sum of fn over all compositions of a into m non-negative parts, where each
// composition contributes its weighted twist sum b + sum_j parts[j]*e[j].
template <typename Fn>
void for_each_composition_weight(const std::vector<int>& e, std::size_t idx, int remaining,
                                 long long acc, Fn&& fn) {
    if (idx + 1 == e.size()) {
        fn(acc + static_cast<long long>(remaining) * e[idx]);
        return;
    }
    for (int part = 0; part <= remaining; ++part) {
        for_each_composition_weight(e, idx + 1, remaining - part,
                                    acc + static_cast<long long>(part) * e[idx], fn);
    }
}

long long h_scroll(const TargetSpec& Y, long long a, long long b, int i) {
    const int m = Y.dim();
    if (a >= 0) {
        if (i >= 2) {
            return 0;
        }
        // One term per composition of a into m parts.
        if (binomial(a + m - 1, m - 1) > 50'000'000LL) {
            throw std::overflow_error("scroll twist too large for composition enumeration");
        }
        long long total = 0;
        for_each_composition_weight(Y.twists(), 0, static_cast<int>(a), b,
                                    [&](long long weight) { total += h_p1(weight, i); });
        return total;
    }
    if (a > -m) {
        return 0;  // fiber bundle O(a) is acyclic for -m < a < 0
    }
    // Serre duality, K = -mH + (r-2)F.
    const long long r = Y.degree();
    return h_scroll(Y, -m - a, (r - 2) - b, m - i);
}

}  // namespace

long long h_p1(long long d, int i) {
    if (i != 0 && i != 1) {
        throw std::invalid_argument("h_p1: cohomology index must be 0 or 1");
    }
    if (i == 0) {
        return d >= 0 ? d + 1 : 0;
    }
    return d <= -2 ? -d - 1 : 0;
}

TargetSpec TargetSpec::proj_space(int m) {
    if (m < 2) {
        throw std::invalid_argument("TargetSpec: projective space targets need dimension >= 2");
    }
    return TargetSpec(TargetKind::ProjSpace, m, {});
}

TargetSpec TargetSpec::quadric(int m) {
    if (m < 2) {
        throw std::invalid_argument("TargetSpec: quadric targets need dimension >= 2");
    }
    return TargetSpec(TargetKind::Quadric, m, {});
}

TargetSpec TargetSpec::scroll(std::vector<int> e) {
    if (e.empty()) {
        throw std::invalid_argument("TargetSpec: scroll needs at least one twist");
    }
    for (int ei : e) {
        if (ei < 1) {
            throw std::invalid_argument("TargetSpec: scroll twists must be >= 1 (smoothness)");
        }
    }
    const int dim = static_cast<int>(e.size());
    return TargetSpec(TargetKind::Scroll, dim, std::move(e));
}

TargetSpec TargetSpec::veronese() {
    return TargetSpec(TargetKind::Veronese, 2, {});
}

long long TargetSpec::degree() const {
    switch (kind_) {
        case TargetKind::ProjSpace: return 1;
        case TargetKind::Quadric: return 2;
        case TargetKind::Scroll:
            return std::accumulate(twists_.begin(), twists_.end(), 0LL);
        case TargetKind::Veronese: return 4;
    }
    return 0;
}

std::string TargetSpec::name() const {
    switch (kind_) {
        case TargetKind::ProjSpace: return "P^" + std::to_string(dim_);
        case TargetKind::Quadric: return "Q^" + std::to_string(dim_);
        case TargetKind::Scroll: {
            std::string s = "S(";
            for (std::size_t i = 0; i < twists_.size(); ++i) {
                if (i > 0) s += ",";
                s += std::to_string(twists_[i]);
            }
            return s + ")";
        }
        case TargetKind::Veronese: return "Veronese";
    }
    return "?";
}

long long h_target(const TargetSpec& Y, const DivisorClass& D, int i) {
    if (i < 0 || i > Y.dim()) {
        throw std::invalid_argument("h_target: cohomology index exceeds the dimension of " +
                                    Y.name());
    }
    switch (Y.kind()) {
        case TargetKind::ProjSpace:
            return h_proj(Y.dim(), D.h, i);
        case TargetKind::Quadric: {
            const int m = Y.dim();
            const long long k = D.h;
            if (i == 0) {
                return h_proj(m + 1, k, 0) - h_proj(m + 1, k - 2, 0);
            }
            if (i == m) {
                // Serre duality with K = O(-m).
                return h_target(Y, DivisorClass{-k - m, 0}, 0);
            }
            return 0;
        }
        case TargetKind::Scroll:
            return h_scroll(Y, D.h, D.f, i);
        case TargetKind::Veronese:
            // Classes live on the underlying plane; D.h counts O_{P^2}(1).
            return h_proj(2, D.h, i);
    }
    return 0;
}

DivisorClass canonical_class(const TargetSpec& Y) {
    switch (Y.kind()) {
        case TargetKind::ProjSpace: return {-(Y.dim() + 1LL), 0};
        case TargetKind::Quadric: return {-static_cast<long long>(Y.dim()), 0};
        case TargetKind::Scroll: return {-static_cast<long long>(Y.dim()), Y.degree() - 2};
        case TargetKind::Veronese: return {-3, 0};
    }
    return {};
}

DivisorClass hyperplane_class(const TargetSpec& Y) {
    return Y.kind() == TargetKind::Veronese ? DivisorClass{2, 0} : DivisorClass{1, 0};
}

}  // namespace triplecover
