#include "triplecover/target_classifier.hpp"

#include <stdexcept>

namespace triplecover {

namespace {

bool divisible_by_two(const DivisorClass& c) {
    return c.h % 2 == 0 && c.f % 2 == 0;
}

DivisorClass scale(const DivisorClass& c, long long k) {
    return {c.h * k, c.f * k};
}

DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) {
    return {a.h - b.h, a.f - b.f};
}

// Vanishing checks behind the completeness and pluriregularity flags.
bool complete_series_check(const TargetSpec& Y, const DivisorClass& L) {
    const DivisorClass one = hyperplane_class(Y);
    return h_target(Y, subtract(one, L), 0) == 0 &&
           h_target(Y, subtract(one, scale(L, 2)), 0) == 0;
}

bool pluriregularity_check(const TargetSpec& Y, const DivisorClass& L) {
    const DivisorClass zero{0, 0};
    const DivisorClass minus_l = scale(L, -1);
    const DivisorClass minus_2l = scale(L, -2);
    for (int i = 1; i <= Y.dim() - 1; ++i) {
        if (h_target(Y, zero, i) != 0 || h_target(Y, minus_l, i) != 0 ||
            h_target(Y, minus_2l, i) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

TargetVerdict classify(const TargetSpec& Y) {
    TargetVerdict v(Y);
    const int m = Y.dim();
    const long long r = Y.degree();

    // Solve K_Y = -2L + O(1) for an integral L in the Picard group.
    const DivisorClass twice_l = subtract(hyperplane_class(Y), canonical_class(Y));

    switch (Y.kind()) {
        case TargetKind::ProjSpace:
            if (m % 2 != 0) {
                v.allowed = false;
                v.reason = "Theorem 3.3 (1): for P^m targets m has to be even "
                           "(K = O(-m-1) forces L = O((m+2)/2))";
                return v;
            }
            v.reason = "Theorem 3.3 (1): P^m with m even";
            break;
        case TargetKind::Quadric:
            if (m % 2 != 1) {
                v.allowed = false;
                v.reason = "Theorem 3.3 (3): for quadric targets m has to be odd "
                           "(K = O(-m) forces L = O((m+1)/2))";
                return v;
            }
            v.reason = "Theorem 3.3 (3): smooth quadric hypersurface of odd dimension";
            break;
        case TargetKind::Scroll:
            if (m < 3 || m % 2 != 1 || r % 2 != 0) {
                v.allowed = false;
                if (m % 2 == 0) {
                    v.reason = "Theorem 3.3 (2): for scroll targets m has to be odd";
                    if (r % 2 != 0) {
                        v.reason += " and r has to be even";
                    }
                } else if (r % 2 != 0) {
                    v.reason = "Theorem 3.3 (2): for scroll targets r has to be even "
                               "(K = -mH + (r-2)F forces L = ((m+1)/2)H - ((r-2)/2)F)";
                } else {
                    v.reason = "Theorem 3.3 (2): scroll targets need dimension m >= 3";
                }
                return v;
            }
            v.reason = "Theorem 3.3 (2): smooth rational normal scroll of odd dimension "
                       "and even degree";
            break;
        case TargetKind::Veronese:
            v.allowed = false;
            v.reason = "no integral L exists: L^2 would be O(5) on the plane, which is "
                       "not a square in the Picard group (a case the Theorem 3.3 smooth "
                       "list does not discuss; rejected by computation)";
            return v;
    }

    if (!divisible_by_two(twice_l)) {
        throw std::logic_error("classify: accepted target with non-integral L");
    }
    const DivisorClass L{twice_l.h / 2, twice_l.f / 2};

    // (3.3.2) as a class identity, recomputed through canonical_class.
    const DivisorClass k_check = subtract(hyperplane_class(Y), scale(L, 2));
    if (!(k_check == canonical_class(Y))) {
        throw std::logic_error("classify: K_Y != L^{-2}(1) for an accepted target");
    }

    v.allowed = true;
    v.L = L;
    v.pushforward = {DivisorClass{0, 0}, scale(L, -1), scale(L, -2)};
    v.complete_series = complete_series_check(Y, L);
    v.pluriregular = pluriregularity_check(Y, L);
    return v;
}

CyclicExample cyclic_example(const TargetSpec& Y) {
    const TargetVerdict verdict = classify(Y);
    if (!verdict.allowed) {
        throw std::domain_error("cyclic_example: target not admissible: " + verdict.reason);
    }
    const DivisorClass L = *verdict.L;
    const DivisorClass one = hyperplane_class(Y);

    CyclicExample ex(Y);
    ex.branch_class = scale(L, 3);
    ex.canonical_pullback_check = subtract(one, scale(L, 2)) == canonical_class(Y);

    const long long h0_one = h_target(Y, one, 0);
    const long long h0_one_minus_l = h_target(Y, subtract(one, L), 0);
    const long long h0_one_minus_2l = h_target(Y, subtract(one, scale(L, 2)), 0);
    if (h0_one_minus_l != 0 || h0_one_minus_2l != 0) {
        throw std::logic_error("cyclic_example: twisted pushforward summands of K_X must "
                               "not contribute sections");
    }
    ex.h0_kx = h0_one + h0_one_minus_l + h0_one_minus_2l;

    if (Y.kind() == TargetKind::Scroll) {
        ex.stated_ramification_class = L;
        ex.note = "Prop 3.4 c) names ((m+1)/2)H - ((r-2)/2)F (= L) as the ramification "
                  "class; the branch divisor of the cyclic triple cover defined by L lies "
                  "in |3L|; both classes reported";
    }
    return ex;
}

ParityGate parity_gate(int m, int n) {
    ParityGate g;
    g.m = m;
    g.n = n;
    g.sectional_quantity = static_cast<long long>(m - 1) * n;
    g.consistent = g.sectional_quantity % 2 == 0;
    if (n == 3 && !g.consistent) {
        g.diagnosis = "Theorem 3.2: if n = 3, m must be odd";
    } else if (!g.consistent) {
        g.diagnosis = "Theorem 3.2: the sectional quantity (m-1)n must be even";
    } else {
        g.diagnosis = "Theorem 3.2: sectional quantity (m-1)n is even";
    }
    return g;
}

bool dimension_parity_gate(int m, long long r) {
    return m % 2 == 0 || r % 2 == 0;
}

}  // namespace triplecover
