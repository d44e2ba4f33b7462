#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "triplecover/target_classifier.hpp"

using namespace triplecover;

namespace {

// All scroll twist sequences (non-increasing, no duplicates up to reorder)
// with the given dimension and total degree.
void partitions_into(int parts, int total, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(acc);
        return;
    }
    for (int p = std::min(total - (parts - 1), max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_into(parts - 1, total - p, p, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> scroll_twists(int dim, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_into(dim, degree, degree, acc, out);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("target-classifier");

TEST_CASE("classification of the worked targets") {
    const TargetVerdict p4 = classify(TargetSpec::proj_space(4));
    CHECK(p4.allowed);
    CHECK(*p4.L == DivisorClass{3, 0});
    CHECK((*p4.pushforward)[0] == DivisorClass{0, 0});
    CHECK((*p4.pushforward)[1] == DivisorClass{-3, 0});
    CHECK((*p4.pushforward)[2] == DivisorClass{-6, 0});

    const TargetVerdict p3 = classify(TargetSpec::proj_space(3));
    CHECK_FALSE(p3.allowed);
    CHECK(p3.reason.find("m has to be even") != std::string::npos);

    const TargetVerdict q3 = classify(TargetSpec::quadric(3));
    CHECK(q3.allowed);
    CHECK(*q3.L == DivisorClass{2, 0});
    // K = O(-3) = L^{-2}(1) = O(-4 + 1), checked through canonical_class
    CHECK(canonical_class(TargetSpec::quadric(3)) == DivisorClass{1 - 2 * q3.L->h, 0});

    const TargetVerdict s111 = classify(TargetSpec::scroll({1, 1, 1}));
    CHECK_FALSE(s111.allowed);
    CHECK(s111.reason.find("r has to be even") != std::string::npos);

    const TargetVerdict s112 = classify(TargetSpec::scroll({1, 1, 2}));
    CHECK(s112.allowed);
    CHECK(*s112.L == DivisorClass{2, -1});

    const TargetVerdict v = classify(TargetSpec::veronese());
    CHECK_FALSE(v.allowed);
    CHECK(v.reason.find("O(5) on the plane") != std::string::npos);
}

TEST_CASE("allowed targets are pluriregular with a complete canonical series") {
    std::vector<TargetSpec> allowed;
    for (int m = 2; m <= 9; m += 2) allowed.push_back(TargetSpec::proj_space(m));
    for (int m = 3; m <= 9; m += 2) allowed.push_back(TargetSpec::quadric(m));
    allowed.push_back(TargetSpec::scroll({1, 1, 2}));
    allowed.push_back(TargetSpec::scroll({2, 2, 2}));
    allowed.push_back(TargetSpec::scroll({1, 1, 2, 1, 1}));

    for (const TargetSpec& y : allowed) {
        const TargetVerdict verdict = classify(y);
        CHECK(verdict.allowed);
        CHECK(verdict.complete_series);
        CHECK(verdict.pluriregular);
    }
}

TEST_CASE("cyclic examples at the worked targets") {
    const CyclicExample p2 = cyclic_example(TargetSpec::proj_space(2));
    CHECK(p2.branch_class == DivisorClass{6, 0});  // branch degree 3(m+2)/2 = 6
    CHECK(p2.h0_kx == 3);
    CHECK(p2.canonical_pullback_check);

    const CyclicExample q3 = cyclic_example(TargetSpec::quadric(3));
    CHECK(q3.branch_class == DivisorClass{6, 0});  // cut by a degree-6 hypersurface
    CHECK(q3.h0_kx == 5);

    const CyclicExample s = cyclic_example(TargetSpec::scroll({1, 1, 2}));
    CHECK(s.branch_class == DivisorClass{6, -3});
    CHECK(s.stated_ramification_class.has_value());
    CHECK(*s.stated_ramification_class == DivisorClass{2, -1});
    CHECK(s.h0_kx == 7);
    CHECK_FALSE(s.note.empty());

    CHECK_THROWS_AS(cyclic_example(TargetSpec::proj_space(3)), std::domain_error);
}

TEST_CASE("examples always span the expected ambient space") {
    std::vector<TargetSpec> allowed;
    for (int m = 2; m <= 8; m += 2) allowed.push_back(TargetSpec::proj_space(m));
    for (int m = 3; m <= 9; m += 2) allowed.push_back(TargetSpec::quadric(m));
    for (int m = 3; m <= 5; m += 2) {
        for (int r = m + 1; r <= 8; ++r) {
            if (r % 2 != 0) continue;
            for (const auto& e : scroll_twists(m, r)) {
                allowed.push_back(TargetSpec::scroll(e));
            }
        }
    }
    for (const TargetSpec& y : allowed) {
        const CyclicExample ex = cyclic_example(y);
        CHECK(ex.canonical_pullback_check);
        CHECK(ex.h0_kx == y.degree() + y.dim());  // ambient P^{r+m-1} plus one
        CHECK(ex.ample_canonical_assumed);
    }
}

TEST_CASE("parity gates") {
    const ParityGate g43 = parity_gate(4, 3);
    CHECK(g43.sectional_quantity == 9);
    CHECK_FALSE(g43.consistent);
    CHECK(g43.diagnosis.find("m must be odd") != std::string::npos);

    const ParityGate g33 = parity_gate(3, 3);
    CHECK(g33.sectional_quantity == 6);
    CHECK(g33.consistent);

    const ParityGate g52 = parity_gate(5, 2);
    CHECK(g52.sectional_quantity == 8);
    CHECK(g52.consistent);

    CHECK_FALSE(dimension_parity_gate(3, 1));  // no triple canonical cover of linear P^3
    CHECK(dimension_parity_gate(2, 1));
    CHECK(dimension_parity_gate(5, 4));
}

TEST_CASE("classification agrees with both parity gates") {
    std::vector<TargetSpec> targets;
    for (int m = 2; m <= 9; ++m) targets.push_back(TargetSpec::proj_space(m));
    for (int m = 2; m <= 9; ++m) targets.push_back(TargetSpec::quadric(m));
    for (int m = 2; m <= 5; ++m) {
        for (int r = m; r <= 8; ++r) {
            for (const auto& e : scroll_twists(m, r)) {
                targets.push_back(TargetSpec::scroll(e));
            }
        }
    }
    for (const TargetSpec& y : targets) {
        const TargetVerdict verdict = classify(y);
        if (verdict.allowed) {
            CHECK(dimension_parity_gate(y.dim(), y.degree()));
            if (y.kind() == TargetKind::Scroll) {
                CHECK(parity_gate(y.dim(), 3).consistent);
            }
        }
    }
}

TEST_CASE("exhaustive scan matches the admissible list") {
    for (int m = 2; m <= 9; ++m) {
        CHECK(classify(TargetSpec::proj_space(m)).allowed == (m % 2 == 0));
        CHECK(classify(TargetSpec::quadric(m)).allowed == (m % 2 == 1));
    }
    for (int m = 2; m <= 5; ++m) {
        for (int r = m; r <= 8; ++r) {
            for (const auto& e : scroll_twists(m, r)) {
                const bool expected = m % 2 == 1 && m >= 3 && r % 2 == 0;
                CHECK(classify(TargetSpec::scroll(e)).allowed == expected);
            }
        }
    }
    CHECK_FALSE(classify(TargetSpec::veronese()).allowed);
}

TEST_CASE("scroll verdicts depend only on dimension and degree") {
    for (int m = 2; m <= 5; ++m) {
        for (int r = m; r <= 8; ++r) {
            const auto all = scroll_twists(m, r);
            if (all.size() < 2) continue;
            const TargetVerdict first = classify(TargetSpec::scroll(all.front()));
            for (const auto& e : all) {
                const TargetVerdict v = classify(TargetSpec::scroll(e));
                CHECK(v.allowed == first.allowed);
                CHECK(v.complete_series == first.complete_series);
                CHECK(v.pluriregular == first.pluriregular);
                if (first.allowed) {
                    CHECK(*v.L == *first.L);
                }
            }
        }
    }
}

TEST_SUITE_END();
