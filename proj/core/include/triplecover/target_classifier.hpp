#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "triplecover/cohomology.hpp"

namespace triplecover {

/// Whether a minimal-degree target admits a flat triple canonical cover,
/// together with the solving class L (K_Y = -2L + O(1)) and the resulting
/// pushforward decomposition O_Y + L^{-1} + L^{-2}.
struct TargetVerdict {
    explicit TargetVerdict(TargetSpec t) : target(std::move(t)) {}

    TargetSpec target;
    bool allowed = false;
    std::string reason;                                        // names the deciding clause
    std::optional<DivisorClass> L;                             // present iff allowed
    std::optional<std::array<DivisorClass, 3>> pushforward;    // (0, -L, -2L)
    bool complete_series = false;  // h^0(O(1) - L) = h^0(O(1) - 2L) = 0
    bool pluriregular = false;     // h^i(O), h^i(-L), h^i(-2L) vanish for 0 < i < m
};

/// A cyclic triple cover realizing an admissible target: branch divisor in
/// |3L|, canonical bundle pulled back from O_Y(1).
struct CyclicExample {
    explicit CyclicExample(TargetSpec t) : target(std::move(t)) {}

    TargetSpec target;
    DivisorClass branch_class;  // 3L
    /// Scrolls only: the ramification class as commonly stated, which is L
    /// itself rather than 3L. Both readings are reported.
    std::optional<DivisorClass> stated_ramification_class;
    bool canonical_pullback_check = false;  // K_Y + 2L == O(1)
    long long h0_kx = 0;                    // = h^0(O_Y(1)) = r + m
    bool ample_canonical_assumed = true;    // hypothesis carried, not checkable here
    std::string note;
};

/// Parity obstruction for covers of scrolls: the sectional quantity
/// (m-1)*n must be even, so a degree-3 cover forces odd dimension.
struct ParityGate {
    int m;
    int n;
    long long sectional_quantity;
    bool consistent;
    std::string diagnosis;
};

TargetVerdict classify(const TargetSpec& Y);

/// Throws when classify(Y) rejects the target.
CyclicExample cyclic_example(const TargetSpec& Y);

ParityGate parity_gate(int m, int n);

/// Whether a triple canonical cover of dimension m onto a degree-r target
/// can exist at all: false exactly when m and r are both odd.
bool dimension_parity_gate(int m, long long r);

}  // namespace triplecover
