#pragma once

#include <string>
#include <vector>

namespace triplecover {

/// h^i of O(d) on the projective line: h^0 = max(0, d+1) and, by Serre
/// duality, h^1 = max(0, -d-1). Throws for i outside {0, 1}.
long long h_p1(long long d, int i);

enum class TargetKind { ProjSpace, Quadric, Scroll, Veronese };

/// A smooth variety of minimal degree: projective space, a smooth quadric
/// hypersurface, a smooth rational normal scroll P(O(e1) + ... + O(em)) with
/// every ei >= 1, or the Veronese surface of degree 4 in P^5.
class TargetSpec {
public:
    static TargetSpec proj_space(int m);           // P^m, m >= 2
    static TargetSpec quadric(int m);              // dimension m >= 2, ambient P^{m+1}
    static TargetSpec scroll(std::vector<int> e);  // dimension = #twists, degree = sum
    static TargetSpec veronese();

    TargetKind kind() const { return kind_; }
    int dim() const { return dim_; }
    long long degree() const;
    const std::vector<int>& twists() const { return twists_; }
    std::string name() const;  // "P^4", "Q^3", "S(1,1,2)", "Veronese"

private:
    TargetSpec(TargetKind kind, int dim, std::vector<int> twists)
        : kind_(kind), dim_(dim), twists_(std::move(twists)) {}

    TargetKind kind_;
    int dim_;
    std::vector<int> twists_;
};

/// Integer divisor class on a TargetSpec.
///   ProjSpace / Quadric: h multiples of the hyperplane class (f unused).
///   Scroll:              h*H + f*F with H the hyperplane and F the fiber class.
///   Veronese:            h multiples of the plane class O_{P^2}(1); the
///                        hyperplane class of the degree-4 embedding is h = 2,
///                        so odd h is non-integral with respect to it.
struct DivisorClass {
    long long h = 0;
    long long f = 0;

    bool operator==(const DivisorClass&) const = default;
};

/// Exact dimension of H^i(Y, O(D)). Requires 0 <= i <= dim Y.
///
/// Projective space uses the standard formulas; the quadric restricts from
/// its ambient projective space through the defining short exact sequence;
/// the scroll pushes down to P^1 for h >= 0, vanishes identically for
/// -m < h < 0 and reflects through Serre duality with K = -mH + (r-2)F for
/// h <= -m; the Veronese computes on the underlying plane.
long long h_target(const TargetSpec& Y, const DivisorClass& D, int i);

/// Canonical class: P^m -> O(-m-1); quadric -> O(-m); scroll -> -mH + (r-2)F;
/// Veronese -> -3 plane units (-3/2 of the hyperplane class).
DivisorClass canonical_class(const TargetSpec& Y);

/// The class of O_Y(1) in the conventions of DivisorClass.
DivisorClass hyperplane_class(const TargetSpec& Y);

}  // namespace triplecover
