#pragma once

#include <map>
#include <string>

namespace triplecover {

/// Parameters of a triple canonical cover pi: X -> Y with dim X = m and Y of
/// minimal degree r. Construction rejects inputs no cover can realize:
/// m odd forces r even, so m*r is always even and the splitting twists below
/// are integral.
struct CoverParams {
    int m;
    long long r;
    int cover_degree;

    CoverParams(int m, long long r, int cover_degree = 3);
};

/// Twists of the pushforward of the structure sheaf:
/// O + O(-a1) + O(-a2) with a1 = (mr+2)/2 and a2 = mr+2 = 2*a1.
struct SplittingType {
    long long a1;
    long long a2;
};

/// The three blocks of H^0(theta^n) on the curve section, with their
/// underlying P^1 degrees: A(n) in degree n*r, B(n) in ((2n-m)r-2)/2,
/// C(n) in (n-m)r-2.
struct BlockDims {
    int n;
    long long deg_a, deg_b, deg_c;
    long long dim_a, dim_b, dim_c;

    long long h0() const { return dim_a + dim_b + dim_c; }
};

/// Which blocks of H^0(theta^(s1+s2)) the multiplication map beta(s1,s2)
/// covers. Block coverage is all-or-nothing, so the image dimension is the
/// sum of the covered block dimensions.
struct ImageProfile {
    int s1, s2;
    bool covers_a, covers_b, covers_c;
    long long image_dim;
    long long codim;
};

/// Degrees in which the section ring needs new minimal generators, with
/// multiplicities. Degree 1 always carries r+m generators.
struct GeneratorProfile {
    std::map<int, long long> new_generators;
};

enum class N0Status { Holds, Fails, Unknown };

std::string to_string(N0Status s);

/// Status together with the tag of the statement that decides it
/// ("Theorem 2.9", "Theorem 2.13 (1)", "Theorem 2.13 (2)" or, for the open
/// band, "Question 2.14").
struct N0Verdict {
    N0Status status;
    std::string provenance;
};

SplittingType splitting(const CoverParams& params);

BlockDims block_dims(const CoverParams& params, int n);

/// Exact multiplication-image rule: A is always covered; B is covered as
/// soon as one factor has a nonzero B block; C is covered when a factor has
/// a nonzero C block or both factors have nonzero B blocks.
///
/// The rule is exact, not a lower bound. The component maps landing in the
/// C block are A*C, C*A, B*B, B*C, C*B and C*C; a nonzero C block at
/// exponent s forces a nonzero B block there, so when the rule declares C
/// uncovered every one of those sources is zero. When both B blocks are
/// nonzero, the B*B component is multiplication against a twist of degree
/// 2*a1 - a2 = 0 which is nonzero (a rank-2 integral subalgebra of the
/// rank-3 pushforward cannot exist), hence an isomorphism onto the C twist
/// and the covered block is covered in full. The cyclic oracle certifies
/// the rule rank-for-rank.
ImageProfile beta_image(const CoverParams& params, int s1, int s2);

GeneratorProfile generator_profile(const CoverParams& params);

/// Codimension transfer from the curve section to every intermediate
/// complete-intersection level, including X itself. Valid only when
/// beta(s', s2) surjects for all 1 <= s' <= s1-1; throws otherwise.
/// Returns the (unchanged) curve-level codimension of beta(s1, s2).
long long lift_codim(const CoverParams& params, int s1, int s2);

/// Whether K_X^n is very ample with projectively normal image. The even
/// dimensional case with r > 1 has a genuinely open band reported as
/// Unknown, never guessed.
N0Verdict n0_status(const CoverParams& params, int n);

}  // namespace triplecover
