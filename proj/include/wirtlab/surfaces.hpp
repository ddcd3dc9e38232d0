#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirtlab/gauss_code.hpp"

namespace wirtlab {

struct TrisectionParams {
    int b = 1;
    int c1 = 1, c2 = 1, c3 = 1;
    int euler = 2;
};

// Throws BadParameter for non-positive entries, EulerMismatch unless
// euler = c1 + c2 + c3 - b.
TrisectionParams validate_trisection(int b, int c1, int c2, int c3, int euler);

// Least min(c1, c2, c3) over the list. Throws BadParameter on an empty list.
int bridge_from_trisection(const std::vector<TrisectionParams>& list);

// 3 beta - chi. Throws BadParameter for beta < 1.
int trisection_lower_bound(int beta, int euler);

struct Interval {
    long long lo = 0;
    std::optional<long long> hi;  // unbounded when empty
    std::vector<std::string> provenance;
};

struct BoundsLedger {
    int omega = 1;
    int euler = 0;  // the tube of a welded knot is a torus
    Interval mu, beta, bridge;
    bool equality_certified = false;
};

// Bounds for the tube of the diagram: mu, beta <= omega and b <= 3 omega from
// a Wirtinger witness; lower bounds mu >= certified_rank (when a verified
// labeling supplies one), beta >= mu and b >= 3 beta - chi. Throws Validation
// if the intervals become empty.
BoundsLedger tube_bounds(const GaussCode& code, std::optional<int> certified_rank = std::nullopt);

struct CommutatorBound {
    long long num = 1, den = 1;  // 1 + N/M in lowest terms
    long long ceiling = 1;
    long long N = 0, M = 1;
};

// 1 + N/M with M = lcm(|m_i|) and N the sum of ranks. Throws BadParameter.
CommutatorBound commutator_bound(const std::vector<int>& m, const std::vector<int>& rk);

struct KanenobuTerm {
    int count = 0;  // connected-sum multiplicity
    int torus = 1;  // index i of T_i
};

struct KanenobuRecipe {
    std::vector<int> r;  // p_i - 1, descending
    int s = 0;           // q - 1
    int j = 1;           // one-based
    std::vector<std::vector<KanenobuTerm>> summands;  // K_1 .. K_n
};

// Checks max p_i <= q <= sum p_i - (n - 1) and returns the summand recipe.
// Throws BadParameter for entries below 1, OutOfInterval otherwise.
KanenobuRecipe kanenobu_interval(std::vector<int> p, int q);

inline constexpr double kVOct = 3.663862;
inline constexpr double kVTet = 1.014941;

struct VolumeBounds {
    double vol_lower = 0;
    int beta_g_upper = 0;
    double c = kVTet / 6;
    bool chain_holds = false;  // c * beta_g_upper <= vol_lower
};

// Throws HypothesisNotAsserted unless the caller asserts the geometric
// hypotheses and genus >= 1; BadParameter for tw < 1.
VolumeBounds volume_bounds(int tw, int genus, bool hypotheses_asserted);

}  // namespace wirtlab
