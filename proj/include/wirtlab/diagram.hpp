#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "wirtlab/gauss_code.hpp"

namespace wirtlab {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Arc between consecutive Under visits. Strand 0 starts right after the first
// Under visit of the code; ids increase in cyclic order.
struct Strand {
    int id = 0;
    std::vector<std::size_t> over_visits;  // positions, in traversal order
    std::size_t begins_after = npos;       // Under visit that starts the strand
    std::size_t ends_at = npos;            // Under visit that terminates it
};

struct CrossingRoles {
    int id = 0;
    int sign = 1;
    int over = 0;
    int incoming = 0;  // strand terminated by the Under visit
    int outgoing = 0;  // strand started by the Under visit
};

struct StrandLayout {
    std::size_t strand_count = 1;
    std::vector<int> strand_at;            // per position; an Under visit maps to its incoming strand
    std::vector<CrossingRoles> crossings;  // sorted by crossing id
};

std::vector<Strand> strands_of(const GaussCode& code);
StrandLayout layout_of(const GaussCode& code);

// Maximal cyclic blocks of Over visits; 1 when there is no Under visit.
int overpass_count(const GaussCode& code);

GaussCode virtualize(const GaussCode& code, int crossing);

// Visit lists concatenated at the basepoints; crossings of b are shifted past a's ids.
GaussCode connected_sum(const GaussCode& a, const GaussCode& b, std::size_t base_a = 0,
                        std::size_t base_b = 0);

// Crossing flanked by virtual crossings on both sides with the mirror
// classical crossing inside. In code terms the sign flips and the roles stay,
// so every Wirtinger and reflection label is preserved.
GaussCode flank_switch(const GaussCode& code, int crossing);

// Crossing preceded by a virtual crossing, so the strand that was under now
// passes over: over/under roles at the site are exchanged and the sign kept.
// Labels x (over) and y (under) now produce y x y on the outgoing strand.
// With balance, a fresh crossing of the same sign carrying the original roles
// is placed right after the site along the formerly-under passage; on the
// other passage it goes after the site for a parallel twist region and before
// it for an antiparallel one. Requires a bigon partner for the crossing.
GaussCode flank(const GaussCode& code, int crossing, bool balance);

// A new arc attached at the start of the strand is dragged once around the
// whole knot. Every Under visit it follows creates a new crossing where the
// dragged arc passes under the original over strand.
GaussCode handle_drag(const GaussCode& code, int strand);

struct TwistRegion {
    std::vector<int> crossings;  // sorted ids
    std::size_t length = 0;
};

struct TwistRegionReport {
    std::vector<TwistRegion> regions;  // ordered by smallest crossing id
    std::size_t tw = 0;
};

// Two crossings form a bigon when their visits are cyclically adjacent at two
// disjoint position pairs. Regions are connected components of the bigon graph.
TwistRegionReport twist_regions(const GaussCode& code);

// Genus of the closed surface carrying the diagram as a cellular embedding
// (0 iff the code is realizable without virtual crossings).
int supporting_genus(const GaussCode& code);

// n-fold connected sum of closed 2-braids with 2p-1 crossings.
GaussCode build_torus_2braid(int p, int n);
// Pretzel knot with column half-twists q_i (sign selects handedness).
GaussCode build_pretzel(const std::vector<int>& q);
// Four-plat closure of alternating twist boxes with the given half-twist counts
// (the continued fraction [w1, w2, ...] of a two-bridge knot).
GaussCode build_twist_chain(const std::vector<int>& weights);

}  // namespace wirtlab
