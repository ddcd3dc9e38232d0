#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wirtlab/diagram.hpp"

namespace wirtlab {

struct ColoringMove {
    int crossing = 0;
    int strand = 0;  // strand colored by the move
    friend bool operator==(const ColoringMove&, const ColoringMove&) = default;
};

struct PartialColoring {
    std::vector<int> seeds;       // sorted
    std::vector<bool> colored;    // indexed by strand id
    std::vector<ColoringMove> trace;

    bool complete() const;
    std::size_t colored_count() const;
};

// Least fixpoint of coloring moves. Each round scans crossings in id order and
// applies every enabled move immediately.
PartialColoring propagate(const GaussCode& code, const std::vector<int>& seeds);

// Checks that every trace entry is a legal move at the time it is applied and
// that the trace colors exactly the recorded strands.
bool replay_is_legal(const GaussCode& code, const PartialColoring& coloring);

struct OmegaResult {
    int omega = 1;
    PartialColoring witness;
    std::uint64_t subsets_tested = 0;
    std::size_t source_components = 0;  // lower bound used by the pruning
};

struct SearchOptions {
    unsigned threads = 0;  // 0 picks the hardware concurrency
};

// Smallest seed set that colors every strand. Subsets are scanned by
// increasing size and in colexicographic order within a size, keeping only
// those that meet every source component of the strand dependency graph
// (a component nothing outside can color must contain a seed).
OmegaResult omega(const GaussCode& code, SearchOptions options = {});

// k larger than the strand count is treated as the strand count.
std::optional<PartialColoring> is_k_colorable(const GaussCode& code, int k, SearchOptions options = {});

}  // namespace wirtlab
