#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wirtlab/gauss_code.hpp"

namespace wirtlab {

// Bijection of {1..m}; stored zero-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);  // identity
    // images[i] is the image of point i+1, one-based. Throws Validation unless a bijection.
    static Permutation from_images(const std::vector<int>& images);
    // Cycle of the listed one-based points.
    static Permutation cycle(std::size_t degree, const std::vector<int>& points);

    std::size_t degree() const noexcept { return img_.size(); }
    int operator()(int point) const { return img_.at(static_cast<std::size_t>(point - 1)) + 1; }
    const std::vector<std::uint8_t>& raw() const noexcept { return img_; }

    bool is_identity() const;
    bool is_even() const;
    std::vector<std::vector<int>> cycles() const;  // one-based, nontrivial only
    // Lengths of nontrivial cycles, descending.
    std::vector<int> cycle_type() const;
    bool is_p_cycle(int p) const;
    std::size_t order() const;

    Permutation inverse() const;
    Permutation extended(std::size_t degree) const;

    // (a * b)(x) = a(b(x)): the right factor acts first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

// "(1 2 3)(4 5)", "(1,2,3)" or compact "(123)" when every point is one digit.
// degree 0 infers the largest point. Throws Syntax.
Permutation parse_permutation(const std::string& text, std::size_t degree = 0);
std::string to_cycle_string(const Permutation& p);

class PermEngine {
public:
    using Element = Permutation;
    using Hash = PermutationHash;

    explicit PermEngine(std::size_t degree) : degree_(degree) {}
    std::size_t degree() const noexcept { return degree_; }
    Element identity() const { return Permutation(degree_); }
    Element multiply(const Element& a, const Element& b) const { return a.extended(degree_) * b.extended(degree_); }
    Element invert(const Element& a) const { return a.extended(degree_).inverse(); }
    bool is_identity(const Element& a) const { return a.is_identity(); }

private:
    std::size_t degree_;
};

// The cycle (a, a+1, ..., a+p-1) in degree m. Throws OutOfRange.
Permutation step_cycle(int a, int p, int m);

struct TwistRegionLabels {
    int p = 0;
    std::size_t degree = 0;
    GaussCode code;                   // closed 2-braid with 2p-1 crossings
    std::vector<int> seeds;           // the two strands carrying the step cycles
    std::vector<Permutation> labels;  // per strand, in strand order
};

// Seeds (1..p) and (p..2p-1) on the closed 2-braid with 2p-1 crossings and
// every other strand label produced by propagation. Throws BadParameter for p < 2.
TwistRegionLabels label_twist_region(int p);

enum class PermStatus { Ok, Inconsistent };

struct PermLabelingReport {
    PermStatus status = PermStatus::Ok;
    bool consistent = false;
    std::vector<Permutation> labels;  // per strand
    std::optional<int> clash_crossing;
    std::optional<int> clash_strand;
    std::string message;
};

struct CycleLabeling {
    std::size_t degree = 0;
    int p = 0;
    std::map<int, Permutation> seeds;  // strand id -> label
};

// Outgoing label is b^e a b^-e for incoming a, over b and sign e.
// Throws NotPCycle when a seed is not a p-cycle, UnknownStrand for bad ids and
// BadParameter when the seeds do not reach every strand.
PermLabelingReport verify_perm_labeling(const GaussCode& code, const CycleLabeling& labeling);

struct GenerationResult {
    bool generates = false;
    std::optional<std::uint64_t> order;  // set when the closure was enumerated
    std::string method;                  // "closure" or "jordan"
};

// Whether the labels generate A_m. Exact enumeration up to
// limits().closure_degree points; beyond that a primitive group containing a
// 3-cycle, or a prime cycle fixing at least 3 points, is accepted.
// Throws OddPermutation, ResourceLimit when neither route decides.
GenerationResult generates_alternating(const std::vector<Permutation>& labels, std::size_t m);

bool is_transitive(const std::vector<Permutation>& gens, std::size_t m);
bool is_primitive(const std::vector<Permutation>& gens, std::size_t m);

// max(2, ceil((m-1)/(p-1))): fewest p-cycles that generate A_m.
int rank_lower_bound_pcycles(int p, int m);

}  // namespace wirtlab
