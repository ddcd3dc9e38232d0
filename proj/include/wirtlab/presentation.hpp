#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wirtlab/gauss_code.hpp"
#include "wirtlab/group.hpp"
#include "wirtlab/word.hpp"

namespace wirtlab {

struct GroupPresentation {
    std::vector<int> generators;  // all meridional
    std::vector<Word> relators;
    std::vector<int> meridian_map;  // strand id -> generator, when built from a code
    std::optional<int> twist;
    std::vector<std::string> notes;

    bool has_generator(int g) const;
};

// One generator per strand (generator k is strand k) and, per crossing in id
// order, the relator c^-1 b^e a b^-e for incoming a, over b, outgoing c, sign e.
GroupPresentation wirtinger_presentation(const GaussCode& code);

// Adds axis^-m x axis^m x^-1 for every generator x; relators that reduce to
// the empty word are dropped.
GroupPresentation twist_spin(const GroupPresentation& pres, int m, int axis);

// Identification of meridians between summand i and summand i+1, given as
// generator ids local to each summand.
using AmalgamChoice = std::pair<int, int>;

// Zig-zag meridians of a summand: x is its first generator, y its second
// (or the first again when there is only one).
int zigzag_x(const GroupPresentation& p);
int zigzag_y(const GroupPresentation& p);

// Disjoint union with generators renumbered by summand offset, plus one
// identification relator u v^-1 per adjacent pair. Without explicit choices,
// summands i and i+1 (1-based) share x when i is odd and y when i is even.
GroupPresentation connected_sum_presentation(const std::vector<GroupPresentation>& summands,
                                             const std::vector<AmalgamChoice>& choices = {});

// Generator offset of each summand inside connected_sum_presentation.
std::vector<int> summand_offsets(const std::vector<GroupPresentation>& summands);

struct Meridian {
    int summand = 1;  // 1-based
    char which = 'x';
    friend bool operator==(const Meridian&, const Meridian&) = default;
};

struct CertificateStep {
    int k = 2;          // number of summands covered by this step
    long long M = 1;    // m_1 ... m_{k-1}
    long long a = 0, b = 0;
    Meridian derived;   // x_k for even k, y_k for odd k
    std::vector<std::pair<Meridian, long long>> word;  // y_1^{aM} z^{b m_k}
};

struct TwoGeneratorCertificate {
    long long a = 0, b = 0, M = 1;
    Meridian first{1, 'y'};
    Meridian second{1, 'x'};  // y_n for even n, x_n for odd n
    std::vector<CertificateStep> steps;
};

// Extended gcd with a*M + b*m_n = 1 and the inductive word identities showing
// that two meridians generate the zig-zag connected sum of twist spins.
TwoGeneratorCertificate two_generator_certificate(const std::vector<int>& m, int n);

// Generator id of a zig-zag meridian inside connected_sum_presentation(summands).
int meridian_generator(const std::vector<GroupPresentation>& summands, const Meridian& mer);

template <Evaluator G>
std::optional<std::size_t> first_failing_relator(const GroupPresentation& pres,
                                                 const std::vector<typename G::Element>& images, const G& g) {
    for (std::size_t i = 0; i < pres.relators.size(); ++i)
        if (!g.is_identity(evaluate(g, pres.relators[i], images))) return i;
    return std::nullopt;
}

// True iff every relator maps to the identity.
template <Evaluator G>
bool verify_homomorphism(const GroupPresentation& pres, const std::vector<typename G::Element>& images, const G& g) {
    return !first_failing_relator(pres, images, g).has_value();
}

}  // namespace wirtlab
