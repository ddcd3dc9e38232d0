#include "wirtlab/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "wirtlab/diagram.hpp"
#include "wirtlab/errors.hpp"

namespace wirtlab {

bool GroupPresentation::has_generator(int g) const {
    return std::find(generators.begin(), generators.end(), g) != generators.end();
}

GroupPresentation wirtinger_presentation(const GaussCode& code) {
    const StrandLayout lay = layout_of(code);
    GroupPresentation p;
    for (std::size_t s = 0; s < lay.strand_count; ++s) {
        p.generators.push_back(static_cast<int>(s));
        p.meridian_map.push_back(static_cast<int>(s));
    }
    for (const auto& r : lay.crossings) {
        p.relators.push_back(Word::gen(r.outgoing, -1) * Word::gen(r.over, r.sign) * Word::gen(r.incoming) *
                             Word::gen(r.over, -r.sign));
    }
    return p;
}

GroupPresentation twist_spin(const GroupPresentation& pres, int m, int axis) {
    if (!pres.has_generator(axis))
        throw Error(ErrorKind::UnknownGenerator, "axis " + std::to_string(axis) + " is not a generator");
    GroupPresentation out = pres;
    for (int x : pres.generators) {
        Word r = Word::gen(axis, -m) * Word::gen(x) * Word::gen(axis, m) * Word::gen(x, -1);
        if (!r.empty()) out.relators.push_back(r);
    }
    out.twist = m;
    return out;
}

int zigzag_x(const GroupPresentation& p) {
    if (p.generators.empty()) throw Error(ErrorKind::UnknownGenerator, "summand without generators");
    return p.generators[0];
}

int zigzag_y(const GroupPresentation& p) {
    if (p.generators.empty()) throw Error(ErrorKind::UnknownGenerator, "summand without generators");
    return p.generators.size() > 1 ? p.generators[1] : p.generators[0];
}

std::vector<int> summand_offsets(const std::vector<GroupPresentation>& summands) {
    std::vector<int> off;
    int next = 0;
    for (const auto& s : summands) {
        off.push_back(next);
        int hi = s.generators.empty() ? -1 : *std::max_element(s.generators.begin(), s.generators.end());
        next += hi + 1;
    }
    return off;
}

GroupPresentation connected_sum_presentation(const std::vector<GroupPresentation>& summands,
                                             const std::vector<AmalgamChoice>& choices) {
    if (summands.empty()) throw Error(ErrorKind::BadParameter, "no summands");
    for (const auto& s : summands)
        if (s.generators.empty()) throw Error(ErrorKind::BadParameter, "empty summand");
    if (summands.size() == 1) return summands.front();
    if (!choices.empty() && choices.size() != summands.size() - 1)
        throw Error(ErrorKind::BadParameter, "need one amalgam choice per adjacent pair");
    const auto off = summand_offsets(summands);
    GroupPresentation out;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        for (int g : summands[i].generators) out.generators.push_back(g + off[i]);
        for (const auto& r : summands[i].relators) {
            std::vector<Letter> ls = r.letters();
            for (auto& l : ls) l.gen += off[i];
            out.relators.push_back(Word(ls));
        }
    }
    for (std::size_t i = 0; i + 1 < summands.size(); ++i) {
        int u, v;
        if (choices.empty()) {
            // Pair index i is summand i+1 in 1-based numbering.
            bool odd = (i + 1) % 2 == 1;
            u = odd ? zigzag_x(summands[i]) : zigzag_y(summands[i]);
            v = odd ? zigzag_x(summands[i + 1]) : zigzag_y(summands[i + 1]);
        } else {
            std::tie(u, v) = choices[i];
            if (!summands[i].has_generator(u) || !summands[i + 1].has_generator(v))
                throw Error(ErrorKind::UnknownGenerator, "amalgam choice names a missing generator");
        }
        out.relators.push_back(Word::gen(u + off[i]) * Word::gen(v + off[i + 1], -1));
    }
    out.notes.push_back(choices.empty() ? "amalgamation: default zig-zag (x for odd i, y for even i)"
                                        : "amalgamation: explicit choices");
    return out;
}

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

TwoGeneratorCertificate two_generator_certificate(const std::vector<int>& m, int n) {
    if (n < 1 || static_cast<std::size_t>(n) != m.size())
        throw Error(ErrorKind::BadParameter, "n must equal the number of twist indices");
    for (int x : m)
        if (x < 2) throw Error(ErrorKind::BadParameter, "twist indices must be at least 2");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (std::gcd(m[i], m[j]) != 1)
                throw Error(ErrorKind::NotCoprime,
                            std::to_string(m[i]) + " and " + std::to_string(m[j]) + " share a factor");
    TwoGeneratorCertificate cert;
    cert.second = Meridian{1, 'x'};
    long long M = 1;
    for (int k = 2; k <= n; ++k) {
        M *= m[k - 2];
        CertificateStep st;
        st.k = k;
        st.M = M;
        ext_gcd(M, m[k - 1], st.a, st.b);
        const bool even = k % 2 == 0;
        st.derived = Meridian{k, even ? 'x' : 'y'};
        Meridian partner{k, even ? 'y' : 'x'};
        st.word = {{Meridian{1, 'y'}, st.a * M}, {partner, st.b * m[k - 1]}};
        cert.steps.push_back(st);
        cert.a = st.a;
        cert.b = st.b;
        cert.M = M;
        cert.second = partner;
    }
    return cert;
}

int meridian_generator(const std::vector<GroupPresentation>& summands, const Meridian& mer) {
    if (mer.summand < 1 || static_cast<std::size_t>(mer.summand) > summands.size())
        throw Error(ErrorKind::UnknownGenerator, "no summand " + std::to_string(mer.summand));
    const auto off = summand_offsets(summands);
    const auto& s = summands[mer.summand - 1];
    return off[mer.summand - 1] + (mer.which == 'x' ? zigzag_x(s) : zigzag_y(s));
}

}  // namespace wirtlab
