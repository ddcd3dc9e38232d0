#include "wirtlab/surfaces.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "wirtlab/errors.hpp"
#include "wirtlab/wirtinger.hpp"

namespace wirtlab {

TrisectionParams validate_trisection(int b, int c1, int c2, int c3, int euler) {
    if (b < 1 || c1 < 1 || c2 < 1 || c3 < 1) throw Error(ErrorKind::BadParameter, "trisection entries must be positive");
    if (euler != c1 + c2 + c3 - b)
        throw Error(ErrorKind::EulerMismatch, "c1 + c2 + c3 - b = " + std::to_string(c1 + c2 + c3 - b) +
                                                  " but chi = " + std::to_string(euler));
    return {b, c1, c2, c3, euler};
}

int bridge_from_trisection(const std::vector<TrisectionParams>& list) {
    if (list.empty()) throw Error(ErrorKind::BadParameter, "no trisections given");
    int best = std::numeric_limits<int>::max();
    for (const auto& t : list) best = std::min({best, t.c1, t.c2, t.c3});
    return best;
}

int trisection_lower_bound(int beta, int euler) {
    if (beta < 1) throw Error(ErrorKind::BadParameter, "beta must be at least 1");
    return 3 * beta - euler;
}

BoundsLedger tube_bounds(const GaussCode& code, std::optional<int> certified_rank) {
    BoundsLedger L;
    L.omega = omega(code).omega;
    const long long w = L.omega;
    L.mu.hi = w;
    L.mu.provenance.push_back("mu <= omega: the seeds of a Wirtinger witness are meridians generating the group");
    L.beta.hi = w;
    L.beta.provenance.push_back("beta <= omega: Wirtinger number equals the overpass bridge number of the tube");
    L.bridge.hi = 3 * w;
    L.bridge.provenance.push_back("b <= 3 omega: tube of a diagram with omega overpasses");
    L.mu.lo = 1;
    L.mu.provenance.push_back("mu >= 1");
    if (certified_rank) {
        if (*certified_rank > L.mu.lo) L.mu.lo = *certified_rank;
        L.mu.provenance.push_back("mu >= " + std::to_string(*certified_rank) + ": verified reflection or cycle labeling");
    }
    L.beta.lo = L.mu.lo;
    L.beta.provenance.push_back("beta >= mu");
    L.bridge.lo = trisection_lower_bound(static_cast<int>(L.beta.lo), L.euler);
    L.bridge.provenance.push_back("b >= 3 beta - chi");
    for (const Interval* iv : {&L.mu, &L.beta, &L.bridge})
        if (iv->hi && iv->lo > *iv->hi) throw Error(ErrorKind::Validation, "bounds ledger has an empty interval");
    if (L.mu.hi > L.beta.hi) throw Error(ErrorKind::Validation, "mu upper bound exceeds beta upper bound");
    L.equality_certified = L.mu.lo == *L.mu.hi && L.beta.lo == *L.beta.hi && L.bridge.lo == *L.bridge.hi;
    return L;
}

CommutatorBound commutator_bound(const std::vector<int>& m, const std::vector<int>& rk) {
    if (m.empty() || m.size() != rk.size())
        throw Error(ErrorKind::BadParameter, "need one rank per twist index and at least one summand");
    CommutatorBound cb;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (std::abs(m[i]) < 2) throw Error(ErrorKind::BadParameter, "twist indices need |m| >= 2");
        if (rk[i] < 1) throw Error(ErrorKind::BadParameter, "ranks must be at least 1");
        cb.M = std::lcm(cb.M, static_cast<long long>(std::abs(m[i])));
        cb.N += rk[i];
    }
    cb.num = cb.M + cb.N;
    cb.den = cb.M;
    const long long g = std::gcd(cb.num, cb.den);
    cb.num /= g;
    cb.den /= g;
    cb.ceiling = (cb.num + cb.den - 1) / cb.den;
    return cb;
}

KanenobuRecipe kanenobu_interval(std::vector<int> p, int q) {
    if (p.empty() || q < 1 || std::any_of(p.begin(), p.end(), [](int x) { return x < 1; }))
        throw Error(ErrorKind::BadParameter, "need p_i >= 1 and q >= 1");
    const int n = static_cast<int>(p.size());
    const int hi = std::accumulate(p.begin(), p.end(), 0) - (n - 1);
    const int lo = *std::max_element(p.begin(), p.end());
    if (q < lo || q > hi)
        throw Error(ErrorKind::OutOfInterval,
                    "q = " + std::to_string(q) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    std::sort(p.rbegin(), p.rend());
    KanenobuRecipe rec;
    for (int x : p) rec.r.push_back(x - 1);
    rec.s = q - 1;
    int before = 0;
    for (int j = 1; j <= n; ++j) {
        if (before <= rec.s && rec.s <= before + rec.r[static_cast<std::size_t>(j - 1)]) {
            rec.j = j;
            break;
        }
        before += rec.r[static_cast<std::size_t>(j - 1)];
    }
    int prefix = 0;
    for (int i = 1; i <= n; ++i) {
        const int ri = rec.r[static_cast<std::size_t>(i - 1)];
        if (i < rec.j)
            rec.summands.push_back({{ri, 1}});
        else if (i == rec.j)
            rec.summands.push_back({{rec.s - prefix, 1}, {ri, rec.j}});
        else
            rec.summands.push_back({{ri, i}});
        if (i < rec.j) prefix += ri;
    }
    return rec;
}

VolumeBounds volume_bounds(int tw, int genus, bool hypotheses_asserted) {
    if (genus < 1) throw Error(ErrorKind::HypothesisNotAsserted, "the Heegaard surface must have genus at least 1");
    if (!hypotheses_asserted)
        throw Error(ErrorKind::HypothesisNotAsserted,
                    "representativity and diagram hypotheses must be asserted by the caller");
    if (tw < 1) throw Error(ErrorKind::BadParameter, "twist number must be at least 1");
    VolumeBounds v;
    v.vol_lower = 0.5 * kVOct * (tw - (2 - 2 * genus));
    v.beta_g_upper = 2 * tw;
    v.chain_holds = v.c * v.beta_g_upper <= v.vol_lower + 1e-6;
    return v;
}

}  // namespace wirtlab
