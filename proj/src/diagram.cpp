#include "wirtlab/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "wirtlab/errors.hpp"

namespace wirtlab {

std::vector<Strand> strands_of(const GaussCode& code) {
    const auto& v = code.visits();
    const std::size_t L = v.size();
    std::vector<std::size_t> unders;
    for (std::size_t i = 0; i < L; ++i)
        if (v[i].pass == Pass::Under) unders.push_back(i);
    if (unders.empty()) {
        Strand s;
        for (std::size_t i = 0; i < L; ++i) s.over_visits.push_back(i);
        return {s};
    }
    std::vector<Strand> strands(unders.size());
    for (std::size_t k = 0; k < strands.size(); ++k) strands[k].id = static_cast<int>(k);
    std::size_t first = unders.front();
    std::size_t cur = 0;
    strands[0].begins_after = first;
    for (std::size_t k = 1; k <= L; ++k) {
        std::size_t pos = (first + k) % L;
        if (v[pos].pass == Pass::Over) {
            strands[cur].over_visits.push_back(pos);
        } else {
            strands[cur].ends_at = pos;
            if (cur + 1 < strands.size()) strands[++cur].begins_after = pos;
        }
    }
    return strands;
}

StrandLayout layout_of(const GaussCode& code) {
    StrandLayout out;
    const auto strands = strands_of(code);
    out.strand_count = strands.size();
    out.strand_at.assign(code.size(), 0);
    for (const auto& s : strands) {
        for (std::size_t p : s.over_visits) out.strand_at[p] = s.id;
        if (s.ends_at != npos) out.strand_at[s.ends_at] = s.id;
    }
    for (int id : code.crossing_ids()) {
        const auto& site = code.sites(id);
        CrossingRoles r;
        r.id = id;
        r.sign = site.sign;
        r.over = out.strand_at[site.over];
        r.incoming = out.strand_at[site.under];
        r.outgoing = static_cast<int>((r.incoming + 1) % out.strand_count);
        out.crossings.push_back(r);
    }
    return out;
}

int overpass_count(const GaussCode& code) {
    const auto& v = code.visits();
    const std::size_t L = v.size();
    int blocks = 0;
    for (std::size_t i = 0; i < L; ++i)
        if (v[i].pass == Pass::Over && v[(i + L - 1) % L].pass == Pass::Under) ++blocks;
    return blocks == 0 ? 1 : blocks;
}

GaussCode virtualize(const GaussCode& code, int crossing) {
    code.sites(crossing);
    std::vector<Visit> out;
    for (const auto& x : code.visits())
        if (x.id != crossing) out.push_back(x);
    return GaussCode(std::move(out));
}

GaussCode connected_sum(const GaussCode& a, const GaussCode& b, std::size_t base_a, std::size_t base_b) {
    auto check = [](const GaussCode& c, std::size_t base) {
        if (base != 0 && base >= c.size())
            throw Error(ErrorKind::BadParameter, "basepoint " + std::to_string(base) + " out of range");
    };
    check(a, base_a);
    check(b, base_b);
    std::vector<Visit> out = rotate(a, base_a).visits();
    const int shift = a.max_id();
    const GaussCode rb = rotate(b, base_b);
    for (Visit x : rb.visits()) {
        x.id += shift;
        out.push_back(x);
    }
    return GaussCode(std::move(out));
}

GaussCode flank_switch(const GaussCode& code, int crossing) {
    code.sites(crossing);
    std::vector<Visit> out = code.visits();
    for (auto& x : out)
        if (x.id == crossing) x.sign = -x.sign;
    return GaussCode(std::move(out));
}

namespace {

// Positions i where visits i and i+1 belong to the unordered pair {a,b}.
std::map<std::pair<int, int>, std::vector<std::size_t>> adjacency_sites(const GaussCode& code) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> adj;
    const auto& v = code.visits();
    const std::size_t L = v.size();
    for (std::size_t i = 0; i < L; ++i) {
        int a = v[i].id, b = v[(i + 1) % L].id;
        if (a == b) continue;
        adj[{std::min(a, b), std::max(a, b)}].push_back(i);
    }
    return adj;
}

bool has_disjoint_pair(const std::vector<std::size_t>& sites, std::size_t L) {
    for (std::size_t x = 0; x < sites.size(); ++x)
        for (std::size_t y = x + 1; y < sites.size(); ++y) {
            std::size_t i = sites[x], j = sites[y];
            if (j != (i + 1) % L && i != (j + 1) % L) return true;
        }
    return false;
}

// Bigon partner of `crossing` and whether the two passages run parallel.
bool bigon_orientation(const GaussCode& code, int crossing, bool& parallel) {
    const auto& v = code.visits();
    const std::size_t L = v.size();
    const auto& site = code.sites(crossing);
    for (const auto& [pair, sites] : adjacency_sites(code)) {
        if (pair.first != crossing && pair.second != crossing) continue;
        if (!has_disjoint_pair(sites, L)) continue;
        int d = pair.first == crossing ? pair.second : pair.first;
        auto side = [&](std::size_t pos) { return v[(pos + 1) % L].id == d ? 1 : (v[(pos + L - 1) % L].id == d ? -1 : 0); };
        int s1 = side(site.over), s2 = side(site.under);
        if (s1 == 0 || s2 == 0) continue;
        parallel = s1 == s2;
        return true;
    }
    return false;
}

}  // namespace

GaussCode flank(const GaussCode& code, int crossing, bool balance) {
    const auto& site = code.sites(crossing);
    bool parallel = true;
    if (balance && !bigon_orientation(code, crossing, parallel))
        throw Error(ErrorKind::NotInTwistRegion,
                    "crossing " + std::to_string(crossing) + " has no bigon partner to balance against");
    const int fresh = code.max_id() + 1;
    std::vector<Visit> out;
    out.reserve(code.size() + 2);
    for (std::size_t i = 0; i < code.size(); ++i) {
        Visit x = code[i];
        if (x.id != crossing) {
            out.push_back(x);
            continue;
        }
        x.pass = x.pass == Pass::Over ? Pass::Under : Pass::Over;
        if (!balance) {
            out.push_back(x);
        } else if (i == site.under) {
            out.push_back(x);
            out.push_back({fresh, Pass::Under, site.sign});
        } else if (parallel) {
            out.push_back(x);
            out.push_back({fresh, Pass::Over, site.sign});
        } else {
            out.push_back({fresh, Pass::Over, site.sign});
            out.push_back(x);
        }
    }
    return GaussCode(std::move(out));
}

GaussCode handle_drag(const GaussCode& code, int strand) {
    const auto strands = strands_of(code);
    if (strand < 0 || static_cast<std::size_t>(strand) >= strands.size())
        throw Error(ErrorKind::UnknownStrand, "no strand " + std::to_string(strand));
    if (code.empty()) return code;
    const std::size_t start = strands[strand].begins_after == npos ? 0 : strands[strand].begins_after + 1;
    const GaussCode turned = rotate(code, start % code.size());
    int next = code.max_id();
    std::map<int, int> twin;
    for (int id : code.crossing_ids()) twin[id] = ++next;
    std::vector<Visit> out;
    std::vector<Visit> dragged;
    for (const auto& x : turned.visits()) {
        out.push_back(x);
        if (x.pass == Pass::Over) out.push_back({twin[x.id], Pass::Over, -x.sign});
        else dragged.push_back({twin[x.id], Pass::Under, -x.sign});
    }
    // The dragged arc closes the curve by running back to the attaching point,
    // so it meets the under-crossings in reverse order and opposite direction.
    out.insert(out.end(), dragged.rbegin(), dragged.rend());
    return GaussCode(std::move(out));
}

TwistRegionReport twist_regions(const GaussCode& code) {
    const auto ids = code.crossing_ids();
    std::map<int, int> parent;
    for (int id : ids) parent[id] = id;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [pair, sites] : adjacency_sites(code))
        if (has_disjoint_pair(sites, code.size())) parent[find(pair.first)] = find(pair.second);
    std::map<int, std::vector<int>> groups;
    for (int id : ids) groups[find(id)].push_back(id);
    TwistRegionReport report;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        report.regions.push_back({members, members.size()});
    }
    std::sort(report.regions.begin(), report.regions.end(),
              [](const TwistRegion& a, const TwistRegion& b) { return a.crossings.front() < b.crossings.front(); });
    report.tw = report.regions.size();
    return report;
}

int supporting_genus(const GaussCode& code) {
    const auto& v = code.visits();
    const std::size_t L = v.size();
    if (L == 0) return 0;
    // Half-edge (position, 0=in / 1=out); rotation order at each crossing is
    // counterclockwise and depends on the sign.
    auto key = [](std::size_t pos, int out) { return pos * 2 + static_cast<std::size_t>(out); };
    std::vector<std::size_t> rot(2 * L);
    for (int id : code.crossing_ids()) {
        const auto& s = code.sites(id);
        std::array<std::size_t, 4> order = s.sign > 0
            ? std::array<std::size_t, 4>{key(s.over, 1), key(s.under, 1), key(s.over, 0), key(s.under, 0)}
            : std::array<std::size_t, 4>{key(s.under, 1), key(s.over, 1), key(s.under, 0), key(s.over, 0)};
        for (int k = 0; k < 4; ++k) rot[order[k]] = order[(k + 1) % 4];
    }
    auto other = [&](std::size_t h) {
        std::size_t pos = h / 2;
        return h % 2 == 1 ? key((pos + 1) % L, 0) : key((pos + L - 1) % L, 1);
    };
    std::vector<char> seen(2 * L, 0);
    long faces = 0;
    for (std::size_t h = 0; h < 2 * L; ++h) {
        if (seen[h]) continue;
        ++faces;
        std::size_t x = h;
        while (!seen[x]) {
            seen[x] = 1;
            x = rot[other(x)];
        }
    }
    const long V = static_cast<long>(L / 2), E = static_cast<long>(L);
    return static_cast<int>((2 - V + E - faces) / 2);
}

namespace {

// Port graph of a planar diagram. Each crossing has ports BL, BR, TL, TR; a
// strand runs BL<->TR and another BR<->TL. Joints are degree-two points used
// for caps and closures.
class PortGraph {
public:
    enum Port { BL = 0, BR = 1, TL = 2, TR = 3 };

    int add_crossing(bool bl_tr_over) {
        over_bltr_.push_back(bl_tr_over);
        for (int k = 0; k < 4; ++k) port_nbr_.emplace_back();
        return static_cast<int>(over_bltr_.size()) - 1;
    }
    // Joints live in a separate id space of negative numbers.
    int add_joint() {
        joint_nbr_.emplace_back();
        return -static_cast<int>(joint_nbr_.size());
    }
    static int port(int c, Port p) { return 4 * c + p; }
    static bool is_port(int node) { return node >= 0; }
    void connect(int a, int b) {
        nbrs(a).push_back(b);
        nbrs(b).push_back(a);
    }

    GaussCode trace() const {
        const int n = static_cast<int>(over_bltr_.size());
        if (n == 0) throw Error(ErrorKind::BadParameter, "diagram without crossings");
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < 4; ++k)
                if (port_nbr_[port(c, static_cast<Port>(k))].size() != 1)
                    throw Error(ErrorKind::BadParameter, "dangling port in builder");
        struct Pass_ { int c; bool over; std::array<int, 2> dir; };
        std::vector<Pass_> passes;
        std::set<int> entered;
        int entry = port(0, BL);
        while (!entered.count(entry)) {
            entered.insert(entry);
            int c = entry / 4;
            Port p = static_cast<Port>(entry % 4);
            Port q = p == BL ? TR : p == TR ? BL : p == BR ? TL : BR;
            bool on_bltr = p == BL || p == TR;
            std::array<int, 2> dir = p == BL ? std::array<int, 2>{1, 1}
                                   : p == TR ? std::array<int, 2>{-1, -1}
                                   : p == BR ? std::array<int, 2>{-1, 1}
                                             : std::array<int, 2>{1, -1};
            passes.push_back({c, on_bltr == over_bltr_[c], dir});
            int prev = port(c, q);
            int node = port_nbr_[prev][0];
            while (!is_port(node)) {
                const auto& jn = joint_nbr_[-node - 1];
                int nxt = jn[0] == prev ? jn[1] : jn[0];
                prev = node;
                node = nxt;
            }
            entry = node;
        }
        if (passes.size() != 2 * static_cast<std::size_t>(n))
            throw Error(ErrorKind::NotAKnot, "builder parameters give a link with more than one component");
        std::map<int, std::array<int, 2>> over_dir, under_dir;
        for (const auto& ps : passes) (ps.over ? over_dir : under_dir)[ps.c] = ps.dir;
        std::vector<Visit> visits;
        for (const auto& ps : passes) {
            auto a = over_dir[ps.c], b = under_dir[ps.c];
            int sign = a[0] * b[1] - a[1] * b[0] > 0 ? 1 : -1;
            visits.push_back({ps.c + 1, ps.over ? Pass::Over : Pass::Under, sign});
        }
        return relabel_by_first_appearance(GaussCode(std::move(visits)));
    }

private:
    std::vector<int>& nbrs(int node) { return node >= 0 ? port_nbr_[node] : joint_nbr_[-node - 1]; }

    std::vector<bool> over_bltr_;
    std::vector<std::vector<int>> port_nbr_;
    std::vector<std::vector<int>> joint_nbr_;
};

}  // namespace

GaussCode build_torus_2braid(int p, int n) {
    if (p < 2 || n < 1) throw Error(ErrorKind::BadParameter, "torus 2-braid needs p >= 2 and n >= 1");
    PortGraph g;
    const int N = 2 * p - 1;
    std::vector<int> cs;
    for (int k = 0; k < N; ++k) cs.push_back(g.add_crossing(true));
    for (int k = 0; k < N; ++k) {
        int a = cs[k], b = cs[(k + 1) % N];
        g.connect(PortGraph::port(a, PortGraph::TL), PortGraph::port(b, PortGraph::BL));
        g.connect(PortGraph::port(a, PortGraph::TR), PortGraph::port(b, PortGraph::BR));
    }
    const GaussCode one = g.trace();
    GaussCode sum = one;
    for (int k = 1; k < n; ++k) sum = connected_sum(sum, one);
    return sum;
}

GaussCode build_pretzel(const std::vector<int>& q) {
    if (q.empty()) throw Error(ErrorKind::BadParameter, "pretzel needs at least one column");
    PortGraph g;
    struct Ends { int bl, br, tl, tr; };
    std::vector<Ends> ends;
    for (int qi : q) {
        if (qi == 0) throw Error(ErrorKind::BadParameter, "pretzel column with zero crossings");
        std::vector<int> ids;
        for (int k = 0; k < std::abs(qi); ++k) ids.push_back(g.add_crossing(qi > 0));
        for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
            g.connect(PortGraph::port(ids[k], PortGraph::TL), PortGraph::port(ids[k + 1], PortGraph::BL));
            g.connect(PortGraph::port(ids[k], PortGraph::TR), PortGraph::port(ids[k + 1], PortGraph::BR));
        }
        ends.push_back({PortGraph::port(ids.front(), PortGraph::BL), PortGraph::port(ids.front(), PortGraph::BR),
                        PortGraph::port(ids.back(), PortGraph::TL), PortGraph::port(ids.back(), PortGraph::TR)});
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const Ends& a = ends[i];
        const Ends& b = ends[(i + 1) % ends.size()];
        g.connect(a.tr, b.tl);
        g.connect(a.br, b.bl);
    }
    return g.trace();
}

GaussCode build_twist_chain(const std::vector<int>& weights) {
    if (weights.empty()) throw Error(ErrorKind::BadParameter, "twist chain needs at least one box");
    PortGraph g;
    std::array<int, 4> bottom{};
    for (auto& j : bottom) j = g.add_joint();
    g.connect(bottom[0], bottom[1]);
    g.connect(bottom[2], bottom[3]);
    std::array<int, 4> cur = bottom;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        int w = weights[i];
        if (w == 0) throw Error(ErrorKind::BadParameter, "twist box with zero crossings");
        // Boxes alternate between the middle pair and the left pair; the
        // handedness flip keeps the chain alternating for positive weights.
        const int lo = i % 2 == 0 ? 1 : 0;
        const bool bltr = i % 2 == 0 ? w > 0 : w < 0;
        for (int k = 0; k < std::abs(w); ++k) {
            int c = g.add_crossing(bltr);
            g.connect(cur[lo], PortGraph::port(c, PortGraph::BL));
            g.connect(cur[lo + 1], PortGraph::port(c, PortGraph::BR));
            cur[lo] = PortGraph::port(c, PortGraph::TL);
            cur[lo + 1] = PortGraph::port(c, PortGraph::TR);
        }
    }
    // A final box on the left pair would be undone by a cap over that pair, so
    // even-length chains close with nested caps instead.
    if (weights.size() % 2 == 1) {
        g.connect(cur[0], cur[1]);
        g.connect(cur[2], cur[3]);
    } else {
        g.connect(cur[1], cur[2]);
        g.connect(cur[0], cur[3]);
    }
    return g.trace();
}

}  // namespace wirtlab
