#include "wirtlab/welded.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "wirtlab/errors.hpp"
#include "wirtlab/wirtinger.hpp"

namespace wirtlab {

std::string describe(const Move& m) {
    auto n = [](std::size_t x) { return std::to_string(x); };
    switch (m.kind) {
        case MoveKind::R1Add:
            return "R1+ gap " + n(m.a) + (m.over_first ? " OU" : " UO") + (m.sign > 0 ? " +" : " -");
        case MoveKind::R1Remove: return "R1- at " + n(m.a);
        case MoveKind::R2Add:
            return "R2+ gaps " + n(m.a) + "," + n(m.b) + (m.reversed ? " reversed" : "") + (m.sign > 0 ? " +" : " -");
        case MoveKind::R2Remove: return "R2- at " + n(m.a) + "," + n(m.b);
        case MoveKind::R3: return "R3 at " + n(m.a) + "," + n(m.b) + "," + n(m.c);
        case MoveKind::WeldedSwap: return "W swap at " + n(m.a);
    }
    return "?";
}

namespace {

[[noreturn]] void mismatch(const Move& m) {
    throw Error(ErrorKind::BadParameter, "move does not apply: " + describe(m));
}

std::vector<Visit> erase_positions(const std::vector<Visit>& v, std::vector<std::size_t> pos) {
    std::sort(pos.begin(), pos.end());
    std::vector<Visit> out;
    for (std::size_t i = 0, k = 0; i < v.size(); ++i) {
        if (k < pos.size() && pos[k] == i) { ++k; continue; }
        out.push_back(v[i]);
    }
    return out;
}

bool pair_is(const std::vector<Visit>& v, std::size_t i, int id, Pass p) {
    return v[i].id == id && v[i].pass == p;
}

// Checks the R3 pattern and returns the three crossing ids through x, y, z.
bool match_r3(const std::vector<Visit>& v, std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t L = v.size();
    if (L < 6) return false;
    std::size_t a1 = (a + 1) % L, b1 = (b + 1) % L, c1 = (c + 1) % L;
    std::vector<std::size_t> all{a, a1, b, b1, c, c1};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    if (v[a].pass != Pass::Over || v[a1].pass != Pass::Over) return false;
    const int s = v[a].sign;
    for (std::size_t i : all)
        if (v[i].sign != s) return false;
    // Forward: (Ox Oy)(Ux Oz)(Uy Uz). Backward: (Oy Ox)(Oz Ux)(Uz Uy).
    {
        int x = v[a].id, y = v[a1].id, z = v[b1].id;
        if (x != y && z != x && z != y && pair_is(v, b, x, Pass::Under) && pair_is(v, b1, z, Pass::Over) &&
            pair_is(v, c, y, Pass::Under) && pair_is(v, c1, z, Pass::Under))
            return true;
    }
    {
        int y = v[a].id, x = v[a1].id, z = v[b].id;
        if (x != y && z != x && z != y && pair_is(v, b, z, Pass::Over) && pair_is(v, b1, x, Pass::Under) &&
            pair_is(v, c, z, Pass::Under) && pair_is(v, c1, y, Pass::Under))
            return true;
    }
    return false;
}

bool match_r2_remove(const std::vector<Visit>& v, std::size_t a, std::size_t b) {
    const std::size_t L = v.size();
    if (L < 4) return false;
    std::size_t a1 = (a + 1) % L, b1 = (b + 1) % L;
    if (a == b || a == b1 || a1 == b) return false;
    if (v[a].pass != Pass::Over || v[a1].pass != Pass::Over) return false;
    int x = v[a].id, y = v[a1].id;
    if (x == y || v[a].sign == v[a1].sign) return false;
    if (v[b].pass != Pass::Under || v[b1].pass != Pass::Under) return false;
    return (v[b].id == x && v[b1].id == y) || (v[b].id == y && v[b1].id == x);
}

}  // namespace

GaussCode apply_move(const GaussCode& code, const Move& m) {
    const auto& v = code.visits();
    const std::size_t L = v.size();
    switch (m.kind) {
        case MoveKind::R1Add: {
            if (m.a > L) mismatch(m);
            const int id = code.max_id() + 1;
            std::vector<Visit> out = v;
            Visit o{id, Pass::Over, m.sign}, u{id, Pass::Under, m.sign};
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.a), {m.over_first ? o : u, m.over_first ? u : o});
            return GaussCode(std::move(out));
        }
        case MoveKind::R1Remove: {
            if (L < 2 || m.a >= L || v[m.a].id != v[(m.a + 1) % L].id) mismatch(m);
            return GaussCode(erase_positions(v, {m.a, (m.a + 1) % L}));
        }
        case MoveKind::R2Add: {
            if (m.a > L || m.b > L || m.a == m.b) mismatch(m);
            const int x = code.max_id() + 1, y = x + 1;
            std::vector<Visit> overs{{x, Pass::Over, m.sign}, {y, Pass::Over, -m.sign}};
            std::vector<Visit> unders = m.reversed
                ? std::vector<Visit>{{y, Pass::Under, -m.sign}, {x, Pass::Under, m.sign}}
                : std::vector<Visit>{{x, Pass::Under, m.sign}, {y, Pass::Under, -m.sign}};
            std::vector<Visit> out = v;
            // Insert at the later gap first so the earlier index stays valid.
            if (m.a > m.b) {
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.a), overs.begin(), overs.end());
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.b), unders.begin(), unders.end());
            } else {
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.b), unders.begin(), unders.end());
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.a), overs.begin(), overs.end());
            }
            return GaussCode(std::move(out));
        }
        case MoveKind::R2Remove: {
            if (m.a >= L || m.b >= L || !match_r2_remove(v, m.a, m.b)) mismatch(m);
            return GaussCode(erase_positions(v, {m.a, (m.a + 1) % L, m.b, (m.b + 1) % L}));
        }
        case MoveKind::R3: {
            if (m.a >= L || m.b >= L || m.c >= L || !match_r3(v, m.a, m.b, m.c)) mismatch(m);
            std::vector<Visit> out = v;
            for (std::size_t p : {m.a, m.b, m.c}) std::swap(out[p], out[(p + 1) % L]);
            return GaussCode(std::move(out));
        }
        case MoveKind::WeldedSwap: {
            if (L < 2 || m.a >= L) mismatch(m);
            std::size_t b = (m.a + 1) % L;
            if (v[m.a].pass != Pass::Over || v[b].pass != Pass::Over || v[m.a].id == v[b].id) mismatch(m);
            std::vector<Visit> out = v;
            std::swap(out[m.a], out[b]);
            return GaussCode(std::move(out));
        }
    }
    mismatch(m);
}

std::vector<Move> enumerate_moves(const GaussCode& code, std::size_t crossing_cap) {
    const auto& v = code.visits();
    const std::size_t L = v.size();
    std::vector<Move> moves;
    for (std::size_t a = 0; a < L && L >= 2; ++a)
        if (v[a].id == v[(a + 1) % L].id && (L > 2 || a == 0)) moves.push_back({MoveKind::R1Remove, a});
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b)
            if (match_r2_remove(v, a, b)) moves.push_back({MoveKind::R2Remove, a, b});
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t c = 0; c < L; ++c)
                if (match_r3(v, a, b, c)) moves.push_back({MoveKind::R3, a, b, c});
    for (std::size_t a = 0; a < L && L >= 2; ++a) {
        std::size_t b = (a + 1) % L;
        if (v[a].pass == Pass::Over && v[b].pass == Pass::Over && v[a].id != v[b].id && (L > 2 || a == 0))
            moves.push_back({MoveKind::WeldedSwap, a});
    }
    const std::size_t n = code.crossing_count();
    const std::size_t gaps = std::max<std::size_t>(L, 1);
    if (n + 1 <= crossing_cap)
        for (std::size_t a = 0; a < gaps; ++a)
            for (bool of : {true, false})
                for (int s : {1, -1}) moves.push_back({MoveKind::R1Add, a, 0, 0, of, false, s});
    if (n + 2 <= crossing_cap)
        for (std::size_t a = 0; a < gaps; ++a)
            for (std::size_t b = 0; b < gaps; ++b) {
                if (a == b) continue;
                for (bool rev : {false, true})
                    for (int s : {1, -1}) moves.push_back({MoveKind::R2Add, a, b, 0, true, rev, s});
            }
    return moves;
}

WeldedSearchResult search_welded_min_omega(const GaussCode& code, int budget, std::size_t crossing_cap) {
    if (budget < 0) throw Error(ErrorKind::BadParameter, "budget must be non-negative");
    struct Node {
        GaussCode code;
        int parent;
        Move move;
        int depth;
        int omega;
    };
    SearchOptions single{1};
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> seen;
    nodes.push_back({code, -1, {}, 0, omega(code, single).omega});
    seen.emplace(canonical_key(code), 0);
    int best = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= budget) continue;
        const GaussCode here = nodes[cur].code;
        for (const Move& mv : enumerate_moves(here, crossing_cap)) {
            GaussCode next = apply_move(here, mv);
            auto [it, fresh] = seen.emplace(canonical_key(next), static_cast<int>(nodes.size()));
            if (!fresh) continue;
            if (nodes.size() >= limits().welded_codes)
                throw Error(ErrorKind::ResourceLimit,
                            "welded search visited more than " + std::to_string(limits().welded_codes) + " codes");
            int w = omega(next, single).omega;
            nodes.push_back({std::move(next), cur, mv, nodes[cur].depth + 1, w});
            if (w < nodes[best].omega) best = static_cast<int>(nodes.size()) - 1;
            queue.push_back(static_cast<int>(nodes.size()) - 1);
        }
    }
    WeldedSearchResult res;
    res.min_omega = nodes[best].omega;
    res.best = nodes[best].code;
    res.visited = nodes.size();
    for (int at = best; nodes[at].parent >= 0; at = nodes[at].parent) res.moves.push_back(nodes[at].move);
    std::reverse(res.moves.begin(), res.moves.end());
    return res;
}

}  // namespace wirtlab
