#include "wirtlab/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "wirtlab/diagram.hpp"
#include "wirtlab/errors.hpp"
#include "wirtlab/wirtinger.hpp"

namespace wirtlab {

std::size_t CoxeterWordHash::operator()(const CoxeterWord& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, int>>& edges)
    : vertices_(std::move(vertices)) {
    std::set<std::string> names(vertices_.begin(), vertices_.end());
    if (names.size() != vertices_.size()) throw Error(ErrorKind::Validation, "duplicate vertex name");
    for (const auto& [un, vn, k] : edges) {
        int u = vertex(un), v = vertex(vn);
        if (u == v) throw Error(ErrorKind::Validation, "loop at vertex " + un);
        if (k < 2) throw Error(ErrorKind::Validation, "edge weight below 2 on " + un + "-" + vn);
        auto key = std::minmax(u, v);
        if (!weights_.emplace(key, k).second) throw Error(ErrorKind::Validation, "repeated edge " + un + "-" + vn);
        edges_.emplace_back(key.first, key.second, k);
    }
}

CoxeterGraph CoxeterGraph::dihedral(int k) { return CoxeterGraph({"s", "t"}, {{"s", "t", k}}); }

int CoxeterGraph::weight(int u, int v) const {
    auto it = weights_.find(std::minmax(u, v));
    return it == weights_.end() ? 0 : it->second;
}

int CoxeterGraph::vertex(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
    return static_cast<int>(it - vertices_.begin());
}

CoxeterWord parse_coxeter_word(const CoxeterGraph& g, const std::string& text) {
    CoxeterWord w;
    const bool spaced = text.find(' ') != std::string::npos;
    const bool short_names =
        std::all_of(g.vertices().begin(), g.vertices().end(), [](const std::string& s) { return s.size() == 1; });
    if (spaced || !short_names) {
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] == ' ') {
                ++i;
                continue;
            }
            std::size_t j = text.find(' ', i);
            if (j == std::string::npos) j = text.size();
            w.push_back(g.vertex(text.substr(i, j - i)));
            i = j;
        }
    } else {
        for (char c : text) w.push_back(g.vertex(std::string(1, c)));
    }
    return w;
}

std::string format_coxeter_word(const CoxeterGraph& g, const CoxeterWord& w) {
    const bool short_names =
        std::all_of(g.vertices().begin(), g.vertices().end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (int x : w) {
        if (!short_names && !out.empty()) out += ' ';
        out += g.vertices().at(static_cast<std::size_t>(x));
    }
    return out;
}

CoxeterEngine::CoxeterEngine(CoxeterGraph g)
    : g_(std::make_shared<const CoxeterGraph>(std::move(g))), cache_(std::make_shared<Cache>()) {}

namespace {

bool has_square(const CoxeterWord& w, std::size_t& at) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) {
            at = i;
            return true;
        }
    return false;
}

void free_reduce(CoxeterWord& w) {
    CoxeterWord out;
    for (int x : w) {
        if (!out.empty() && out.back() == x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w.swap(out);
}

}  // namespace

std::vector<CoxeterWord> CoxeterEngine::braid_class(const CoxeterWord& w, bool stop_on_square, bool& found_square,
                                                    CoxeterWord& square_word) const {
    found_square = false;
    std::unordered_set<CoxeterWord, CoxeterWordHash> seen{w};
    std::vector<CoxeterWord> order{w};
    std::deque<CoxeterWord> queue{w};
    while (!queue.empty()) {
        CoxeterWord cur = std::move(queue.front());
        queue.pop_front();
        std::size_t at;
        if (stop_on_square && has_square(cur, at)) {
            found_square = true;
            square_word = cur;
            return order;
        }
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const int s = cur[i], t = cur[i + 1];
            const int m = g_->weight(s, t);
            if (m == 0 || i + static_cast<std::size_t>(m) > cur.size()) continue;
            bool alt = true;
            for (int k = 0; k < m && alt; ++k) alt = cur[i + k] == (k % 2 == 0 ? s : t);
            if (!alt) continue;
            CoxeterWord nxt = cur;
            for (int k = 0; k < m; ++k) nxt[i + k] = k % 2 == 0 ? t : s;
            if (seen.insert(nxt).second) {
                if (seen.size() > limits().braid_class)
                    throw Error(ErrorKind::ResourceLimit,
                                "braid class exceeds " + std::to_string(limits().braid_class) + " words");
                order.push_back(nxt);
                queue.push_back(std::move(nxt));
            }
        }
    }
    return order;
}

CoxeterWord CoxeterEngine::normal_form(const CoxeterWord& input) const {
    for (int x : input)
        if (x < 0 || static_cast<std::size_t>(x) >= g_->rank())
            throw Error(ErrorKind::UnknownVertex, "letter " + std::to_string(x) + " is not a vertex");
    {
        std::lock_guard lock(cache_->mu);
        auto it = cache_->nf.find(input);
        if (it != cache_->nf.end()) return it->second;
    }
    CoxeterWord w = input;
    free_reduce(w);
    if (w.size() > limits().coxeter_word)
        throw Error(ErrorKind::ResourceLimit,
                    "word of length " + std::to_string(w.size()) + " exceeds the cap " +
                        std::to_string(limits().coxeter_word));
    CoxeterWord result;
    for (;;) {
        bool found;
        CoxeterWord sq;
        auto cls = braid_class(w, true, found, sq);
        if (found) {
            std::size_t at;
            has_square(sq, at);
            sq.erase(sq.begin() + static_cast<std::ptrdiff_t>(at), sq.begin() + static_cast<std::ptrdiff_t>(at) + 2);
            free_reduce(sq);
            w = std::move(sq);
            continue;
        }
        result = *std::min_element(cls.begin(), cls.end());
        break;
    }
    std::lock_guard lock(cache_->mu);
    cache_->nf.emplace(input, result);
    return result;
}

bool CoxeterEngine::is_reflection(const CoxeterWord& w) const {
    CoxeterWord r = normal_form(w);
    if (r.size() % 2 == 0) return false;
    bool found;
    CoxeterWord sq;
    for (const auto& v : braid_class(r, false, found, sq))
        if (std::equal(v.begin(), v.end(), v.rbegin())) return true;
    return false;
}

CoxeterWord CoxeterEngine::multiply(const CoxeterWord& a, const CoxeterWord& b) const {
    CoxeterWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return normal_form(w);
}

CoxeterWord CoxeterEngine::invert(const CoxeterWord& a) const { return normal_form(CoxeterWord(a.rbegin(), a.rend())); }

bool is_identity(const CoxeterGraph& g, const CoxeterWord& w) { return CoxeterEngine(g).is_identity_word(w); }

CoxeterWord conjugate_reflection(const CoxeterGraph& g, const CoxeterWord& w, const CoxeterWord& by) {
    CoxeterEngine eng(g);
    if (!eng.is_reflection(w)) throw Error(ErrorKind::NotAReflection, "word is not a reflection");
    CoxeterWord x = by;
    x.insert(x.end(), w.begin(), w.end());
    x.insert(x.end(), by.rbegin(), by.rend());
    return eng.normal_form(x);
}

std::string status_name(LabelingStatus s) {
    switch (s) {
        case LabelingStatus::Ok: return "ok";
        case LabelingStatus::Inconsistent: return "Inconsistent";
        case LabelingStatus::NotSurjective: return "NotSurjective";
    }
    return "?";
}

LabelingReport verify_coxeter_labeling(const GaussCode& code, const CoxeterGraph& g,
                                       const std::map<int, CoxeterWord>& seeds) {
    const StrandLayout lay = layout_of(code);
    const int n = static_cast<int>(lay.strand_count);
    CoxeterEngine eng(g);
    std::vector<int> seed_ids;
    LabelingReport rep;
    rep.labels.assign(lay.strand_count, {});
    for (const auto& [s, w] : seeds) {
        if (s < 0 || s >= n) throw Error(ErrorKind::UnknownStrand, "no strand " + std::to_string(s));
        if (!eng.is_reflection(w)) throw Error(ErrorKind::NotAReflection, "seed label of strand " + std::to_string(s));
        rep.labels[static_cast<std::size_t>(s)] = eng.normal_form(w);
        seed_ids.push_back(s);
    }
    const PartialColoring col = propagate(code, seed_ids);
    if (!col.complete()) throw Error(ErrorKind::BadParameter, "seed labels do not reach every strand");

    auto conj = [&](const CoxeterWord& by, const CoxeterWord& x) {
        CoxeterWord w = by;
        w.insert(w.end(), x.begin(), x.end());
        w.insert(w.end(), by.rbegin(), by.rend());
        return eng.normal_form(w);
    };
    auto roles_of = [&](int id) -> const CrossingRoles& {
        return *std::find_if(lay.crossings.begin(), lay.crossings.end(),
                             [id](const CrossingRoles& r) { return r.id == id; });
    };
    for (const auto& mv : col.trace) {
        const auto& r = roles_of(mv.crossing);
        const auto& b = rep.labels[static_cast<std::size_t>(r.over)];
        if (mv.strand == r.outgoing)
            rep.labels[static_cast<std::size_t>(r.outgoing)] = conj(b, rep.labels[static_cast<std::size_t>(r.incoming)]);
        else
            rep.labels[static_cast<std::size_t>(r.incoming)] = conj(b, rep.labels[static_cast<std::size_t>(r.outgoing)]);
    }
    rep.consistent = true;
    for (const auto& r : lay.crossings) {
        const auto want = conj(rep.labels[static_cast<std::size_t>(r.over)], rep.labels[static_cast<std::size_t>(r.incoming)]);
        if (want != rep.labels[static_cast<std::size_t>(r.outgoing)]) {
            rep.consistent = false;
            rep.clash_crossing = r.id;
            rep.clash_strand = r.outgoing;
            rep.status = LabelingStatus::Inconsistent;
            rep.message = "label clash at crossing " + std::to_string(r.id) + " on strand " + std::to_string(r.outgoing);
            return rep;
        }
    }
    for (int v = 0; v < static_cast<int>(g.rank()); ++v) {
        bool seen = std::any_of(rep.labels.begin(), rep.labels.end(),
                                [v](const CoxeterWord& w) { return w.size() == 1 && w[0] == v; });
        if (!seen) rep.missing_vertices.push_back(v);
    }
    rep.surjective = rep.missing_vertices.empty();
    if (!rep.surjective) {
        rep.status = LabelingStatus::NotSurjective;
        rep.message = "vertex " + g.vertices()[static_cast<std::size_t>(rep.missing_vertices.front())] +
                      " never appears as a plain label";
        return rep;
    }
    rep.rank_bound = g.rank();
    return rep;
}

int virtual_bbkm_weight_rule(int n, int v, int f) {
    if (n < 1 || v < 0 || f < 0 || v + f > n)
        throw Error(ErrorKind::BadParameter, "need n >= 1 and 0 <= v, f with v + f <= n");
    // Labels in the dihedral group are tracked as reflection indices: the pair
    // (l, r) names the reflections on the two strands leaving the region.
    long long l = 0, r = -1;
    auto cross = [&] {
        long long nl = 2 * l - r;
        r = l;
        l = nl;
    };
    auto swap_sides = [&] { std::swap(l, r); };
    for (int i = 0; i < v; ++i) swap_sides();
    for (int i = 0; i < f; ++i) {
        swap_sides();
        cross();
        cross();
    }
    for (int i = 0; i < n - v - f; ++i) cross();
    return static_cast<int>(std::gcd(std::llabs(l), std::llabs(r + 1)));
}

}  // namespace wirtlab
