#include "wirtlab/alternating.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "wirtlab/diagram.hpp"
#include "wirtlab/errors.hpp"
#include "wirtlab/wirtinger.hpp"

namespace wirtlab {

Permutation::Permutation(std::size_t degree) : img_(degree) {
    if (degree > 255) throw Error(ErrorKind::BadParameter, "degree above 255");
    std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    Permutation p(images.size());
    std::vector<bool> hit(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        int x = images[i] - 1;
        if (x < 0 || static_cast<std::size_t>(x) >= images.size() || hit[static_cast<std::size_t>(x)])
            throw Error(ErrorKind::Validation, "images do not form a bijection");
        hit[static_cast<std::size_t>(x)] = true;
        p.img_[i] = static_cast<std::uint8_t>(x);
    }
    return p;
}

Permutation Permutation::cycle(std::size_t degree, const std::vector<int>& points) {
    Permutation p(degree);
    std::vector<bool> used(degree);
    for (int x : points) {
        if (x < 1 || static_cast<std::size_t>(x) > degree)
            throw Error(ErrorKind::OutOfRange, "point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
        if (used[static_cast<std::size_t>(x - 1)]) throw Error(ErrorKind::Validation, "repeated point in cycle");
        used[static_cast<std::size_t>(x - 1)] = true;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        p.img_[static_cast<std::size_t>(points[i] - 1)] = static_cast<std::uint8_t>(points[(i + 1) % points.size()] - 1);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<int> c;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            c.push_back(static_cast<int>(j) + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool Permutation::is_even() const {
    std::size_t odd_moves = 0;
    for (const auto& c : cycles()) odd_moves += c.size() - 1;
    return odd_moves % 2 == 0;
}

bool Permutation::is_p_cycle(int p) const {
    if (p == 1) return is_identity();
    auto t = cycle_type();
    return t.size() == 1 && t[0] == p;
}

std::size_t Permutation::order() const {
    std::size_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, c.size());
    return o;
}

Permutation Permutation::inverse() const {
    Permutation q(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) q.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return q;
}

Permutation Permutation::extended(std::size_t degree) const {
    if (degree <= img_.size()) return *this;
    Permutation q(degree);
    std::copy(img_.begin(), img_.end(), q.img_.begin());
    return q;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    const std::size_t n = std::max(a.degree(), b.degree());
    const Permutation x = a.extended(n), y = b.extended(n);
    Permutation out(n);
    for (std::size_t i = 0; i < n; ++i) out.img_[i] = x.img_[y.img_[i]];
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = p.degree();
    for (auto x : p.raw()) h = h * 131 + x;
    return h;
}

Permutation parse_permutation(const std::string& text, std::size_t degree) {
    std::vector<std::vector<int>> cyc;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (text.substr(i) == "e" || text.substr(i) == "id" || text.substr(i) == "1") {
        return Permutation(degree);
    }
    while (i < text.size()) {
        if (text[i] != '(') throw Error(ErrorKind::Syntax, "expected '(' in permutation '" + text + "'");
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw Error(ErrorKind::Syntax, "unclosed cycle in '" + text + "'");
        std::string body = text.substr(i + 1, close - i - 1);
        std::vector<int> pts;
        const bool separated = body.find_first_of(" ,\t") != std::string::npos;
        if (separated) {
            std::string tok;
            for (char c : body + " ") {
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    tok += c;
                } else if (c == ' ' || c == ',' || c == '\t') {
                    if (!tok.empty()) pts.push_back(std::stoi(tok));
                    tok.clear();
                } else {
                    throw Error(ErrorKind::Syntax, std::string("bad character '") + c + "' in cycle");
                }
            }
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw Error(ErrorKind::Syntax, std::string("bad character '") + c + "' in cycle");
                pts.push_back(c - '0');
            }
        }
        cyc.push_back(pts);
        i = close + 1;
        skip();
    }
    std::size_t inferred = 0;
    for (const auto& c : cyc)
        for (int x : c) {
            if (x < 1) throw Error(ErrorKind::Syntax, "points start at 1");
            inferred = std::max(inferred, static_cast<std::size_t>(x));
        }
    if (degree == 0) degree = inferred;
    if (inferred > degree) throw Error(ErrorKind::OutOfRange, "point beyond degree " + std::to_string(degree));
    Permutation p(degree);
    for (const auto& c : cyc) p = p * Permutation::cycle(degree, c);
    return p;
}

std::string to_cycle_string(const Permutation& p) {
    auto cs = p.cycles();
    if (cs.empty()) return "()";
    const bool compact = p.degree() <= 9;
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i && !compact) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

Permutation step_cycle(int a, int p, int m) {
    if (p < 1 || a < 1 || a + p - 1 > m)
        throw Error(ErrorKind::OutOfRange, "step cycle (" + std::to_string(a) + ", length " + std::to_string(p) +
                                               ") does not fit in degree " + std::to_string(m));
    std::vector<int> pts(static_cast<std::size_t>(p));
    std::iota(pts.begin(), pts.end(), a);
    return Permutation::cycle(static_cast<std::size_t>(m), pts);
}

namespace {

Permutation conj_signed(const Permutation& b, const Permutation& a, int sign) {
    return sign > 0 ? b * a * b.inverse() : b.inverse() * a * b;
}

PermLabelingReport propagate_perm(const GaussCode& code, std::size_t degree, const std::map<int, Permutation>& seeds) {
    const StrandLayout lay = layout_of(code);
    const int n = static_cast<int>(lay.strand_count);
    PermLabelingReport rep;
    rep.labels.assign(lay.strand_count, Permutation(degree));
    std::vector<int> ids;
    for (const auto& [s, perm] : seeds) {
        if (s < 0 || s >= n) throw Error(ErrorKind::UnknownStrand, "no strand " + std::to_string(s));
        rep.labels[static_cast<std::size_t>(s)] = perm.extended(degree);
        ids.push_back(s);
    }
    const PartialColoring col = propagate(code, ids);
    if (!col.complete()) throw Error(ErrorKind::BadParameter, "seed labels do not reach every strand");
    std::map<int, const CrossingRoles*> by_id;
    for (const auto& r : lay.crossings) by_id[r.id] = &r;
    auto L = [&](int s) -> Permutation& { return rep.labels[static_cast<std::size_t>(s)]; };
    for (const auto& mv : col.trace) {
        const auto& r = *by_id.at(mv.crossing);
        if (mv.strand == r.outgoing)
            L(r.outgoing) = conj_signed(L(r.over), L(r.incoming), r.sign);
        else
            L(r.incoming) = conj_signed(L(r.over), L(r.outgoing), -r.sign);
    }
    rep.consistent = true;
    for (const auto& r : lay.crossings) {
        if (conj_signed(L(r.over), L(r.incoming), r.sign) != L(r.outgoing)) {
            rep.consistent = false;
            rep.status = PermStatus::Inconsistent;
            rep.clash_crossing = r.id;
            rep.clash_strand = r.outgoing;
            rep.message = "label clash at crossing " + std::to_string(r.id) + " on strand " + std::to_string(r.outgoing);
            break;
        }
    }
    return rep;
}

}  // namespace

TwistRegionLabels label_twist_region(int p) {
    if (p < 2) throw Error(ErrorKind::BadParameter, "twist region labels need p >= 2");
    TwistRegionLabels out;
    out.p = p;
    out.degree = static_cast<std::size_t>(2 * p - 1);
    out.code = build_torus_2braid(p, 1);
    const Permutation lo = step_cycle(1, p, 2 * p - 1), hi = step_cycle(p, p, 2 * p - 1);
    // The two strands leaving the bottom crossing carry the step cycles: the
    // over strand gets (1..p) and the outgoing one (p..2p-1).
    const CrossingRoles bottom = layout_of(out.code).crossings.front();
    out.seeds = {bottom.over, bottom.outgoing};
    auto rep = propagate_perm(out.code, out.degree, {{bottom.over, lo}, {bottom.outgoing, hi}});
    if (rep.consistent) {
        out.labels = rep.labels;
        return out;
    }
    throw Error(ErrorKind::BadParameter, "no consistent step-cycle seeding on the closed 2-braid");
}

PermLabelingReport verify_perm_labeling(const GaussCode& code, const CycleLabeling& labeling) {
    for (const auto& [s, perm] : labeling.seeds)
        if (!perm.is_p_cycle(labeling.p))
            throw Error(ErrorKind::NotPCycle,
                        "seed of strand " + std::to_string(s) + " is not a " + std::to_string(labeling.p) + "-cycle");
    std::size_t degree = labeling.degree;
    for (const auto& [s, perm] : labeling.seeds) degree = std::max(degree, perm.degree());
    return propagate_perm(code, degree, labeling.seeds);
}

bool is_transitive(const std::vector<Permutation>& gens, std::size_t m) {
    if (m == 0) return true;
    std::vector<bool> seen(m);
    std::deque<std::size_t> q{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (const auto& g : gens) {
            auto e = g.extended(m);
            for (std::size_t y : {static_cast<std::size_t>(e.raw()[x]), static_cast<std::size_t>(e.inverse().raw()[x])})
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    q.push_back(y);
                }
        }
    }
    return count == m;
}

bool is_primitive(const std::vector<Permutation>& gens, std::size_t m) {
    if (!is_transitive(gens, m)) return false;
    std::vector<Permutation> ext;
    for (const auto& g : gens) ext.push_back(g.extended(m));
    // The smallest block containing {0, b}: merge classes and close under the
    // generators until the partition is stable.
    for (std::size_t b = 1; b < m; ++b) {
        std::vector<std::size_t> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::deque<std::pair<std::size_t, std::size_t>> pending{{0, b}};
        parent[b] = 0;
        while (!pending.empty()) {
            auto [x, y] = pending.front();
            pending.pop_front();
            for (const auto& g : ext) {
                std::size_t gx = find(g.raw()[x]), gy = find(g.raw()[y]);
                if (gx != gy) {
                    parent[gy] = gx;
                    pending.emplace_back(g.raw()[x], g.raw()[y]);
                }
            }
        }
        std::size_t root = find(0), size = 0;
        for (std::size_t x = 0; x < m; ++x) size += find(x) == root;
        if (size != m) return false;
    }
    return true;
}

namespace {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pack(const Permutation& p) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < p.degree(); ++i) v |= static_cast<std::uint64_t>(p.raw()[i]) << (4 * i);
    return v;
}

std::uint64_t compose_packed(std::uint64_t a, const std::vector<std::uint8_t>& b, std::size_t m) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t bi = b[i];
        v |= ((a >> (4 * bi)) & 0xF) << (4 * i);
    }
    return v;
}

}  // namespace

GenerationResult generates_alternating(const std::vector<Permutation>& labels, std::size_t m) {
    for (const auto& g : labels)
        if (!g.is_even()) throw Error(ErrorKind::OddPermutation, to_cycle_string(g) + " is odd");
    for (const auto& g : labels)
        if (g.degree() > m)
            for (std::size_t x = m; x < g.degree(); ++x)
                if (g.raw()[x] != x)
                    throw Error(ErrorKind::OutOfRange, to_cycle_string(g) + " moves points beyond " + std::to_string(m));
    std::uint64_t half_factorial = 1;
    for (std::size_t k = 3; k <= m; ++k) half_factorial *= k;
    if (m < 2) half_factorial = 1;
    GenerationResult res;
    if (m <= limits().closure_degree && m <= 16) {
        res.method = "closure";
        std::vector<std::vector<std::uint8_t>> gens;
        for (const auto& g : labels) gens.push_back(g.extended(m).raw());
        const std::uint64_t id = pack(Permutation(m));
        std::unordered_set<std::uint64_t> seen{id};
        std::deque<std::uint64_t> q{id};
        while (!q.empty()) {
            std::uint64_t cur = q.front();
            q.pop_front();
            for (const auto& g : gens) {
                std::uint64_t nxt = compose_packed(cur, g, m);
                if (seen.insert(nxt).second) {
                    if (seen.size() > limits().closure_elements)
                        throw Error(ErrorKind::ResourceLimit, "closure exceeds " +
                                                                  std::to_string(limits().closure_elements) + " elements");
                    q.push_back(nxt);
                }
            }
        }
        res.order = seen.size();
        res.generates = seen.size() == half_factorial;
        return res;
    }
    res.method = "jordan";
    if (!is_transitive(labels, m)) return res;
    if (!is_primitive(labels, m)) return res;
    for (const auto& g : labels) {
        auto t = g.cycle_type();
        if (t.size() == 1 && (t[0] == 3 || (is_prime(static_cast<std::size_t>(t[0])) &&
                                            static_cast<std::size_t>(t[0]) + 3 <= m))) {
            res.generates = true;
            return res;
        }
    }
    throw Error(ErrorKind::ResourceLimit,
                "degree " + std::to_string(m) + " is above the enumeration cap and no Jordan certificate applies");
}

int rank_lower_bound_pcycles(int p, int m) {
    if (p < 3 || p % 2 == 0 || m < p || (m == 3 && p == 3))
        throw Error(ErrorKind::BadParameter, "need odd p >= 3, m >= p and (m, p) != (3, 3)");
    int c = (m - 1 + p - 2) / (p - 1);
    return std::max(2, c);
}

}  // namespace wirtlab
