#include "wirtlab/wirtinger.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "wirtlab/errors.hpp"

namespace wirtlab {

bool PartialColoring::complete() const {
    return std::all_of(colored.begin(), colored.end(), [](bool b) { return b; });
}

std::size_t PartialColoring::colored_count() const {
    return static_cast<std::size_t>(std::count(colored.begin(), colored.end(), true));
}

PartialColoring propagate(const GaussCode& code, const std::vector<int>& seeds) {
    const StrandLayout lay = layout_of(code);
    if (seeds.empty()) throw Error(ErrorKind::BadParameter, "propagate needs at least one seed");
    PartialColoring pc;
    pc.colored.assign(lay.strand_count, false);
    for (int s : seeds) {
        if (s < 0 || static_cast<std::size_t>(s) >= lay.strand_count)
            throw Error(ErrorKind::UnknownStrand, "no strand " + std::to_string(s));
        pc.colored[s] = true;
    }
    pc.seeds = seeds;
    std::sort(pc.seeds.begin(), pc.seeds.end());
    pc.seeds.erase(std::unique(pc.seeds.begin(), pc.seeds.end()), pc.seeds.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : lay.crossings) {
            if (!pc.colored[r.over]) continue;
            if (pc.colored[r.incoming] && !pc.colored[r.outgoing]) {
                pc.colored[r.outgoing] = true;
                pc.trace.push_back({r.id, r.outgoing});
                changed = true;
            } else if (pc.colored[r.outgoing] && !pc.colored[r.incoming]) {
                pc.colored[r.incoming] = true;
                pc.trace.push_back({r.id, r.incoming});
                changed = true;
            }
        }
    }
    return pc;
}

bool replay_is_legal(const GaussCode& code, const PartialColoring& coloring) {
    const StrandLayout lay = layout_of(code);
    if (coloring.colored.size() != lay.strand_count) return false;
    std::vector<bool> col(lay.strand_count, false);
    for (int s : coloring.seeds) {
        if (s < 0 || static_cast<std::size_t>(s) >= lay.strand_count) return false;
        col[s] = true;
    }
    for (const auto& mv : coloring.trace) {
        auto it = std::find_if(lay.crossings.begin(), lay.crossings.end(),
                               [&](const CrossingRoles& r) { return r.id == mv.crossing; });
        if (it == lay.crossings.end() || !col[it->over] || col[mv.strand]) return false;
        if (mv.strand == it->outgoing && !col[it->incoming]) return false;
        if (mv.strand == it->incoming && !col[it->outgoing]) return false;
        if (mv.strand != it->outgoing && mv.strand != it->incoming) return false;
        col[mv.strand] = true;
    }
    return col == coloring.colored;
}

namespace {

using Mask = std::uint64_t;

struct CompiledCrossing {
    Mask over, in, out;
};

struct Engine {
    std::size_t ns = 0;
    Mask full = 0;
    std::vector<CompiledCrossing> cx;
    std::vector<Mask> sources;

    explicit Engine(const GaussCode& code) {
        const StrandLayout lay = layout_of(code);
        ns = lay.strand_count;
        if (ns > limits().omega_strands || ns > 64)
            throw Error(ErrorKind::ResourceLimit, std::to_string(ns) + " strands exceeds the omega cap of " +
                                                      std::to_string(std::min<std::size_t>(limits().omega_strands, 64)));
        full = ns == 64 ? ~Mask{0} : (Mask{1} << ns) - 1;
        for (const auto& r : lay.crossings)
            cx.push_back({Mask{1} << r.over, Mask{1} << r.incoming, Mask{1} << r.outgoing});
        compute_sources(lay);
    }

    Mask closure(Mask col) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : cx) {
                if (!(col & c.over)) continue;
                if ((col & c.in) && !(col & c.out)) { col |= c.out; changed = true; }
                else if ((col & c.out) && !(col & c.in)) { col |= c.in; changed = true; }
            }
        }
        return col;
    }

    bool meets_sources(Mask s) const {
        for (Mask m : sources)
            if (!(s & m)) return false;
        return true;
    }

    // Strand v can only be colored by a move whose other two strands differ
    // from v; those strands are its predecessors.
    void compute_sources(const StrandLayout& lay) {
        std::vector<std::vector<int>> preds(ns);
        auto add = [&](int v, int a, int b) {
            if (v == a || v == b) return;
            preds[v].push_back(a);
            preds[v].push_back(b);
        };
        for (const auto& r : lay.crossings) {
            add(r.outgoing, r.over, r.incoming);
            add(r.incoming, r.over, r.outgoing);
        }
        // Tarjan on the reversed graph gives the same components.
        std::vector<int> index(ns, -1), low(ns, 0), comp(ns, -1), stack;
        std::vector<bool> on(ns, false);
        int counter = 0, ncomp = 0;
        auto strong = [&](auto&& self, int v) -> void {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on[v] = true;
            for (int w : preds[v]) {
                if (index[w] < 0) { self(self, w); low[v] = std::min(low[v], low[w]); }
                else if (on[w]) low[v] = std::min(low[v], index[w]);
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = false;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
        };
        for (std::size_t v = 0; v < ns; ++v)
            if (index[v] < 0) strong(strong, static_cast<int>(v));
        std::vector<bool> fed(ncomp, false);
        std::vector<Mask> members(ncomp, 0);
        for (std::size_t v = 0; v < ns; ++v) {
            members[comp[v]] |= Mask{1} << v;
            for (int w : preds[v])
                if (comp[w] != comp[v]) fed[comp[v]] = true;
        }
        for (int c = 0; c < ncomp; ++c)
            if (!fed[c]) sources.push_back(members[c]);
    }
};

Mask next_combination(Mask s) {
    Mask c = s & (~s + 1);
    Mask r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

// First (colex) k-subset that colors everything, or 0. Work is split by the
// largest element so chunks are contiguous in colex order.
Mask search_level(const Engine& e, std::size_t k, unsigned threads, std::uint64_t& tested) {
    if (k == 0 || k > e.ns) return 0;
    std::atomic<std::size_t> next_top{k - 1};
    std::atomic<std::size_t> best_top{e.ns};
    std::atomic<std::uint64_t> count{0};
    std::mutex mu;
    Mask best = 0;
    auto worker = [&] {
        while (true) {
            std::size_t j = next_top.fetch_add(1);
            if (j >= e.ns || j > best_top.load()) return;
            const Mask top = Mask{1} << j;
            const Mask limit = top;  // lower part must stay below bit j
            Mask low = k == 1 ? 0 : (Mask{1} << (k - 1)) - 1;
            std::uint64_t local = 0;
            while (true) {
                if (j > best_top.load()) break;
                Mask s = top | low;
                if (e.meets_sources(s)) {
                    ++local;
                    if (e.closure(s) == e.full) {
                        std::lock_guard<std::mutex> lock(mu);
                        if (j < best_top.load() || (j == best_top.load() && s < best)) {
                            best = s;
                            best_top.store(j);
                        }
                        break;
                    }
                }
                if (k == 1) break;
                Mask n = next_combination(low);
                if (n >= limit || n <= low) break;
                low = n;
            }
            count.fetch_add(local);
        }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(e.ns));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    tested += count.load();
    return best;
}

std::vector<int> mask_to_ids(Mask s) {
    std::vector<int> ids;
    for (int b = 0; b < 64; ++b)
        if (s >> b & 1) ids.push_back(b);
    return ids;
}

}  // namespace

OmegaResult omega(const GaussCode& code, SearchOptions options) {
    Engine e(code);
    OmegaResult res;
    res.source_components = e.sources.size();
    for (std::size_t k = std::max<std::size_t>(1, e.sources.size()); k <= e.ns; ++k) {
        Mask s = search_level(e, k, options.threads, res.subsets_tested);
        if (s) {
            res.omega = static_cast<int>(k);
            res.witness = propagate(code, mask_to_ids(s));
            return res;
        }
    }
    throw Error(ErrorKind::Validation, "no seed set colors the diagram");  // unreachable: all strands work
}

std::optional<PartialColoring> is_k_colorable(const GaussCode& code, int k, SearchOptions options) {
    if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
    Engine e(code);
    std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), e.ns);
    if (kk < e.sources.size()) return std::nullopt;
    std::uint64_t tested = 0;
    Mask s = search_level(e, kk, options.threads, tested);
    if (!s) return std::nullopt;
    return propagate(code, mask_to_ids(s));
}

}  // namespace wirtlab
