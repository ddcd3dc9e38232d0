#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wirtlab/gauss_code.hpp"

namespace wirtlab {

// Letters are vertex indices; generators are involutions so there are no exponents.
using CoxeterWord = std::vector<int>;

struct CoxeterWordHash {
    std::size_t operator()(const CoxeterWord& w) const noexcept;
};

// Weighted simple graph. Vertex pairs without an edge have no relation (m = infinity).
class CoxeterGraph {
public:
    CoxeterGraph() = default;
    // Throws ValidationError for loops, repeated edges, weights below 2 or
    // duplicate vertex names, UnknownVertex for edges naming missing vertices.
    CoxeterGraph(std::vector<std::string> vertices, const std::vector<std::tuple<std::string, std::string, int>>& edges);

    static CoxeterGraph dihedral(int k);  // I2(k) on vertices "s", "t"

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    std::size_t rank() const noexcept { return vertices_.size(); }
    // 0 when there is no edge.
    int weight(int u, int v) const;
    const std::vector<std::tuple<int, int, int>>& edges() const noexcept { return edges_; }
    // Throws UnknownVertex.
    int vertex(const std::string& name) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::tuple<int, int, int>> edges_;
    std::map<std::pair<int, int>, int> weights_;
};

// Words are written as space-separated vertex names, or as a run of
// single-character names when every vertex name is one character.
CoxeterWord parse_coxeter_word(const CoxeterGraph& g, const std::string& text);
std::string format_coxeter_word(const CoxeterGraph& g, const CoxeterWord& w);

// Word problem by Tits' solution: a word is reduced iff no word reachable by
// braid moves contains a repeated letter. Reduced words are brought to the
// lexicographically least word of their braid class.
class CoxeterEngine {
public:
    using Element = CoxeterWord;
    using Hash = CoxeterWordHash;

    explicit CoxeterEngine(CoxeterGraph g);

    const CoxeterGraph& graph() const noexcept { return *g_; }

    // Throws ResourceLimit past limits().coxeter_word letters or
    // limits().braid_class words in one class; UnknownVertex on bad letters.
    CoxeterWord normal_form(const CoxeterWord& w) const;
    bool is_identity_word(const CoxeterWord& w) const { return normal_form(w).empty(); }
    // True iff the element is conjugate to a generator.
    bool is_reflection(const CoxeterWord& w) const;

    Element identity() const { return {}; }
    Element multiply(const Element& a, const Element& b) const;
    Element invert(const Element& a) const;
    bool is_identity(const Element& a) const { return normal_form(a).empty(); }

private:
    std::vector<CoxeterWord> braid_class(const CoxeterWord& w, bool stop_on_square, bool& found_square,
                                         CoxeterWord& square_word) const;

    std::shared_ptr<const CoxeterGraph> g_;
    struct Cache {
        std::mutex mu;
        std::unordered_map<CoxeterWord, CoxeterWord, CoxeterWordHash> nf;
    };
    std::shared_ptr<Cache> cache_;
};

bool is_identity(const CoxeterGraph& g, const CoxeterWord& w);

// by * w * reverse(by), normalized. Throws NotAReflection.
CoxeterWord conjugate_reflection(const CoxeterGraph& g, const CoxeterWord& w, const CoxeterWord& by);

enum class LabelingStatus { Ok, Inconsistent, NotSurjective };
std::string status_name(LabelingStatus s);

struct LabelingReport {
    LabelingStatus status = LabelingStatus::Ok;
    bool consistent = false;
    bool surjective = false;
    std::size_t rank_bound = 0;         // |vertices| when status is Ok
    std::vector<CoxeterWord> labels;    // per strand, normalized
    std::optional<int> clash_crossing;  // first crossing whose relation fails
    std::optional<int> clash_strand;
    std::vector<int> missing_vertices;  // vertices never seen as a plain label
    std::string message;
};

// Outgoing label is b a b for incoming a and over b (sign-independent).
// Throws UnknownStrand for bad seed ids, NotAReflection for seeds that are not
// reflections, BadParameter when the seeds do not color every strand.
LabelingReport verify_coxeter_labeling(const GaussCode& code, const CoxeterGraph& g,
                                       const std::map<int, CoxeterWord>& seeds);

// Edge weight closing a twist region of n crossings after v virtualizations
// and f balanced flanks. Returns 0 when no finite weight closes it (the two
// generators are unrelated) and 1 when the generators must coincide.
// Operations are applied as v virtualizations, then f flanks, then plain
// crossings, starting from the bottom of the region.
int virtual_bbkm_weight_rule(int n, int v, int f);

}  // namespace wirtlab
