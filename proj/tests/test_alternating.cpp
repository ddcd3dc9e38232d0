#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "wirtlab/alternating.hpp"
#include "wirtlab/diagram.hpp"

using namespace wirtlab;

namespace {

using Images = std::vector<int>;

// Order of the generated group by plain set closure over image vectors.
std::size_t closure_oracle(const std::vector<Permutation>& gens, std::size_t m) {
    std::set<Images> seen;
    Images id(m);
    for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i + 1);
    std::vector<Images> frontier{id};
    seen.insert(id);
    while (!frontier.empty()) {
        std::vector<Images> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Images y(m);
                for (std::size_t i = 0; i < m; ++i) y[i] = g.extended(m)(x[i]);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

bool even_by_inversions(const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= static_cast<int>(p.degree()); ++i)
        for (int j = i + 1; j <= static_cast<int>(p.degree()); ++j) inv += p(i) > p(j);
    return inv % 2 == 0;
}

Permutation random_perm(std::mt19937& rng, std::size_t m) {
    std::vector<int> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<int>(i + 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
}

}  // namespace

TEST_CASE("permutation basics") {
    const auto a = parse_permutation("(123)", 5);
    CHECK(a(1) == 2);
    CHECK(a(3) == 1);
    CHECK(a(5) == 5);
    CHECK(a.is_p_cycle(3));
    CHECK(a.order() == 3);
    CHECK(a.is_even());
    CHECK(to_cycle_string(a) == "(123)");
    CHECK(parse_permutation("(1 2 3)", 5) == a);
    CHECK(parse_permutation("(1,2,3)", 5) == a);
    CHECK(parse_permutation("e", 5).is_identity());
    CHECK(to_cycle_string(Permutation(4)) == "()");
    const auto b = parse_permutation("(12)(34)");
    CHECK(b.degree() == 4);
    CHECK(b.cycle_type() == std::vector<int>{2, 2});
    CHECK(!b.is_p_cycle(2));
    // The right factor acts first.
    const auto c = parse_permutation("(12)", 3) * parse_permutation("(23)", 3);
    CHECK(c(2) == 3);
    CHECK(c(3) == 1);
    CHECK(to_cycle_string(parse_permutation("(1 10 11)", 11)) == "(1 10 11)");
    CHECK(thrown_kind([] { parse_permutation("(1 2"); }) == ErrorKind::Syntax);
    CHECK(thrown_kind([] { parse_permutation("(1 1)"); }) == ErrorKind::Validation);
    CHECK(thrown_kind([] { Permutation::from_images({1, 1}); }) == ErrorKind::Validation);
}

TEST_CASE("permutation algebra against plain image arithmetic") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 9;
        const auto p = random_perm(rng, m), q = random_perm(rng, m);
        const auto pq = p * q;
        for (int x = 1; x <= static_cast<int>(m); ++x) CHECK(pq(x) == p(q(x)));
        CHECK((p * p.inverse()).is_identity());
        CHECK(p.is_even() == even_by_inversions(p));
        std::size_t ord = 1;
        for (auto x = p; !x.is_identity(); x = x * p) ++ord;
        CHECK(p.order() == ord);
        CHECK(parse_permutation(to_cycle_string(p), m) == p);
    }
}

TEST_CASE("step cycles") {
    CHECK(step_cycle(1, 3, 5) == parse_permutation("(123)", 5));
    CHECK(step_cycle(3, 3, 5) == parse_permutation("(345)", 5));
    CHECK(step_cycle(1, 1, 5).is_identity());
    CHECK(thrown_kind([] { step_cycle(4, 3, 5); }) == ErrorKind::OutOfRange);
    CHECK(thrown_kind([] { step_cycle(0, 3, 5); }) == ErrorKind::OutOfRange);
}

TEST_CASE("twist region labelings") {
    const auto three = label_twist_region(3);
    CHECK(three.code == build_torus_2braid(3, 1));
    CHECK(three.degree == 5);
    CHECK(three.labels[static_cast<std::size_t>(three.seeds[0])] == step_cycle(1, 3, 5));
    CHECK(three.labels[static_cast<std::size_t>(three.seeds[1])] == step_cycle(3, 3, 5));
    const auto two = label_twist_region(2);
    CHECK(two.code == build_torus_2braid(2, 1));
    std::set<std::string> labels;
    for (const auto& l : two.labels) labels.insert(to_cycle_string(l));
    CHECK(labels == std::set<std::string>{"(12)", "(23)", "(13)"});
    CHECK(thrown_kind([] { label_twist_region(1); }) == ErrorKind::BadParameter);
    for (int p = 2; p <= 6; ++p) {
        const auto r = label_twist_region(p);
        CycleLabeling lab{r.degree, p, {}};
        for (int s : r.seeds) lab.seeds[s] = r.labels[static_cast<std::size_t>(s)];
        const auto rep = verify_perm_labeling(r.code, lab);
        CHECK(rep.consistent);
        CHECK(rep.labels == r.labels);
    }
}

TEST_CASE("perm labeling verdicts") {
    const auto t25 = build_torus_2braid(3, 1);
    const auto r = label_twist_region(3);
    CycleLabeling good{5, 3, {{r.seeds[0], step_cycle(1, 3, 5)}, {r.seeds[1], step_cycle(3, 3, 5)}}};
    CHECK(verify_perm_labeling(t25, good).status == PermStatus::Ok);
    CycleLabeling clash{5, 3, {{r.seeds[0], parse_permutation("(123)", 5)}, {r.seeds[1], parse_permutation("(124)", 5)}}};
    const auto rep = verify_perm_labeling(t25, clash);
    CHECK(rep.status == PermStatus::Inconsistent);
    CHECK(rep.clash_crossing.has_value());
    CycleLabeling not_cycle{5, 3, {{r.seeds[0], parse_permutation("(12)", 5)}, {r.seeds[1], step_cycle(3, 3, 5)}}};
    CHECK(thrown_kind([&] { verify_perm_labeling(t25, not_cycle); }) == ErrorKind::NotPCycle);
    CycleLabeling partial{5, 3, {{r.seeds[0], step_cycle(1, 3, 5)}}};
    CHECK(thrown_kind([&] { verify_perm_labeling(t25, partial); }) == ErrorKind::BadParameter);
    CycleLabeling bad_strand{5, 3, {{40, step_cycle(1, 3, 5)}, {r.seeds[1], step_cycle(3, 3, 5)}}};
    CHECK(thrown_kind([&] { verify_perm_labeling(t25, bad_strand); }) == ErrorKind::UnknownStrand);
}

TEST_CASE("generation examples") {
    const auto a = parse_permutation("(123)", 7), b = parse_permutation("(345)", 7), c = parse_permutation("(567)", 7);
    const auto two = generates_alternating({a, b}, 5);
    CHECK(two.generates);
    CHECK(two.order == 60u);
    CHECK(two.method == "closure");
    const auto one = generates_alternating({a}, 5);
    CHECK(!one.generates);
    CHECK(one.order == 3u);
    const auto three = generates_alternating({a, b, c}, 7);
    CHECK(three.generates);
    CHECK(three.order == 2520u);
    CHECK(thrown_kind([] { generates_alternating({parse_permutation("(12)", 4)}, 4); }) == ErrorKind::OddPermutation);
}

TEST_CASE("closure orders agree with plain set closure") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 3 + rng() % 4;
        std::vector<Permutation> gens;
        const std::size_t k = 1 + rng() % 2;
        while (gens.size() < k) {
            auto p = random_perm(rng, m);
            if (p.is_even()) gens.push_back(p);
        }
        const auto r = generates_alternating(gens, m);
        REQUIRE(r.order.has_value());
        const std::size_t want = closure_oracle(gens, m);
        CHECK(*r.order == want);
        std::size_t half = 1;
        for (std::size_t i = 3; i <= m; ++i) half *= i;
        CHECK(r.generates == (want == half));
    }
}

TEST_CASE("large degrees use the primitivity certificate") {
    for (int n : {3, 4}) {
        const int p = 5, m = n * p - (n - 1);
        std::vector<Permutation> gens;
        for (int i = 0; i < n; ++i) gens.push_back(step_cycle(1 + i * (p - 1), p, m));
        const auto r = generates_alternating(gens, static_cast<std::size_t>(m));
        CHECK(r.generates);
        CHECK(r.method == "jordan");
        CHECK(!r.order.has_value());
    }
    // Disjoint cycles are intransitive.
    const auto r = generates_alternating({step_cycle(1, 3, 12), step_cycle(4, 3, 12), step_cycle(7, 3, 12)}, 12);
    CHECK(!r.generates);
}

TEST_CASE("transitivity and primitivity") {
    const auto a = parse_permutation("(12)(34)", 4), b = parse_permutation("(13)(24)", 4);
    CHECK(is_transitive({a, b}, 4));
    CHECK(!is_primitive({a, b}, 4));  // blocks {1,2},{3,4}
    CHECK(is_primitive({parse_permutation("(123)", 4), parse_permutation("(234)", 4)}, 4));
    CHECK(!is_transitive({parse_permutation("(123)", 4)}, 4));
}

TEST_CASE("rank lower bounds") {
    CHECK(rank_lower_bound_pcycles(3, 5) == 2);
    CHECK(rank_lower_bound_pcycles(3, 7) == 3);
    CHECK(rank_lower_bound_pcycles(5, 5) == 2);
    for (int p : {3, 5, 7})
        for (int n = 2; n <= 5; ++n) CHECK(rank_lower_bound_pcycles(p, n * p - (n - 1)) == n);
}
