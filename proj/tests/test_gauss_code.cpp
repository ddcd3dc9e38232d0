#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "test_util.hpp"
#include "wirtlab/gauss_code.hpp"

using namespace wirtlab;

TEST_CASE("parse and print round trip") {
    const auto c = parse_gauss_code("O1+,U2+,O3+,U1+,O2+,U3+");
    CHECK(c.size() == 6);
    CHECK(c.crossing_count() == 3);
    CHECK(to_text(c) == "O1+,U2+,O3+,U1+,O2+,U3+");
    CHECK(parse_gauss_code(" o1+ , u2+,O3+,u1+ ,O2+, U3+ ") == c);
    CHECK(c.crossing_ids() == std::vector<int>{1, 2, 3});
    CHECK(c.sites(2).over == 4);
    CHECK(c.sites(2).under == 1);
}

TEST_CASE("empty code is the trivial diagram") {
    const auto c = parse_gauss_code("");
    CHECK(c.empty());
    CHECK(c.crossing_count() == 0);
    CHECK(to_text(c).empty());
}

TEST_CASE("syntax errors") {
    CHECK(thrown_kind([] { parse_gauss_code("X1+,U1+"); }) == ErrorKind::Syntax);
    CHECK(thrown_kind([] { parse_gauss_code("O1*,U1+"); }) == ErrorKind::Syntax);
    CHECK(thrown_kind([] { parse_gauss_code("O+,U1+"); }) == ErrorKind::Syntax);
}

TEST_CASE("validation errors") {
    CHECK(thrown_kind([] { parse_gauss_code("O1+"); }) == ErrorKind::Validation);
    CHECK(thrown_kind([] { parse_gauss_code("O1+,U1-"); }) == ErrorKind::Validation);
    CHECK(thrown_kind([] { parse_gauss_code("O1+,O1+"); }) == ErrorKind::Validation);
    CHECK(thrown_kind([] { parse_gauss_code("O1+,U1+,U1+"); }) == ErrorKind::Validation);
    CHECK(thrown_kind([] { GaussCode({{0, Pass::Over, 1}, {0, Pass::Under, 1}}); }) == ErrorKind::Validation);
    CHECK(thrown_kind([] { GaussCode({{1, Pass::Over, 2}, {1, Pass::Under, 2}}); }) == ErrorKind::Validation);
}

TEST_CASE("unknown crossing lookups") {
    const auto c = corpus::trefoil();
    CHECK(thrown_kind([&] { c.sites(7); }) == ErrorKind::UnknownCrossing);
    CHECK(thrown_kind([&] { relabel(c, {{1, 4}}); }) == ErrorKind::UnknownCrossing);
}

TEST_CASE("rotation and relabeling") {
    const auto c = corpus::trefoil();
    const auto r = rotate(c, 2);
    CHECK(to_text(r) == "O3+,U1+,O2+,U3+,O1+,U2+");
    CHECK(relabel_by_first_appearance(r) == c);
    CHECK(rotate(c, 6) == c);
    CHECK(to_text(relabel(c, {{1, 10}, {2, 20}, {3, 30}})) == "O10+,U20+,O30+,U10+,O20+,U30+");
}

TEST_CASE("canonical form is invariant under rotation and renumbering") {
    std::mt19937 rng(7);
    for (const auto& [name, code] : corpus::codes()) {
        const std::string key = canonical_key(code);
        for (int trial = 0; trial < 20; ++trial) {
            auto ids = code.crossing_ids();
            auto shuffled = ids;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            std::map<int, int> m;
            for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = shuffled[i] * 3 + 1;
            const auto moved = relabel(rotate(code, rng() % code.size()), m);
            CHECK_MESSAGE(canonical_key(moved) == key, name);
        }
    }
}

TEST_CASE("canonical form separates mirror images") {
    const auto t = corpus::trefoil();
    std::vector<Visit> v = t.visits();
    for (auto& x : v) x.sign = -x.sign;
    CHECK(canonical_key(GaussCode(v)) != canonical_key(t));
}
