#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wirtlab/errors.hpp"
#include "wirtlab/word.hpp"

namespace wirtlab {

// A finite target group that can evaluate words: the coxeter and permutation
// engines both model it.
template <class G>
concept Evaluator = requires(const G& g, const typename G::Element& a) {
    { g.identity() } -> std::convertible_to<typename G::Element>;
    { g.multiply(a, a) } -> std::convertible_to<typename G::Element>;
    { g.invert(a) } -> std::convertible_to<typename G::Element>;
    { g.is_identity(a) } -> std::convertible_to<bool>;
};

template <class G>
concept HashableEvaluator = Evaluator<G> && requires(const typename G::Element& a) {
    { typename G::Hash{}(a) } -> std::convertible_to<std::size_t>;
    { a == a } -> std::convertible_to<bool>;
};

template <Evaluator G>
typename G::Element power(const G& g, const typename G::Element& x, long long n) {
    typename G::Element base = n >= 0 ? x : g.invert(x);
    unsigned long long e = n >= 0 ? static_cast<unsigned long long>(n) : static_cast<unsigned long long>(-(n + 1)) + 1;
    typename G::Element acc = g.identity();
    while (e) {
        if (e & 1) acc = g.multiply(acc, base);
        base = g.multiply(base, base);
        e >>= 1;
    }
    return acc;
}

// images[k] is the image of generator k.
template <Evaluator G>
typename G::Element evaluate(const G& g, const Word& w, const std::vector<typename G::Element>& images) {
    typename G::Element acc = g.identity();
    for (const auto& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
            throw Error(ErrorKind::UnknownGenerator, "no image for generator " + std::to_string(l.gen));
        acc = g.multiply(acc, power(g, images[l.gen], l.exp));
    }
    return acc;
}

// Size of the subgroup generated by gens, by breadth-first closure.
template <HashableEvaluator G>
std::size_t closure_size(const G& g, const std::vector<typename G::Element>& gens, std::size_t cap) {
    using E = typename G::Element;
    std::unordered_set<E, typename G::Hash> seen;
    std::deque<E> queue;
    E id = g.identity();
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        E cur = std::move(queue.front());
        queue.pop_front();
        for (const E& s : gens) {
            E nxt = g.multiply(cur, s);
            if (seen.insert(nxt).second) {
                if (seen.size() > cap)
                    throw Error(ErrorKind::ResourceLimit, "closure exceeds " + std::to_string(cap) + " elements");
                queue.push_back(std::move(nxt));
            }
        }
    }
    return seen.size();
}

// Direct product of two evaluators, used to build finite quotients of
// connected sums from quotients of the summands.
template <HashableEvaluator A, HashableEvaluator B>
class ProductGroup {
public:
    using Element = std::pair<typename A::Element, typename B::Element>;
    struct Hash {
        std::size_t operator()(const Element& e) const {
            std::size_t h1 = typename A::Hash{}(e.first), h2 = typename B::Hash{}(e.second);
            return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
        }
    };

    ProductGroup(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}
    Element identity() const { return {a_.identity(), b_.identity()}; }
    Element multiply(const Element& x, const Element& y) const {
        return {a_.multiply(x.first, y.first), b_.multiply(x.second, y.second)};
    }
    Element invert(const Element& x) const { return {a_.invert(x.first), b_.invert(x.second)}; }
    bool is_identity(const Element& x) const { return a_.is_identity(x.first) && b_.is_identity(x.second); }

private:
    A a_;
    B b_;
};

}  // namespace wirtlab
