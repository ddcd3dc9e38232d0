#pragma once

// Independent reference implementations used to check the library. Nothing
// here calls into the library's search or propagation code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wirtlab/gauss_code.hpp"

namespace oracle {

using wirtlab::GaussCode;
using wirtlab::Pass;
using wirtlab::Visit;

struct Roles {
    int over, in, out, sign;
};

// Strands computed directly: cut the cyclic visit list at every Under visit.
inline std::pair<int, std::map<int, Roles>> roles(const GaussCode& code) {
    const auto& v = code.visits();
    const std::size_t n = v.size();
    std::vector<std::size_t> unders;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].pass == Pass::Under) unders.push_back(i);
    if (unders.empty()) return {1, {}};
    const int k = static_cast<int>(unders.size());
    // strand_of[i]: strand containing position i; strand 0 starts after unders[0].
    std::vector<int> strand_of(n);
    for (std::size_t step = 1; step <= n; ++step) {
        std::size_t pos = (unders[0] + step) % n;
        // number of Under visits strictly between unders[0] and pos (exclusive of pos)
        int count = 0;
        for (std::size_t s = 1; s < step; ++s)
            if (v[(unders[0] + s) % n].pass == Pass::Under) ++count;
        strand_of[pos] = count % k;
    }
    std::map<int, Roles> r;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].pass != Pass::Under) continue;
        int in = strand_of[i];
        r[v[i].id].in = in;
        r[v[i].id].out = (in + 1) % k;
        r[v[i].id].sign = v[i].sign;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].pass == Pass::Over) r[v[i].id].over = strand_of[i];
    return {k, r};
}

// Plain exhaustive seed search: smallest subset whose coloring closure is everything.
inline int omega(const GaussCode& code) {
    auto [k, rs] = roles(code);
    for (int size = 1; size <= k; ++size) {
        std::vector<bool> pick(static_cast<std::size_t>(k));
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<bool> col = pick;
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& [id, x] : rs) {
                    if (!col[static_cast<std::size_t>(x.over)]) continue;
                    if (col[static_cast<std::size_t>(x.in)] != col[static_cast<std::size_t>(x.out)]) {
                        col[static_cast<std::size_t>(x.in)] = col[static_cast<std::size_t>(x.out)] = true;
                        changed = true;
                    }
                }
            }
            if (std::all_of(col.begin(), col.end(), [](bool b) { return b; })) return size;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return k;
}

// Every code on n crossings with ids by first appearance, all passes and signs.
inline void for_each_code(int n, const std::function<void(const GaussCode&)>& fn) {
    std::vector<Visit> cur;
    std::vector<int> open_pass(static_cast<std::size_t>(n) + 1, -1);  // pass of the first visit
    std::function<void(int, int)> rec = [&](int next_id, int opened) {
        if (static_cast<int>(cur.size()) == 2 * n) {
            for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
                std::vector<Visit> vs = cur;
                for (auto& x : vs) x.sign = (signs >> (x.id - 1)) & 1 ? -1 : 1;
                fn(GaussCode(vs));
            }
            return;
        }
        const int remaining = 2 * n - static_cast<int>(cur.size());
        const int open_now = opened;
        if (next_id <= n && remaining > open_now) {
            for (int p = 0; p < 2; ++p) {
                cur.push_back({next_id, p ? Pass::Under : Pass::Over, 1});
                open_pass[static_cast<std::size_t>(next_id)] = p;
                rec(next_id + 1, opened + 1);
                open_pass[static_cast<std::size_t>(next_id)] = -1;
                cur.pop_back();
            }
        }
        for (int id = 1; id < next_id; ++id) {
            if (open_pass[static_cast<std::size_t>(id)] < 0) continue;
            int p = open_pass[static_cast<std::size_t>(id)];
            open_pass[static_cast<std::size_t>(id)] = -1;
            cur.push_back({id, p ? Pass::Over : Pass::Under, 1});
            rec(next_id, opened - 1);
            cur.pop_back();
            open_pass[static_cast<std::size_t>(id)] = p;
        }
    };
    if (n == 0) {
        fn(GaussCode());
        return;
    }
    rec(1, 0);
}

// Dihedral group of order 2k acting on the 2k flags (vertex i, orientation e)
// of a k-gon; the action is regular, hence faithful for every k.
struct Dihedral {
    int k;
    using Perm = std::vector<int>;
    int flag(int i, int e) const { return ((i % k + k) % k) * 2 + e; }
    Perm reflect(int shift) const {
        Perm p(static_cast<std::size_t>(2 * k));
        for (int i = 0; i < k; ++i)
            for (int e = 0; e < 2; ++e) p[static_cast<std::size_t>(flag(i, e))] = flag(shift - i, 1 - e);
        return p;
    }
    Perm s() const { return reflect(0); }
    Perm t() const { return reflect(1); }
    static Perm mul(const Perm& a, const Perm& b) {
        Perm o(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[static_cast<std::size_t>(b[i])];
        return o;
    }
    bool word_is_identity(const std::vector<int>& w) const {
        Perm acc(static_cast<std::size_t>(2 * k));
        std::iota(acc.begin(), acc.end(), 0);
        const Perm ps = s(), pt = t();
        for (int x : w) acc = mul(acc, x == 0 ? ps : pt);
        for (int i = 0; i < 2 * k; ++i)
            if (acc[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }
};

// Rank of an integer matrix by fraction-free elimination over the rationals.
inline int integer_rank(std::vector<std::vector<long long>> a) {
    int rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
            long long f = a[r][c], g = a[static_cast<std::size_t>(rank)][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = a[r][j] * g - a[static_cast<std::size_t>(rank)][j] * f;
            long long d = 0;
            for (auto x : a[r]) d = std::gcd(d, x < 0 ? -x : x);
            if (d > 1)
                for (auto& x : a[r]) x /= d;
        }
        ++rank;
    }
    return rank;
}

// Bezout pair by exhaustive search: a*M + b*m = 1 with 2|a| <= m and
// 2|b| <= M, the bounds met by the extended Euclidean algorithm.
inline std::pair<long long, long long> bezout_small(long long M, long long m) {
    for (long long a = -m; a <= m; ++a)
        for (long long b = -M; b <= M; ++b)
            if (a * M + b * m == 1 && 2 * std::llabs(a) <= m && 2 * std::llabs(b) <= M) return {a, b};
    return {0, 0};
}

}  // namespace oracle
