#include "wirtlab/alexander.hpp"

#include <algorithm>
#include <limits>

#include "wirtlab/errors.hpp"

namespace wirtlab {

LaurentPoly LaurentPoly::monomial(long long coeff, int exp, long long modulus) {
    LaurentPoly p(modulus);
    p.add_term(exp, coeff);
    return p;
}

long long LaurentPoly::norm(long long c) const {
    if (mod_ == 0) return c;
    c %= mod_;
    return c < 0 ? c + mod_ : c;
}

long long LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

long long LaurentPoly::at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return norm(s);
}

void LaurentPoly::add_term(int exp, long long c) {
    long long v = norm(coeff(exp) + norm(c));
    if (v == 0)
        terms_.erase(exp);
    else
        terms_[exp] = v;
}

LaurentPoly LaurentPoly::reduced(long long p) const {
    LaurentPoly out(p);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out(mod_);
    for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.mod_ ? a.mod_ : b.mod_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        long long mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (e == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag);
        out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return out;
}

PolyMatrix::PolyMatrix(std::size_t r, std::size_t c, long long mod)
    : rows(r), cols(c), modulus(mod), entries(r * c, LaurentPoly(mod)) {}

PolyMatrix PolyMatrix::reduced(long long p) const {
    PolyMatrix out(rows, cols, p);
    for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] = entries[i].reduced(p);
    return out;
}

PolyMatrix fox_matrix(const GroupPresentation& pres) {
    PolyMatrix m(pres.relators.size(), pres.generators.size());
    std::map<int, std::size_t> col;
    for (std::size_t j = 0; j < pres.generators.size(); ++j) col[pres.generators[j]] = j;
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        int prefix = 0;
        for (const auto& l : pres.relators[i].letters()) {
            auto it = col.find(l.gen);
            if (it == col.end())
                throw Error(ErrorKind::UnknownGenerator, "relator uses undeclared generator " + std::to_string(l.gen));
            LaurentPoly& cell = m.at(i, it->second);
            if (l.exp > 0)
                for (int k = 0; k < l.exp; ++k) cell.add_term(prefix + k, 1);
            else
                for (int k = 1; k <= -l.exp; ++k) cell.add_term(prefix - k, -1);
            prefix += l.exp;
        }
    }
    return m;
}

PolyMatrix alexander_matrix(const GroupPresentation& pres, std::size_t deleted) {
    if (pres.generators.empty()) throw Error(ErrorKind::BadParameter, "presentation has no generators");
    if (deleted >= pres.generators.size()) throw Error(ErrorKind::BadParameter, "deleted column out of range");
    const PolyMatrix f = fox_matrix(pres);
    PolyMatrix out(f.rows, f.cols - 1);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0, k = 0; j < f.cols; ++j)
            if (j != deleted) out.at(i, k++) = f.at(i, j);
    return out;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
struct Fp {
    long long p;

    using P = std::vector<long long>;

    static void trim(P& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    long long inv(long long a) const {
        long long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    P sub(const P& a, const P& b) const {
        P out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = ((out[i] - b[i]) % p + p) % p;
        trim(out);
        return out;
    }
    P add(const P& a, const P& b) const {
        P out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
        trim(out);
        return out;
    }
    P mul(const P& a, const P& b) const {
        if (a.empty() || b.empty()) return {};
        P out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        trim(out);
        return out;
    }
    // Quotient and remainder of a by nonzero b.
    std::pair<P, P> divmod(P a, const P& b) const {
        if (a.size() < b.size()) return {{}, a};
        P q(a.size() - b.size() + 1, 0);
        const long long lead = inv(b.back());
        while (!a.empty() && a.size() >= b.size()) {
            std::size_t shift = a.size() - b.size();
            long long c = a.back() * lead % p;
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
            trim(a);
        }
        trim(q);
        return {q, a};
    }
    P monic(const P& a) const {
        if (a.empty()) return a;
        P out = a;
        long long l = inv(a.back());
        for (auto& c : out) c = c * l % p;
        return out;
    }
};

}  // namespace

std::vector<LaurentPoly> snf_over_fpt(const PolyMatrix& mat) {
    if (!is_prime(mat.modulus)) throw Error(ErrorKind::BadParameter, "Smith form needs a matrix reduced mod a prime");
    const long long p = mat.modulus;
    Fp f{p};
    using P = Fp::P;
    const std::size_t R = mat.rows, C = mat.cols;
    std::vector<std::vector<P>> a(R, std::vector<P>(C));
    for (std::size_t i = 0; i < R; ++i) {
        int lo = std::numeric_limits<int>::max();
        for (std::size_t j = 0; j < C; ++j)
            if (!mat.at(i, j).is_zero()) lo = std::min(lo, mat.at(i, j).min_exp());
        if (lo == std::numeric_limits<int>::max()) lo = 0;
        for (std::size_t j = 0; j < C; ++j) {
            const auto& e = mat.at(i, j).reduced(p);
            if (e.is_zero()) continue;
            P d(static_cast<std::size_t>(e.max_exp() - lo + 1), 0);
            for (const auto& [x, c] : e.terms()) d[static_cast<std::size_t>(x - lo)] = c;
            a[i][j] = d;
        }
    }
    const std::size_t K = std::min(R, C);
    std::vector<P> diag;
    for (std::size_t k = 0; k < K; ++k) {
        for (;;) {
            // Pivot: nonzero entry of least degree.
            std::size_t bi = R, bj = C, best = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = k; i < R; ++i)
                for (std::size_t j = k; j < C; ++j)
                    if (!a[i][j].empty() && a[i][j].size() < best) {
                        best = a[i][j].size();
                        bi = i;
                        bj = j;
                    }
            if (bi == R) break;
            std::swap(a[k], a[bi]);
            for (auto& row : a) std::swap(row[k], row[bj]);
            bool clean = true;
            for (std::size_t i = k + 1; i < R; ++i) {
                if (a[i][k].empty()) continue;
                P q = f.divmod(a[i][k], a[k][k]).first;
                for (std::size_t j = k; j < C; ++j) a[i][j] = f.sub(a[i][j], f.mul(q, a[k][j]));
                if (!a[i][k].empty()) clean = false;
            }
            for (std::size_t j = k + 1; j < C; ++j) {
                if (a[k][j].empty()) continue;
                P q = f.divmod(a[k][j], a[k][k]).first;
                for (std::size_t i = k; i < R; ++i) a[i][j] = f.sub(a[i][j], f.mul(q, a[i][k]));
                if (!a[k][j].empty()) clean = false;
            }
            if (!clean) continue;
            // Divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = k + 1; i < R && divides; ++i)
                for (std::size_t j = k + 1; j < C && divides; ++j)
                    if (!a[i][j].empty() && !f.divmod(a[i][j], a[k][k]).second.empty()) {
                        for (std::size_t jj = k; jj < C; ++jj) a[k][jj] = f.add(a[k][jj], a[i][jj]);
                        divides = false;
                    }
            if (divides) break;
        }
        diag.push_back(f.monic(a[k][k]));
    }
    std::stable_partition(diag.begin(), diag.end(), [](const P& d) { return !d.empty(); });
    std::vector<LaurentPoly> out;
    for (const auto& d : diag) {
        LaurentPoly l(p);
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i]) l.add_term(static_cast<int>(i), d[i]);
        // t is a unit in the Laurent ring.
        out.push_back(l.is_zero() ? l : l.shifted(-l.min_exp()));
    }
    return out;
}

NakanishiBound nakanishi_lower_bound(const GroupPresentation& pres, long long p, std::size_t deleted) {
    if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
    NakanishiBound nb;
    if (pres.generators.empty()) return nb;
    const PolyMatrix m = alexander_matrix(pres, deleted).reduced(p);
    nb.factors = snf_over_fpt(m);
    std::size_t units = 0;
    for (const auto& d : nb.factors)
        if (d.terms().size() == 1) ++units;
    nb.bound = m.cols - units;
    nb.mu_bound = nb.bound + 1;
    return nb;
}

}  // namespace wirtlab
