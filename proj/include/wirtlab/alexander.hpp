#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wirtlab/presentation.hpp"

namespace wirtlab {

// Laurent polynomial in t with integer coefficients, or residues when
// modulus is a prime. No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long modulus) : mod_(modulus) {}
    static LaurentPoly monomial(long long coeff, int exp, long long modulus = 0);

    long long modulus() const noexcept { return mod_; }
    const std::map<int, long long>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    long long coeff(int exp) const;
    int min_exp() const;  // 0 for the zero polynomial
    int max_exp() const;
    // Value at t = 1.
    long long at_one() const;

    void add_term(int exp, long long coeff);
    LaurentPoly reduced(long long p) const;
    LaurentPoly shifted(int k) const;  // times t^k

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    long long norm(long long c) const;
    long long mod_ = 0;
    std::map<int, long long> terms_;
};

// Ascending powers: "1 + t + t^2", "1 - t", "-t^-1 + 2".
std::string to_string(const LaurentPoly& p);

struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    long long modulus = 0;  // 0 for integer coefficients
    std::vector<LaurentPoly> entries;

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c, long long mod = 0);
    LaurentPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    PolyMatrix reduced(long long p) const;
};

// Fox derivatives of every relator with respect to every generator (in the
// order of pres.generators), abelianized by sending each generator to t.
PolyMatrix fox_matrix(const GroupPresentation& pres);

// Fox matrix without the column of generator index deleted. Throws
// BadParameter when there are no generators or the index is out of range.
PolyMatrix alexander_matrix(const GroupPresentation& pres, std::size_t deleted = 0);

// Invariant factors d1 | d2 | ... of a matrix over F_p[t^{+-1}], monic with
// nonzero constant term, zero factors last; min(rows, cols) of them. Each row
// is first multiplied by the power of t that clears its negative exponents.
// Throws BadParameter unless the matrix is reduced modulo a prime.
std::vector<LaurentPoly> snf_over_fpt(const PolyMatrix& mat);

struct NakanishiBound {
    std::size_t bound = 0;     // generators needed for the mod-p module
    std::size_t mu_bound = 1;  // bound + 1
    std::vector<LaurentPoly> factors;
};

// Columns minus unit invariant factors of the mod-p Alexander matrix, where
// monomials count as units. Throws BadParameter unless p is prime.
NakanishiBound nakanishi_lower_bound(const GroupPresentation& pres, long long p = 2, std::size_t deleted = 0);

bool is_prime(long long p);

}  // namespace wirtlab
