#ifndef SCHUBERT_POLYRING_HPP
#define SCHUBERT_POLYRING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

// Exponent vector of fixed arity. Term order is lexicographic, x1-major.
using Monomial = std::vector<std::uint16_t>;

/*
  Homogeneous sparse polynomial over Z with exact coefficients. The zero
  polynomial carries no degree and is additively compatible with any degree.
  All operations preserve homogeneity and never store zero coefficients.
*/
class GradedPoly {
  public:
    explicit GradedPoly(int arity) : arity_(arity) {}  // the zero polynomial

    static GradedPoly zero(int arity) { return GradedPoly(arity); }
    static GradedPoly constant(int arity, BigInt c);
    static GradedPoly variable(int arity, int index);  // x_index, 1-based
    static GradedPoly from_monomial(Monomial m, BigInt c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of a nonzero polynomial; GradingError on zero.
    int degree() const;
    size_t term_count() const { return terms_.size(); }

    // Coefficient of m (zero when absent).
    BigInt coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const BigInt& c);

    GradedPoly& operator+=(const GradedPoly& rhs);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    // Unique expansion p = sum_r h_r x_k^r by the last variable: the nonzero
    // h_r in ascending r, each of arity k-1.
    std::vector<std::pair<int, GradedPoly>> split_by_last_variable() const;

    // Terms in descending lexicographic order (x1-major), e.g.
    // "x1^2 + 2*x1*x2 + x2^2".
    std::string to_string() const;

    // Descending lexicographic iteration.
    void for_each_term(const std::function<void(const Monomial&, const BigInt&)>& fn) const;

  private:
    int arity_;
    std::map<Monomial, BigInt, std::greater<Monomial>> terms_;
};

GradedPoly add(const GradedPoly& p, const GradedPoly& q);
GradedPoly multiply(const GradedPoly& p, const GradedPoly& q);

// (coeffs[0] x_1 + ... + coeffs[m-1] x_m)^e expanded with exact multinomial
// coefficients; arity m.
GradedPoly power_of_linear_form(const std::vector<int>& coeffs, int e);

}  // namespace schubert

#endif
