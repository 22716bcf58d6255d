#include "schubert/trioper.hpp"

#include <string>

#include "schubert/errors.hpp"

namespace schubert {

size_t StrictUpperTriangular::offset(int s, int t) const {
    // entries for column t (t >= 2) start at (t-1)(t-2)/2
    return static_cast<size_t>(t - 1) * (t - 2) / 2 + (s - 1);
}

int StrictUpperTriangular::at(int s, int t) const {
    if (s < 1 || s > k_ || t < 1 || t > k_)
        throw IndexError("triangular matrix index (" + std::to_string(s) + "," +
                         std::to_string(t) + ") out of range 1.." + std::to_string(k_));
    if (s >= t) return 0;
    return entries_[offset(s, t)];
}

void StrictUpperTriangular::set(int s, int t, int value) {
    if (s < 1 || t > k_ || s >= t)
        throw IndexError("triangular matrix entry (" + std::to_string(s) + "," +
                         std::to_string(t) + ") is not above the diagonal");
    entries_[offset(s, t)] = value;
}

StrictUpperTriangular word_cartan_matrix(const CartanMatrix& c, const Word& w) {
    int k = static_cast<int>(w.size());
    StrictUpperTriangular a(k);
    for (int t = 2; t <= k; ++t) {
        for (int s = 1; s < t; ++s) {
            a.set(s, t, -c.at(w[static_cast<size_t>(t - 1)], w[static_cast<size_t>(s - 1)]));
        }
    }
    return a;
}

namespace {

void check_operand(const StrictUpperTriangular& a, const GradedPoly& p) {
    int k = a.size();
    if (p.arity() != k)
        throw GradingError("operand arity " + std::to_string(p.arity()) +
                           " does not match matrix size " + std::to_string(k));
    if (!p.is_zero() && p.degree() != k)
        throw GradingError("operand degree " + std::to_string(p.degree()) +
                           " does not match matrix size " + std::to_string(k));
}

std::vector<int> last_column(const StrictUpperTriangular& a, int k) {
    std::vector<int> col(static_cast<size_t>(k - 1));
    for (int s = 1; s < k; ++s) col[static_cast<size_t>(s - 1)] = a.at(s, k);
    return col;
}

BigInt eval_reference_rec(const StrictUpperTriangular& a, int k, const GradedPoly& p);

// One monomial c * m (arity k, degree k) under the elimination laws.
BigInt eval_reference_monomial(const StrictUpperTriangular& a, int k, const Monomial& m,
                               const BigInt& c) {
    int r = m[static_cast<size_t>(k - 1)];
    if (r == 0) return BigInt();  // no x_k: eliminated
    if (k == 1) return c;         // T(x_1) = 1
    Monomial head(m.begin(), m.end() - 1);
    GradedPoly h = GradedPoly::from_monomial(std::move(head), c);
    GradedPoly lifted = h * power_of_linear_form(last_column(a, k), r - 1);
    return eval_reference_rec(a, k - 1, lifted);
}

BigInt eval_reference_rec(const StrictUpperTriangular& a, int k, const GradedPoly& p) {
    if (k == 0) return p.coeff(Monomial{});
    BigInt total;
    p.for_each_term([&](const Monomial& m, const BigInt& c) {
        total += eval_reference_monomial(a, k, m, c);
    });
    return total;
}

}  // namespace

BigInt eval_T(const StrictUpperTriangular& a, const GradedPoly& p) {
    check_operand(a, p);
    GradedPoly cur = p;
    for (int stage = a.size(); stage >= 1; --stage) {
        GradedPoly next(stage - 1);
        if (!cur.is_zero()) {
            std::vector<int> col = last_column(a, stage);
            for (auto& [r, h] : cur.split_by_last_variable()) {
                if (r == 0) continue;  // elimination law 1
                if (r == 1) {
                    next += h;
                } else {
                    next += h * power_of_linear_form(col, r - 1);
                }
            }
        }
        cur = std::move(next);
    }
    return cur.coeff(Monomial{});
}

BigInt eval_T_reference(const StrictUpperTriangular& a, const GradedPoly& p) {
    check_operand(a, p);
    return eval_reference_rec(a, a.size(), p);
}

}  // namespace schubert
