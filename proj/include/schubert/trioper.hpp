#ifndef SCHUBERT_TRIOPER_HPP
#define SCHUBERT_TRIOPER_HPP

#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/cartan.hpp"
#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/*
  Strictly upper triangular integer matrix of size k; only entries a_{s,t}
  with s < t are stored. Deleting the last row and column gives the matrix
  driving the next elimination stage.
*/
class StrictUpperTriangular {
  public:
    explicit StrictUpperTriangular(int k) : k_(k), entries_(packed_size(k), 0) {}

    int size() const { return k_; }

    // a_{s,t}, 1-based; zero on and below the diagonal.
    int at(int s, int t) const;
    void set(int s, int t, int value);  // requires s < t

    friend bool operator==(const StrictUpperTriangular&, const StrictUpperTriangular&) = default;

  private:
    static size_t packed_size(int k) {
        return static_cast<size_t>(k) * (k - 1) / 2;
    }
    size_t offset(int s, int t) const;  // valid for s < t

    int k_ = 0;
    std::vector<int> entries_;  // column-packed: (1,2), (1,3), (2,3), (1,4), ...
};

// The word's Cartan matrix: a_{s,t} = -c_{i_t, i_s} for s < t, where i_1..i_k
// are the letters. Meaningful when the word is reduced (caller's contract).
StrictUpperTriangular word_cartan_matrix(const CartanMatrix& c, const Word& w);

/*
  The triangular operator: a linear functional on homogeneous polynomials of
  degree k in k variables (degree 0: the constant itself). Evaluated by k
  elimination stages, each collapsing the last variable: drop h_0, keep h_1,
  map h_r to h_r * (a_{1,k} x_1 + ... + a_{k-1,k} x_{k-1})^{r-1} for r >= 2.
  GradingError when p is nonzero with degree or arity != k.
*/
BigInt eval_T(const StrictUpperTriangular& a, const GradedPoly& p);

// Literal per-monomial recursion of the defining elimination laws, without
// the stagewise batching. Reference implementation for cross-checking.
BigInt eval_T_reference(const StrictUpperTriangular& a, const GradedPoly& p);

}  // namespace schubert

#endif
