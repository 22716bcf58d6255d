#ifndef SCHUBERT_ORACLE_HPP
#define SCHUBERT_ORACLE_HPP

#include <vector>

#include "schubert/coset.hpp"
#include "schubert/polyring.hpp"

namespace schubert {

/*
  Cross-validation path for type-A Grassmannians, independent of the main
  pipeline: Littlewood-Richardson coefficients by exhaustive skew-tableau
  enumeration, Schur polynomials by exhaustive column-strict tableau
  enumeration, and the classical bijection between minimal representatives
  and partitions in a box. Exponential algorithms on purpose; meant for
  ranks where everything can be enumerated.
*/

struct Partition {
    std::vector<int> parts;  // weakly decreasing, no trailing zeros

    explicit Partition(std::vector<int> p = {});
    int size() const;  // number of boxes
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const {  // 1-based, 0 past the end
        return i >= 1 && i <= rows() ? parts[static_cast<size_t>(i - 1)] : 0;
    }
    bool contains(const Partition& inner) const;
    bool fits_in_box(int rows, int cols) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Number of LR skew tableaux of shape nu/lambda with content mu (column
// strict, rows weakly increasing, reverse reading word a lattice word).
// Size mismatch |nu| != |lambda| + |mu| counts zero by convention.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Schur polynomial s_lambda(x_1..x_nvars) as a sum over column-strict
// tableaux; the zero polynomial when lambda has more than nvars rows.
GradedPoly schur_poly(const Partition& lambda, int nvars);

// Partitions of every size fitting in a rows x cols box.
std::vector<Partition> partitions_in_box(int rows, int cols);

// The spec must be (A_{n-1} preset, K = complement of {k}); ValidationError
// otherwise. The element's partition lives in a k x (n-k) box and has
// exactly l(w) boxes.
Partition min_rep_to_partition(const FlagSpec& spec, const CosetElement& w);

// Inverse direction: the unique table element whose partition is lambda.
const CosetElement& partition_to_min_rep(const CosetTable& table, const Partition& lambda);

// Helper shared with tests: the one-line permutation of a type-A word
// (letter i acts as the adjacent transposition of i, i+1).
std::vector<int> word_to_permutation(int n_symbols, const Word& w);

}  // namespace schubert

#endif
