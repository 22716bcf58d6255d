#ifndef SCHUBERT_PRODUCT_HPP
#define SCHUBERT_PRODUCT_HPP

#include <cstdint>
#include <vector>

#include "schubert/coset.hpp"
#include "schubert/polyring.hpp"
#include "schubert/trioper.hpp"

namespace schubert {

enum class SelectMode {
    naive,   // scan every r-subset of positions
    pruned,  // depth-first, abandoning non-reduced partial subwords
};

/*
  The selection polynomial of u inside w: the sum of x_L over the r-subsets
  L of w's letter positions whose subword equals u. Square-free, arity l(w),
  degree l(u); zero when l(u) > l(w).
*/
struct SubwordSelection {
    std::pair<int, int> w_ref;  // (len, idx)
    std::pair<int, int> u_ref;
    GradedPoly poly;
};

SubwordSelection select_subwords(const CosetTable& table, const CosetElement& w,
                                 const CosetElement& u, SelectMode mode = SelectMode::pruned);

// Same selection on an explicit reduced word of w (used to check that the
// result of the whole pipeline does not depend on the chosen reduced word).
GradedPoly select_subwords_on_word(const CartanMatrix& c, const Word& w_word,
                                   const CosetElement& u, SelectMode mode = SelectMode::pruned);

// The structure constant of the w-class in the product of the u- and
// v-classes. PreconditionError unless l(u) + l(v) = l(w).
std::int64_t structure_constant(const CosetTable& table, const CosetElement& u,
                                const CosetElement& v, const CosetElement& w,
                                SelectMode mode = SelectMode::pruned);

struct ProductExpansion {
    std::pair<int, int> u_ref;
    std::pair<int, int> v_ref;
    int degree = 0;                     // l(u) + l(v)
    std::vector<std::int64_t> coeffs;   // one per element of that stratum, in index order
};

// All structure constants of one product, each target evaluated
// independently; `jobs` worker threads (0 = hardware concurrency). Output
// order is by stratum index regardless of scheduling.
ProductExpansion expand_product(const CosetTable& table, const CosetElement& u,
                                const CosetElement& v, int jobs = 1,
                                SelectMode mode = SelectMode::pruned);

}  // namespace schubert

#endif
