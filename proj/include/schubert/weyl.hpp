#ifndef SCHUBERT_WEYL_HPP
#define SCHUBERT_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert {

// A word in the simple reflections: letters are node indices in [1..n].
// The empty word is the identity. Leftmost letter = leftmost factor.
using Word = std::vector<int>;

using Coord = std::int64_t;

// Integer vector in the fundamental-weight basis. Doubles as the numerical
// fingerprint b(w) = coordinates of w(delta), which is faithful on the group
// and never has a zero coordinate.
using WeightVector = std::vector<Coord>;
using BVector = std::vector<Coord>;

// delta = omega_1 + ... + omega_n, the strongly dominant weight.
WeightVector delta_weight(int n);

/*
  Simple reflection acting on the weight lattice: fixes every omega_i except
  omega_k |-> omega_k - sum_j c_{kj} omega_j, extended linearly. Involutive.
  Coordinate arithmetic is overflow-checked; OverflowError on wraparound.
*/
void apply_reflection_inplace(const CartanMatrix& c, int k, WeightVector& v);
WeightVector apply_reflection(const CartanMatrix& c, int k, WeightVector v);

// b(w): the word's letters applied to delta, rightmost letter first.
BVector b_of_word(const CartanMatrix& c, const Word& w);

// Same value computed by the literal term-substitution procedure; kept as a
// second code path and cross-checked against b_of_word in the test suite.
BVector b_of_word_substitution(const CartanMatrix& c, const Word& w);

// b(w^{-1}) = b of the reversed word (simple reflections are involutions).
BVector b_of_inverse(const CartanMatrix& c, const Word& w);

// l(sigma_i w) = l(w) - 1 exactly when b_i < 0.
bool has_left_descent(const BVector& b, int i);

// Exact length of the element represented by w (w need not be reduced):
// strip the smallest left descent until reaching delta.
int length(const CartanMatrix& c, const Word& w);

// w is the minimal representative of its coset exactly when every
// K-coordinate of b(w^{-1}) is positive.
bool is_min_rep(const CartanMatrix& c, const ParabolicSubset& k_set, const Word& w);
bool is_min_rep_b(const ParabolicSubset& k_set, const BVector& b_inv);

// "3.4.2" for [3,4,2]; "id" for the empty word.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s, int n);

}  // namespace schubert

#endif
