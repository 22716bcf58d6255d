#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <vector>

#include "schubert/cartan.hpp"
#include "schubert/errors.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

namespace {

// Independent oracle: the reflection as an n x n integer matrix acting on
// weight coordinates, composed by plain matrix multiplication. Two words are
// the same group element exactly when their matrices agree.
using Matrix = std::vector<std::vector<long long>>;

Matrix reflection_matrix(const CartanMatrix& c, int k) {
    int n = c.rank();
    Matrix m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int j = 1; j <= n; ++j)
        m[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] -= c.at(k, j);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l)
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

Matrix word_matrix(const CartanMatrix& c, const Word& w) {
    int n = c.rank();
    Matrix m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int letter : w) m = mat_mul(m, reflection_matrix(c, letter));
    return m;
}

std::vector<Word> all_words_up_to(int n, int max_len) {
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int i = 1; i <= n; ++i) {
                Word e = w;
                e.push_back(i);
                next.push_back(e);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("apply_reflection matches the hand-computed examples") {
    CartanMatrix a2 = load_preset('A', 2);
    CHECK(apply_reflection(a2, 1, {1, 1}) == WeightVector{-1, 2});
    CHECK(apply_reflection(a2, 1, {-1, 2}) == WeightVector{1, 1});
    CHECK(apply_reflection(a2, 2, {0, 0}) == WeightVector{0, 0});
    CHECK_THROWS_AS(apply_reflection(a2, 3, {1, 1}), IndexError);
}

TEST_CASE("apply_reflection is an involution") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Coord> dist(-50, 50);
    for (char series : {'A', 'B', 'G'}) {
        int n = series == 'A' ? 4 : 2;
        CartanMatrix c = load_preset(series, n);
        for (int trial = 0; trial < 50; ++trial) {
            WeightVector v(static_cast<size_t>(n));
            for (auto& x : v) x = dist(rng);
            for (int k = 1; k <= n; ++k) {
                CHECK(apply_reflection(c, k, apply_reflection(c, k, v)) == v);
            }
        }
    }
}

TEST_CASE("b_of_word examples") {
    CartanMatrix a2 = load_preset('A', 2);
    CHECK(b_of_word(a2, {}) == BVector{1, 1});
    CHECK(b_of_word(a2, {1}) == BVector{-1, 2});
    CHECK(b_of_word(a2, {1, 2}) == BVector{-2, 1});
}

TEST_CASE("substitution path agrees with the fold") {
    for (char series : {'A', 'B', 'G', 'E'}) {
        int n = series == 'E' ? 6 : (series == 'A' ? 3 : 2);
        CartanMatrix c = load_preset(series, n);
        std::mt19937 rng(series);
        std::uniform_int_distribution<int> letter(1, n);
        for (int trial = 0; trial < 40; ++trial) {
            Word w(static_cast<size_t>(trial % 12));
            for (auto& l : w) l = letter(rng);
            CHECK(b_of_word(c, w) == b_of_word_substitution(c, w));
        }
    }
}

TEST_CASE("b_of_inverse is b of the reversed word") {
    CartanMatrix a2 = load_preset('A', 2);
    CHECK(b_of_inverse(a2, {1, 2}) == b_of_word(a2, {2, 1}));
    CHECK(b_of_inverse(a2, {1, 2}) == BVector{1, -2});
    CHECK(b_of_inverse(a2, {1}) == b_of_word(a2, {1}));
    CHECK(b_of_inverse(a2, {}) == BVector{1, 1});
}

TEST_CASE("has_left_descent") {
    CHECK(has_left_descent({-1, 2}, 1));
    CHECK_FALSE(has_left_descent({1, 1}, 1));
    CHECK_FALSE(has_left_descent({1, 1}, 2));
    CHECK_FALSE(has_left_descent({-2, 1}, 2));
    CHECK_THROWS_AS(has_left_descent({1, 1}, 3), IndexError);
}

TEST_CASE("length examples") {
    CartanMatrix a2 = load_preset('A', 2);
    CHECK(length(a2, {}) == 0);
    CHECK(length(a2, {1, 1}) == 0);
    CHECK(length(a2, {1, 2, 1}) == 3);
    // brute force: no shorter word represents the same element
    BVector target = b_of_word(a2, {1, 2, 1});
    for (const Word& w : all_words_up_to(2, 2)) {
        CHECK(b_of_word(a2, w) != target);
    }
    // a word followed by its reverse cancels to the identity
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> letter(1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Word w(static_cast<size_t>(trial));
        for (auto& l : w) l = letter(rng);
        Word doubled = w;
        doubled.insert(doubled.end(), w.rbegin(), w.rend());
        CHECK(length(a2, doubled) == 0);
    }
}

TEST_CASE("faithfulness and the descent criterion on small groups") {
    struct GroupCase {
        char series;
        int rank;
        int max_len;  // length of the longest element
        size_t order;
    };
    for (GroupCase g : {GroupCase{'A', 2, 3, 6}, GroupCase{'A', 3, 6, 24},
                        GroupCase{'B', 2, 4, 8}, GroupCase{'G', 2, 6, 12}}) {
        CartanMatrix c = load_preset(g.series, g.rank);
        // group words by true element identity (matrix oracle); the b-vector
        // must be constant inside a class and distinct across classes
        std::map<Matrix, std::set<BVector>> by_element;
        std::map<Matrix, Word> representative;
        for (const Word& w : all_words_up_to(g.rank, g.max_len)) {
            by_element[word_matrix(c, w)].insert(b_of_word(c, w));
            representative.emplace(word_matrix(c, w), w);
        }
        CHECK(by_element.size() == g.order);
        std::set<BVector> all_b;
        for (const auto& [m, bs] : by_element) {
            CHECK(bs.size() == 1);  // same element, same fingerprint
            all_b.insert(*bs.begin());
            // no zero coordinates
            for (Coord x : *bs.begin()) CHECK(x != 0);
        }
        CHECK(all_b.size() == by_element.size());  // distinct elements, distinct fingerprints

        // Lemma-4(i) style criterion: b_i(w) < 0 exactly when sigma_i shortens
        for (const auto& [m, w] : representative) {
            BVector b = b_of_word(c, w);
            int lw = length(c, w);
            for (int i = 1; i <= g.rank; ++i) {
                Word sw = w;
                sw.insert(sw.begin(), i);
                bool shortens = length(c, sw) == lw - 1;
                CHECK(shortens == has_left_descent(b, i));
            }
        }
    }
}

TEST_CASE("is_min_rep") {
    CartanMatrix e6 = load_preset('E', 6);
    ParabolicSubset k = ParabolicSubset::complement_of({2}, 6);
    CHECK(is_min_rep(e6, k, {}));
    CHECK(is_min_rep(e6, k, {2}));
    CHECK_FALSE(is_min_rep(e6, k, {1}));
}

TEST_CASE("word rendering round trip") {
    CHECK(word_to_string({3, 4, 2}) == "3.4.2");
    CHECK(word_to_string({}) == "id");
    CHECK(parse_word("3.4.2", 6) == Word{3, 4, 2});
    CHECK(parse_word("id", 6) == Word{});
    CHECK_THROWS_AS(parse_word("3..2", 6), ValidationError);
    CHECK_THROWS_AS(parse_word("0.1", 6), ValidationError);
    CHECK_THROWS_AS(parse_word("7", 6), ValidationError);
}

TEST_CASE("overflow is detected, not wrapped") {
    CartanMatrix a2 = load_preset('A', 2);
    WeightVector huge{5000000000000000000LL, 5000000000000000000LL};
    CHECK_THROWS_AS(apply_reflection(a2, 1, huge), OverflowError);
}
