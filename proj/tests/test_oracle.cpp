#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "schubert/errors.hpp"
#include "schubert/oracle.hpp"
#include "schubert/product.hpp"

using namespace schubert;

namespace {

FlagSpec grassmannian_spec(int n, int k) {
    return FlagSpec{load_preset('A', n - 1), ParabolicSubset::complement_of({k}, n - 1),
                    std::nullopt};
}

}  // namespace

TEST_CASE("partition basics") {
    CHECK(Partition({3, 2}).size() == 5);
    CHECK(Partition({3, 2, 0, 0}).rows() == 2);
    CHECK(Partition{}.size() == 0);
    CHECK(Partition({2, 2}).contains(Partition({1})));
    CHECK_FALSE(Partition({2, 2}).contains(Partition({3})));
    CHECK(Partition({2, 1}).fits_in_box(2, 2));
    CHECK_FALSE(Partition({3}).fits_in_box(2, 2));
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({2, -1}), ValidationError);
}

TEST_CASE("partitions in a box, counted by size") {
    auto parts = partitions_in_box(2, 2);
    CHECK(parts.size() == 6);  // binomial(4,2)
    std::map<int, int> by_size;
    for (const auto& p : parts) ++by_size[p.size()];
    CHECK(by_size == std::map<int, int>{{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});
}

TEST_CASE("littlewood-richardson examples") {
    // unit of the basis
    CHECK(lr_coefficient(Partition{}, Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition{}, Partition({2, 1})) == 1);
    // single-box products
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    // the classical multiplicity-2 product
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    // size mismatch counts zero
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
    // containment failure
    CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 2})) == 0);
}

TEST_CASE("lr coefficient is symmetric") {
    auto parts = partitions_in_box(3, 3);
    for (const auto& lambda : parts) {
        for (const auto& mu : parts) {
            if (lambda.size() + mu.size() > 6) continue;
            for (const auto& nu : partitions_in_box(4, 4)) {
                if (nu.size() != lambda.size() + mu.size()) continue;
                CHECK(lr_coefficient(lambda, mu, nu) == lr_coefficient(mu, lambda, nu));
            }
        }
    }
}

TEST_CASE("schur polynomials") {
    // s_(1) = x1+x2+x3; s_(1,1) = e2; s_(2) = h2
    CHECK(schur_poly(Partition({1}), 3).term_count() == 3);
    GradedPoly e2 = schur_poly(Partition({1, 1}), 3);
    CHECK(e2.term_count() == 3);
    CHECK(e2.coeff({1, 1, 0}) == BigInt(1));
    CHECK(e2.coeff({2, 0, 0}) == BigInt(0));
    GradedPoly h2 = schur_poly(Partition({2}), 3);
    CHECK(h2.term_count() == 6);
    CHECK(h2.coeff({2, 0, 0}) == BigInt(1));
    // more rows than variables: zero
    CHECK(schur_poly(Partition({1, 1, 1}), 2).is_zero());
    CHECK(schur_poly(Partition{}, 2) == GradedPoly::constant(2, 1));
}

TEST_CASE("tableau counting against the schur product identity") {
    // s_lambda s_mu = sum_nu c^nu_{lambda mu} s_nu, expanded in 5 variables
    const int nvars = 5;
    auto small = partitions_in_box(2, 3);
    for (const auto& lambda : small) {
        for (const auto& mu : small) {
            GradedPoly lhs = schur_poly(lambda, nvars) * schur_poly(mu, nvars);
            GradedPoly rhs(nvars);
            int total = lambda.size() + mu.size();
            for (const auto& nu : partitions_in_box(nvars, 6)) {
                if (nu.size() != total) continue;
                long long c = lr_coefficient(lambda, mu, nu);
                if (c == 0) continue;
                GradedPoly scaled(nvars);
                schur_poly(nu, nvars).for_each_term(
                    [&](const Monomial& m, const BigInt& coeff) {
                        scaled.add_term(m, coeff * BigInt(c));
                    });
                rhs += scaled;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("word to permutation") {
    CHECK(word_to_permutation(4, {}) == std::vector<int>{1, 2, 3, 4});
    CHECK(word_to_permutation(4, {1, 2}) == std::vector<int>{2, 3, 1, 4});
    CHECK(word_to_permutation(4, {3, 2}) == std::vector<int>{1, 4, 2, 3});
    CHECK_THROWS_AS(word_to_permutation(4, {4}), IndexError);
}

TEST_CASE("bijection with partitions in the box") {
    FlagSpec spec = grassmannian_spec(4, 2);
    CosetTable table = build_table(spec);
    std::vector<size_t> sizes;
    for (const auto& s : table.strata()) sizes.push_back(s.size());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 1, 1});

    CHECK(min_rep_to_partition(spec, table.at(0, 1)) == Partition{});
    CHECK(min_rep_to_partition(spec, table.at(1, 1)) == Partition({1}));

    // stratum by stratum: distinct partitions, |lambda| = length, in the box
    for (const auto& stratum : table.strata()) {
        std::set<Partition> seen;
        for (const CosetElement& e : stratum) {
            Partition lambda = min_rep_to_partition(spec, e);
            CHECK(lambda.size() == e.len);
            CHECK(lambda.fits_in_box(2, 2));
            CHECK(seen.insert(lambda).second);
            CHECK(&partition_to_min_rep(table, lambda) == &e);
        }
    }
}

TEST_CASE("bijection rejects wrong shapes") {
    FlagSpec two_nodes{load_preset('A', 3), ParabolicSubset({2}), std::nullopt};
    CosetTable table = build_table(two_nodes, {.max_len = 1});
    CHECK_THROWS_AS(min_rep_to_partition(two_nodes, table.at(0, 1)), ValidationError);

    FlagSpec b_type{load_preset('B', 3), ParabolicSubset::complement_of({2}, 3), std::nullopt};
    CosetTable tb = build_table(b_type, {.max_len = 1});
    CHECK_THROWS_AS(min_rep_to_partition(b_type, tb.at(0, 1)), ValidationError);
}

TEST_CASE("pipeline agreement on every grassmannian up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k < n; ++k) {
            FlagSpec spec = grassmannian_spec(n, k);
            CosetTable table = build_table(spec);
            int box = k * (n - k);
            CHECK(table.top_length() == box);
            CHECK(table.total_size() > 0);
            for (const auto& su : table.strata()) {
                for (const CosetElement& u : su) {
                    Partition lambda = min_rep_to_partition(spec, u);
                    for (const auto& sv : table.strata()) {
                        for (const CosetElement& v : sv) {
                            if (u.len + v.len > box) continue;
                            Partition mu = min_rep_to_partition(spec, v);
                            ProductExpansion exp = expand_product(table, u, v);
                            const auto& targets = table.stratum(u.len + v.len);
                            for (size_t j = 0; j < targets.size(); ++j) {
                                Partition nu = min_rep_to_partition(spec, targets[j]);
                                CHECK(exp.coeffs[j] == lr_coefficient(lambda, mu, nu));
                            }
                        }
                    }
                }
            }
        }
    }
}
