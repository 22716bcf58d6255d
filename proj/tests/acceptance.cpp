// Acceptance gate: every release criterion, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/format.hpp"
#include "schubert/product.hpp"
#include "schubert/trioper.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

int criteria_failed = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int id, const std::string& label, bool pass, double seconds, double budget,
            const std::string& detail = "") {
    bool in_budget = budget <= 0 || seconds < budget;
    bool ok = pass && in_budget;
    if (!ok) ++criteria_failed;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << label;
    std::printf(" (%.2f s", seconds);
    if (budget > 0) std::printf(" / budget %.0f s", budget);
    std::cout << ")\n";
    if (!pass && !detail.empty()) std::cout << detail;
    if (pass && !in_budget) std::cout << "  exceeded the time budget\n";
}

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(SCHUBERT_FIXTURE_DIR) + "/" + name);
    if (!in.good()) throw IoError("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FlagSpec e_series_spec(int n) {
    return FlagSpec{load_preset('E', n), ParabolicSubset::complement_of({2}, n), std::nullopt};
}

std::string render_blocks(int n, int jobs, SelectMode mode) {
    CosetTable table = build_table(e_series_spec(n), {.max_len = 10});
    return render_table_text(compute_table_block(table, 9, jobs, mode)) +
           render_table_text(compute_table_block(table, 10, jobs, mode));
}

// ---------------------------------------------------------------- criteria

void criterion_1_table_a6() {
    auto start = std::chrono::steady_clock::now();
    CosetTable table = build_table(e_series_spec(6), {.max_len = 10});
    bool pass = render_coset_text(table, 10) == read_fixture("table_a6.txt");
    report(1, "E6 decomposition table, byte-identical (36 rows)", pass, seconds_since(start),
           5.0);
}

void criterion_2_tables_a7_a8() {
    for (int n : {7, 8}) {
        auto start = std::chrono::steady_clock::now();
        CosetTable table = build_table(e_series_spec(n), {.max_len = 10});
        std::string fixture = "table_a" + std::to_string(n) + ".txt";
        bool pass = render_coset_text(table, 10) == read_fixture(fixture);
        report(2, "E" + std::to_string(n) + " decomposition table, byte-identical", pass,
               seconds_since(start), 10.0);
    }
}

void criterion_3_cardinalities() {
    struct Expected {
        int n;
        long long weyl_order;      // |W(E_n)|
        long long subgroup_order;  // |W'| = n!
        size_t total;
        int top;
    };
    // top length = positive roots of E_n minus positive roots of A_{n-1};
    // the 17280-element count pins it to 92 for E8 via palindromicity
    const Expected cases[] = {{6, 51840, 720, 72, 21},
                              {7, 2903040, 5040, 576, 42},
                              {8, 696729600, 40320, 17280, 92}};
    for (const Expected& c : cases) {
        auto start = std::chrono::steady_clock::now();
        CosetTable table = build_table(e_series_spec(c.n));
        bool pass = table.complete();
        pass = pass && table.total_size() == c.total;
        pass = pass && c.weyl_order / c.subgroup_order == static_cast<long long>(c.total);
        pass = pass && table.top_length() == c.top;
        for (int k = 0; k <= c.top; ++k)
            pass = pass && table.stratum(k).size() == table.stratum(c.top - k).size();
        report(3,
               "E" + std::to_string(c.n) + " full enumeration: " + std::to_string(c.total) +
                   " classes, top length " + std::to_string(c.top) + ", palindromic",
               pass, seconds_since(start), c.n == 8 ? 300.0 : 60.0);
    }
}

std::vector<std::string> criterion_4_tables_b(int jobs) {
    std::vector<std::string> rendered;
    for (int n : {6, 7, 8}) {
        auto start = std::chrono::steady_clock::now();
        CosetTable table = build_table(e_series_spec(n), {.max_len = 10});
        std::string got = render_table_text(compute_table_block(table, 9, jobs)) +
                          render_table_text(compute_table_block(table, 10, jobs));
        std::string want = read_fixture("table_b" + std::to_string(n) + "_deg9.txt") +
                           read_fixture("table_b" + std::to_string(n) + "_deg10.txt");
        bool pass = got == want;
        // the named anchor entry of each table
        if (n == 6)
            pass = pass && structure_constant(table, table.at(4, 2), table.at(5, 3),
                                              table.at(9, 1)) == 5;
        if (n == 7)
            pass = pass && structure_constant(table, table.at(5, 2), table.at(5, 2),
                                              table.at(10, 1)) == 6;
        if (n == 8)
            pass = pass && structure_constant(table, table.at(5, 3), table.at(5, 3),
                                              table.at(10, 7)) == 6;
        report(4, "E" + std::to_string(n) + " structure-constant tables, degrees 9 and 10",
               pass, seconds_since(start), 1800.0);
        rendered.push_back(got);
    }
    return rendered;
}

void criterion_5_triangular_operator() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;

    for (int a = -3; a <= 3; ++a) {
        StrictUpperTriangular m(2);
        m.set(1, 2, a);
        pass = pass && eval_T(m, GradedPoly::from_monomial({2, 0}, 1)) == BigInt(0);
        pass = pass && eval_T(m, GradedPoly::from_monomial({1, 1}, 1)) == BigInt(1);
        pass = pass && eval_T(m, GradedPoly::from_monomial({0, 2}, 1)) == BigInt(a);
    }

    // batched evaluation vs the literal recursion, every monomial, k <= 5
    std::mt19937 rng(20240215);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int k = 1; k <= 5 && pass; ++k) {
        std::vector<Monomial> monomials;
        Monomial cur(static_cast<size_t>(k), 0);
        std::function<void(int, int)> gen = [&](int var, int remaining) {
            if (var == k - 1) {
                cur[static_cast<size_t>(var)] = static_cast<std::uint16_t>(remaining);
                monomials.push_back(cur);
                return;
            }
            for (int r = 0; r <= remaining; ++r) {
                cur[static_cast<size_t>(var)] = static_cast<std::uint16_t>(r);
                gen(var + 1, remaining - r);
            }
        };
        gen(0, k);
        for (int trial = 0; trial < 30 && pass; ++trial) {
            StrictUpperTriangular m(k);
            for (int t = 2; t <= k; ++t) {
                for (int s = 1; s < t; ++s) {
                    int v = trial == 0 ? 0 : (trial == 1 ? 3 : (trial == 2 ? -3 : entry(rng)));
                    m.set(s, t, v);
                }
            }
            for (const Monomial& mo : monomials) {
                GradedPoly p = GradedPoly::from_monomial(mo, 1);
                pass = pass && eval_T(m, p) == eval_T_reference(m, p);
            }
        }
    }
    report(5, "triangular operator: symbolic rank-2 values; batched = literal up to k=5", pass,
           seconds_since(start), 60.0);
}

void criterion_6_properties(const std::vector<std::string>& pruned_blocks) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool pass = verify::run_properties_suite(log, 0);

    // the published-table queries agree between the two subword scans
    int i = 0;
    for (int n : {6, 7, 8}) {
        pass = pass && render_blocks(n, 1, SelectMode::naive) == pruned_blocks[static_cast<size_t>(i++)];
    }
    report(6, "property suites (commutativity, word independence, associativity, duality, "
              "nonnegativity, scan equivalence)",
           pass, seconds_since(start), 120.0, log.str());
}

void criterion_7_grassmannian() {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool pass = verify::run_grassmannian_suite(log);
    report(7, "Grassmannian products equal brute-force tableau counts (n <= 6)", pass,
           seconds_since(start), 300.0, log.str());
}

void criterion_8_determinism() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    for (int n : {6, 7, 8}) {
        CosetTable t1 = build_table(e_series_spec(n), {.max_len = 10});
        CosetTable t2 = build_table(e_series_spec(n), {.max_len = 10});
        pass = pass && render_coset_text(t1, 10) == render_coset_text(t2, 10);
    }
    std::string once = render_blocks(6, 1, SelectMode::pruned) +
                       render_blocks(7, 2, SelectMode::pruned) +
                       render_blocks(8, 4, SelectMode::pruned);
    std::string again = render_blocks(6, 8, SelectMode::pruned) +
                        render_blocks(7, 3, SelectMode::pruned) +
                        render_blocks(8, 1, SelectMode::pruned);
    pass = pass && once == again;
    report(8, "byte-identical output across repeat runs and thread counts", pass,
           seconds_since(start), 600.0);
}

}  // namespace

int main() {
    try {
        criterion_1_table_a6();
        criterion_2_tables_a7_a8();
        criterion_3_cardinalities();
        std::vector<std::string> blocks = criterion_4_tables_b(0);
        criterion_5_triangular_operator();
        criterion_6_properties(blocks);
        criterion_7_grassmannian();
        criterion_8_determinism();
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << "\n";
        return 1;
    }
    if (criteria_failed == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << criteria_failed << " acceptance check(s) failed\n";
    return 1;
}
