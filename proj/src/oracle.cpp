#include "schubert/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "schubert/errors.hpp"

namespace schubert {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw ValidationError("partition parts must be weakly decreasing and positive");
    }
}

int Partition::size() const {
    int total = 0;
    for (int p : parts) total += p;
    return total;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i) {
        if (inner.part(i) > part(i)) return false;
    }
    return true;
}

bool Partition::fits_in_box(int box_rows, int box_cols) const {
    return rows() <= box_rows && part(1) <= box_cols;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (mu.size() == 0) return 1;  // shape nu == lambda, empty filling

    int nrows = nu.rows();
    int values = mu.rows();
    // cells of nu/lambda in reverse reading order: rows top to bottom,
    // right to left within a row
    struct Cell {
        int row, col;  // 1-based
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= nrows; ++r) {
        for (int c = nu.part(r); c > lambda.part(r); --c) cells.push_back({r, c});
    }

    std::vector<std::vector<int>> grid(static_cast<size_t>(nrows + 1),
                                       std::vector<int>(static_cast<size_t>(nu.part(1) + 1), 0));
    std::vector<int> count(static_cast<size_t>(values + 1), 0);
    long long tableaux = 0;

    std::function<void(size_t)> fill = [&](size_t at) {
        if (at == cells.size()) {
            ++tableaux;
            return;
        }
        auto [r, c] = cells[at];
        // right neighbour (already placed) bounds from above; the cell above
        // (in the filled region) forces strict growth down the column
        int hi = c < nu.part(r) ? grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]
                                : values;
        int lo = 1;
        if (r > 1 && c > lambda.part(r - 1)) lo = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<size_t>(v)] >= mu.part(v)) continue;  // content exhausted
            // lattice condition on the reverse reading word
            if (v > 1 && count[static_cast<size_t>(v - 1)] <= count[static_cast<size_t>(v)])
                continue;
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++count[static_cast<size_t>(v)];
            fill(at + 1);
            --count[static_cast<size_t>(v)];
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    fill(0);
    return tableaux;
}

GradedPoly schur_poly(const Partition& lambda, int nvars) {
    GradedPoly out(nvars);
    if (lambda.rows() > nvars) return out;
    if (lambda.rows() == 0) return GradedPoly::constant(nvars, 1);

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;  // reading order: rows top to bottom, left to right
    for (int r = 1; r <= lambda.rows(); ++r) {
        for (int c = 1; c <= lambda.part(r); ++c) cells.push_back({r, c});
    }
    std::vector<std::vector<int>> grid(static_cast<size_t>(lambda.rows() + 1),
                                       std::vector<int>(static_cast<size_t>(lambda.part(1) + 1), 0));
    Monomial content(static_cast<size_t>(nvars), 0);

    std::function<void(size_t)> fill = [&](size_t at) {
        if (at == cells.size()) {
            out.add_term(content, 1);
            return;
        }
        auto [r, c] = cells[at];
        int lo = 1;
        if (c > 1) lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 1) lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++content[static_cast<size_t>(v - 1)];
            fill(at + 1);
            --content[static_cast<size_t>(v - 1)];
        }
        grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    };
    fill(0);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.push_back(Partition(cur));
        if (row == rows) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

std::vector<int> word_to_permutation(int n_symbols, const Word& w) {
    std::vector<int> p(static_cast<size_t>(n_symbols));
    for (int i = 0; i < n_symbols; ++i) p[static_cast<size_t>(i)] = i + 1;
    for (int letter : w) {
        if (letter < 1 || letter >= n_symbols)
            throw IndexError("letter " + std::to_string(letter) + " out of range for " +
                             std::to_string(n_symbols) + " symbols");
        std::swap(p[static_cast<size_t>(letter - 1)], p[static_cast<size_t>(letter)]);
    }
    return p;
}

namespace {

// K must be the complement of a single node {k} in a type-A preset; returns k.
int grassmannian_node(const FlagSpec& spec) {
    int rank = spec.cartan.rank();
    if (!(spec.cartan == load_preset('A', rank)))
        throw ValidationError("the partition bijection needs a type-A preset matrix");
    std::vector<int> j = spec.k_set.complement(rank);
    if (j.size() != 1)
        throw ValidationError("the partition bijection needs K = complement of a single node");
    return j[0];
}

}  // namespace

Partition min_rep_to_partition(const FlagSpec& spec, const CosetElement& w) {
    int k = grassmannian_node(spec);
    int n = spec.cartan.rank() + 1;
    std::vector<int> p = word_to_permutation(n, w.word);
    for (int i = 1; i < n; ++i) {
        if (i == k) continue;
        if (p[static_cast<size_t>(i - 1)] > p[static_cast<size_t>(i)])
            throw ValidationError("element is not a minimal representative of the quotient");
    }
    std::vector<int> parts;
    for (int j = 1; j <= k; ++j) parts.push_back(p[static_cast<size_t>(k - j)] - (k + 1 - j));
    Partition lambda(std::move(parts));
    if (lambda.size() != w.len)
        throw ValidationError("partition size does not match the element length");
    return lambda;
}

const CosetElement& partition_to_min_rep(const CosetTable& table, const Partition& lambda) {
    int boxes = lambda.size();
    for (const CosetElement& e : table.stratum(boxes)) {
        if (min_rep_to_partition(table.spec(), e) == lambda) return e;
    }
    throw NotFoundError("no element with the requested partition in stratum " +
                        std::to_string(boxes));
}

}  // namespace schubert
