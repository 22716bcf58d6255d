#include "schubert/cartan.hpp"

#include <algorithm>
#include <cctype>

#include "schubert/errors.hpp"

namespace schubert {

CartanMatrix::CartanMatrix(int n, std::vector<int> row_major_entries)
    : n_(n), entries_(std::move(row_major_entries)) {
    if (n_ <= 0) throw ValidationError("Cartan matrix: rank must be positive");
    if (entries_.size() != static_cast<size_t>(n_) * n_)
        throw ValidationError("Cartan matrix: entry count does not match rank");
}

int CartanMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw IndexError("Cartan matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range 1.." + std::to_string(n_));
    return entries_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

void CartanMatrix::validate() const {
    if (n_ <= 0) throw ValidationError("Cartan matrix: rank must be positive");
    for (int i = 1; i <= n_; ++i) {
        if (at(i, i) != 2)
            throw ValidationError("diagonal entry != 2 at (" + std::to_string(i) + "," +
                                  std::to_string(i) + ")");
    }
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (i == j) continue;
            int v = at(i, j);
            if (v > 0 || v < -3)
                throw ValidationError("off-diagonal entry outside {0,-1,-2,-3} at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            if ((v == 0) != (at(j, i) == 0))
                throw ValidationError("zero-pattern asymmetry at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
    }
}

int cartan_number(const CartanMatrix& c, int i, int j) { return c.at(i, j); }

namespace {

struct Edge {
    int a, b;        // nodes, a < b
    int cab, cba;    // c_{ab}, c_{ba}
};

CartanMatrix from_edges(int n, const std::vector<Edge>& edges) {
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 2;
    for (const Edge& e : edges) {
        m[static_cast<size_t>(e.a - 1) * n + (e.b - 1)] = e.cab;
        m[static_cast<size_t>(e.b - 1) * n + (e.a - 1)] = e.cba;
    }
    return CartanMatrix(n, std::move(m));
}

std::vector<Edge> chain(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, -1, -1});
    return edges;
}

}  // namespace

CartanMatrix load_preset(char series, int rank) {
    auto bad = [&] {
        return ValidationError(std::string("unknown preset ") + series + std::to_string(rank));
    };
    switch (series) {
        case 'A':
            if (rank < 1) throw bad();
            return from_edges(rank, chain(rank));
        case 'B': {
            if (rank < 2) throw bad();
            auto edges = chain(rank);
            edges.back() = {rank - 1, rank, -2, -1};  // node rank is the short root
            return from_edges(rank, edges);
        }
        case 'C': {
            if (rank < 3) throw bad();
            auto edges = chain(rank);
            edges.back() = {rank - 1, rank, -1, -2};
            return from_edges(rank, edges);
        }
        case 'D': {
            if (rank < 4) throw bad();
            auto edges = chain(rank - 1);             // 1-2-...-(n-1)
            edges.push_back({rank - 2, rank, -1, -1});  // node n forks off n-2
            return from_edges(rank, edges);
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw bad();
            std::vector<Edge> edges = {{1, 3, -1, -1}, {2, 4, -1, -1}};
            for (int i = 3; i < rank; ++i) edges.push_back({i, i + 1, -1, -1});
            return from_edges(rank, edges);
        }
        case 'F':
            if (rank != 4) throw bad();
            return from_edges(4, {{1, 2, -1, -1}, {2, 3, -2, -1}, {3, 4, -1, -1}});
        case 'G':
            if (rank != 2) throw bad();
            return from_edges(2, {{1, 2, -1, -3}});
        default:
            throw bad();
    }
}

CartanMatrix load_preset(std::string_view name) {
    if (name.size() < 2) throw ValidationError("unknown preset '" + std::string(name) + "'");
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int rank = 0;
    for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("unknown preset '" + std::string(name) + "'");
        rank = rank * 10 + (c - '0');
        if (rank > 1000) throw ValidationError("preset rank too large");
    }
    return load_preset(series, rank);
}

ParabolicSubset::ParabolicSubset(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ParabolicSubset ParabolicSubset::complement_of(const std::vector<int>& excluded, int n) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i) {
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end())
            members.push_back(i);
    }
    return ParabolicSubset(std::move(members));
}

bool ParabolicSubset::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::vector<int> ParabolicSubset::complement(int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (!contains(i)) out.push_back(i);
    }
    return out;
}

void FlagSpec::validate() const {
    cartan.validate();
    for (int i : k_set.members()) {
        if (i < 1 || i > cartan.rank())
            throw ValidationError("K member " + std::to_string(i) + " outside 1.." +
                                  std::to_string(cartan.rank()));
    }
}

}  // namespace schubert
