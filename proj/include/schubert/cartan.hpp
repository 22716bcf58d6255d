#ifndef SCHUBERT_CARTAN_HPP
#define SCHUBERT_CARTAN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/*
  Integer Cartan matrix (c_ij), 1-based accessors. Together with a parabolic
  subset K it is the complete input of every computation in this project.
  Immutable after construction; safe to share across threads.
*/
class CartanMatrix {
  public:
    CartanMatrix() = default;
    CartanMatrix(int n, std::vector<int> row_major_entries);

    int rank() const { return n_; }

    // c_{ij}, 1-based; throws IndexError out of range.
    int at(int i, int j) const;

    // Throws ValidationError naming the first violated invariant.
    void validate() const;

    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

  private:
    int n_ = 0;
    std::vector<int> entries_;  // row-major n*n
};

// Cartan matrix of a simple type in the numbering of the standard diagram
// tables (E-series: chain 1-3-4-5-...-n with node 2 attached to node 4).
// Valid ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
CartanMatrix load_preset(char series, int rank);

// "E6"-style name; throws ValidationError on anything unparsable.
CartanMatrix load_preset(std::string_view name);

// The Cartan number c_{ij} with range checks.
int cartan_number(const CartanMatrix& c, int i, int j);

/*
  Subset K of the node set [1..n]; its complement J indexes the length-1
  minimal representatives. Stored sorted and duplicate-free.
*/
class ParabolicSubset {
  public:
    ParabolicSubset() = default;
    explicit ParabolicSubset(std::vector<int> members);

    static ParabolicSubset complement_of(const std::vector<int>& excluded, int n);

    const std::vector<int>& members() const { return members_; }
    bool contains(int i) const;
    bool empty() const { return members_.empty(); }
    std::vector<int> complement(int n) const;

    friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

  private:
    std::vector<int> members_;
};

struct FlagSpec {
    CartanMatrix cartan;
    ParabolicSubset k_set;
    std::optional<std::string> name;

    // Matrix invariants plus K within [1..n].
    void validate() const;

    bool same_geometry(const FlagSpec& other) const {
        return cartan == other.cartan && k_set == other.k_set;
    }
};

}  // namespace schubert

#endif
