#ifndef SCHUBERT_COSET_HPP
#define SCHUBERT_COSET_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "schubert/cartan.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/*
  One minimal coset representative: its stratum position (len, idx), the
  stored reduced decomposition (the first one admitted by the enumeration,
  which is the lexicographically least over admissible prefixes), and the
  fingerprints b(w), b(w^{-1}).
*/
struct CosetElement {
    int len = 0;
    int idx = 1;  // 1-based position within the stratum
    Word word;
    BVector b;
    BVector b_inv;
};

struct BVectorHash {
    size_t operator()(const BVector& v) const noexcept {
        size_t h = 1469598103934665603ull;
        for (Coord c : v) {
            h ^= static_cast<size_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct BuildOptions {
    std::optional<int> max_len;   // absent: run until the empty stratum
    int stratum_ceiling = 10000;  // guard against non-finite input
};

/*
  Length-stratified table of the minimal representatives, in enumeration
  order. Construction is sequential; a finished table is immutable and safe
  for concurrent readers.
*/
class CosetTable {
  public:
    CosetTable(FlagSpec spec) : spec_(std::move(spec)) {}

    const FlagSpec& spec() const { return spec_; }
    const CartanMatrix& cartan() const { return spec_.cartan; }

    bool complete() const { return complete_; }
    int top_length() const { return static_cast<int>(strata_.size()) - 1; }
    size_t total_size() const;

    const std::vector<std::vector<CosetElement>>& strata() const { return strata_; }
    const std::vector<CosetElement>& stratum(int len) const;  // DepthError past the build
    bool has_stratum(int len) const;

    // (len, idx) access; NotFoundError when absent.
    const CosetElement& at(int len, int idx) const;

    // Fingerprint lookup; nullptr when the vector is not in the table.
    const CosetElement* find_b(const BVector& b) const;

    // Any decomposition of an element resolves to its canonical entry.
    // NotFoundError explains whether the word is not minimal or out of depth.
    const CosetElement& lookup_word(const Word& w) const;

    // Used by the builder and the cache loader.
    void push_stratum(std::vector<CosetElement> stratum);
    void mark_complete(bool value) { complete_ = value; }

  private:
    FlagSpec spec_;
    std::vector<std::vector<CosetElement>> strata_;
    std::unordered_map<BVector, std::pair<int, int>, BVectorHash> index_;  // b -> (len, idx)
    bool complete_ = false;
};

// One step of the enumeration: all admissible sigma_i * prev products, in
// scan order (i ascending, previous stratum in stored order), deduplicated
// on b(w). prev must be stratum len-1 of the same spec.
std::vector<CosetElement> extend_stratum(const FlagSpec& spec,
                                         const std::vector<CosetElement>& prev);

CosetTable build_table(const FlagSpec& spec, const BuildOptions& options = {});

}  // namespace schubert

#endif
