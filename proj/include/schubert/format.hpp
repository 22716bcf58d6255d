#ifndef SCHUBERT_FORMAT_HPP
#define SCHUBERT_FORMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/coset.hpp"
#include "schubert/product.hpp"

namespace schubert {

enum class OutputFormat { text, csv, json };

OutputFormat parse_output_format(const std::string& s);

// "w_{r,i}"
std::string element_label(int len, int idx);

/*
  Element references on the command line: "r.i" (exactly two dot-separated
  integers) names the i-th element of stratum r; anything else is a dot-word;
  a "w:" prefix forces the word reading (needed for two-letter words, which
  would otherwise parse as stratum indices).
*/
const CosetElement& resolve_element(const CosetTable& table, const std::string& ref);

// Length needed to look the reference up (stratum index r, or the word's
// exact length). Used to size the table before resolving.
int element_ref_length(const CartanMatrix& c, const std::string& ref);

// One row per element through max_len: "w_{r,i}  <dot-word>".
std::string render_coset_text(const CosetTable& table, int max_len);
std::string render_coset_csv(const CosetTable& table, int max_len);

/*
  A degree-d multiplication block: every pair (u, v) with l(u)+l(v) = d and
  0 < l(u) <= l(v) (u then v ascending; for equal lengths only idx_u <= idx_v),
  expanded over stratum d. Degree 0 is the single row (id, id).
*/
struct TableBlock {
    int degree = 0;
    std::vector<std::pair<int, int>> columns;  // stratum-d labels
    std::vector<ProductExpansion> rows;
};

TableBlock compute_table_block(const CosetTable& table, int degree, int jobs = 1,
                               SelectMode mode = SelectMode::pruned);

std::string render_table_text(const TableBlock& block);
std::string render_table_csv(const TableBlock& block);
std::string render_expansion_text(const CosetTable& table, const ProductExpansion& e);

}  // namespace schubert

#endif
