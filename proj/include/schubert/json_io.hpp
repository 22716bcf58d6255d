#ifndef SCHUBERT_JSON_IO_HPP
#define SCHUBERT_JSON_IO_HPP

#include <string>

#include "schubert/coset.hpp"
#include "schubert/format.hpp"
#include "schubert/product.hpp"

namespace schubert {

/*
  File formats:

  flag spec   {"name"?: str, "n": int, "cartan": [[int]], "K": [int]}
              or {"name"?: str, "preset": "E6", "K": [int]}
  coset cache {"spec": <flag spec>, "complete": bool,
               "strata": [[{"idx": int, "word": [int], "b": [int],
                            "b_inv": [int]}]]}
  expansion   {"u": [r,i], "v": [r,i], "coeffs": [{"w": [k,j], "a": int}]}
  table       {"degree": d, "columns": [[k,j]],
               "rows": [<expansion>]}
*/

FlagSpec flag_spec_from_json(const std::string& text);
FlagSpec read_flag_spec_file(const std::string& path);
std::string flag_spec_to_json(const FlagSpec& spec);

std::string coset_table_to_json(const CosetTable& table);
CosetTable coset_table_from_json(const std::string& text);
void write_cache_file(const std::string& path, const CosetTable& table);

// Loads and re-validates a cached table; CacheMismatchError when the cached
// spec differs from `expected` (the cache remembers what it was built from).
CosetTable read_cache_file(const std::string& path, const FlagSpec& expected);

std::string expansion_to_json(const ProductExpansion& e);
ProductExpansion expansion_from_json(const std::string& text);

std::string table_block_to_json(const TableBlock& block);
TableBlock table_block_from_json(const std::string& text);

}  // namespace schubert

#endif
