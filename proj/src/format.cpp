#include "schubert/format.hpp"

#include "schubert/errors.hpp"

namespace schubert {

OutputFormat parse_output_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ValidationError("unknown format '" + s + "' (expected text, csv or json)");
}

std::string element_label(int len, int idx) {
    return "w_{" + std::to_string(len) + "," + std::to_string(idx) + "}";
}

namespace {

bool parse_stratum_ref(const std::string& ref, int& len, int& idx) {
    size_t dot = ref.find('.');
    if (dot == std::string::npos || ref.find('.', dot + 1) != std::string::npos) return false;
    if (dot == 0 || dot + 1 == ref.size()) return false;
    len = 0;
    idx = 0;
    for (size_t i = 0; i < dot; ++i) {
        if (ref[i] < '0' || ref[i] > '9') return false;
        len = len * 10 + (ref[i] - '0');
    }
    for (size_t i = dot + 1; i < ref.size(); ++i) {
        if (ref[i] < '0' || ref[i] > '9') return false;
        idx = idx * 10 + (ref[i] - '0');
    }
    return idx >= 1;
}

}  // namespace

int element_ref_length(const CartanMatrix& c, const std::string& ref) {
    if (ref.rfind("w:", 0) == 0) return length(c, parse_word(ref.substr(2), c.rank()));
    int len = 0, idx = 0;
    if (parse_stratum_ref(ref, len, idx)) return len;
    return length(c, parse_word(ref, c.rank()));
}

const CosetElement& resolve_element(const CosetTable& table, const std::string& ref) {
    const CartanMatrix& c = table.cartan();
    if (ref.rfind("w:", 0) == 0) return table.lookup_word(parse_word(ref.substr(2), c.rank()));
    int len = 0, idx = 0;
    if (parse_stratum_ref(ref, len, idx)) return table.at(len, idx);
    return table.lookup_word(parse_word(ref, c.rank()));
}

std::string render_coset_text(const CosetTable& table, int max_len) {
    std::string out;
    for (int len = 0; len <= max_len && table.has_stratum(len); ++len) {
        for (const CosetElement& e : table.stratum(len)) {
            out += element_label(e.len, e.idx);
            out += "  ";
            out += word_to_string(e.word);
            out += "\n";
        }
    }
    return out;
}

std::string render_coset_csv(const CosetTable& table, int max_len) {
    std::string out = "element,word\n";
    for (int len = 0; len <= max_len && table.has_stratum(len); ++len) {
        for (const CosetElement& e : table.stratum(len)) {
            out += element_label(e.len, e.idx);
            out += ",";
            out += word_to_string(e.word);
            out += "\n";
        }
    }
    return out;
}

TableBlock compute_table_block(const CosetTable& table, int degree, int jobs, SelectMode mode) {
    if (degree < 0) throw ValidationError("degree must be nonnegative");
    const auto& targets = table.stratum(degree);  // DepthError when missing
    TableBlock block;
    block.degree = degree;
    for (const CosetElement& w : targets) block.columns.emplace_back(w.len, w.idx);
    if (degree == 0) {
        block.rows.push_back(expand_product(table, table.at(0, 1), table.at(0, 1), jobs, mode));
        return block;
    }
    for (int lu = 1; 2 * lu <= degree; ++lu) {
        int lv = degree - lu;
        if (!table.has_stratum(lu) || !table.has_stratum(lv)) continue;
        for (const CosetElement& u : table.stratum(lu)) {
            for (const CosetElement& v : table.stratum(lv)) {
                if (lu == lv && v.idx < u.idx) continue;
                block.rows.push_back(expand_product(table, u, v, jobs, mode));
            }
        }
    }
    return block;
}

namespace {

std::string row_label(const ProductExpansion& e) {
    return element_label(e.u_ref.first, e.u_ref.second) + " " +
           element_label(e.v_ref.first, e.v_ref.second);
}

}  // namespace

std::string render_table_text(const TableBlock& block) {
    std::string out = "# u v |";
    for (auto [len, idx] : block.columns) out += " " + element_label(len, idx);
    out += "\n";
    for (const ProductExpansion& row : block.rows) {
        out += row_label(row) + " |";
        for (auto a : row.coeffs) out += " " + std::to_string(a);
        out += "\n";
    }
    return out;
}

std::string render_table_csv(const TableBlock& block) {
    std::string out = "u,v";
    for (auto [len, idx] : block.columns) out += "," + element_label(len, idx);
    out += "\n";
    for (const ProductExpansion& row : block.rows) {
        out += element_label(row.u_ref.first, row.u_ref.second) + "," +
               element_label(row.v_ref.first, row.v_ref.second);
        for (auto a : row.coeffs) out += "," + std::to_string(a);
        out += "\n";
    }
    return out;
}

std::string render_expansion_text(const CosetTable& table, const ProductExpansion& e) {
    TableBlock block;
    block.degree = e.degree;
    for (const CosetElement& w : table.stratum(e.degree))
        block.columns.emplace_back(w.len, w.idx);
    block.rows.push_back(e);
    return render_table_text(block);
}

}  // namespace schubert
