#include "schubert/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "schubert/errors.hpp"

namespace schubert {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FlagSpec flag_spec_from(const json& j) {
    if (!j.is_object()) throw IoError("flag spec must be a JSON object");
    FlagSpec spec;
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    if (j.contains("preset")) {
        spec.cartan = load_preset(j.at("preset").get<std::string>());
    } else {
        int n = j.at("n").get<int>();
        auto rows = j.at("cartan").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(rows.size()) != n)
            throw IoError("cartan row count does not match n");
        std::vector<int> entries;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw IoError("cartan column count does not match n");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        spec.cartan = CartanMatrix(n, std::move(entries));
    }
    spec.k_set = ParabolicSubset(j.value("K", std::vector<int>{}));
    spec.validate();
    return spec;
}

json flag_spec_json(const FlagSpec& spec) {
    json j;
    if (spec.name) j["name"] = *spec.name;
    int n = spec.cartan.rank();
    j["n"] = n;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row;
        for (int c = 1; c <= n; ++c) row.push_back(spec.cartan.at(i, c));
        rows.push_back(std::move(row));
    }
    j["cartan"] = rows;
    j["K"] = spec.k_set.members();
    return j;
}

json expansion_json(const ProductExpansion& e) {
    json row;
    row["u"] = {e.u_ref.first, e.u_ref.second};
    row["v"] = {e.v_ref.first, e.v_ref.second};
    json coeffs = json::array();
    for (size_t j = 0; j < e.coeffs.size(); ++j) {
        coeffs.push_back({{"w", {e.degree, static_cast<int>(j + 1)}}, {"a", e.coeffs[j]}});
    }
    row["coeffs"] = coeffs;
    return row;
}

ProductExpansion expansion_from(const json& row) {
    ProductExpansion e;
    auto u = row.at("u").get<std::vector<int>>();
    auto v = row.at("v").get<std::vector<int>>();
    if (u.size() != 2 || v.size() != 2) throw IoError("element references must be [len, idx]");
    e.u_ref = {u[0], u[1]};
    e.v_ref = {v[0], v[1]};
    e.degree = u[0] + v[0];
    for (const auto& c : row.at("coeffs")) {
        auto w = c.at("w").get<std::vector<int>>();
        if (w.size() != 2 || w[0] != e.degree) throw IoError("coefficient target out of stratum");
        if (w[1] != static_cast<int>(e.coeffs.size()) + 1)
            throw IoError("coefficients must be listed in stratum order");
        e.coeffs.push_back(c.at("a").get<std::int64_t>());
    }
    return e;
}

}  // namespace

FlagSpec flag_spec_from_json(const std::string& text) { return flag_spec_from(parse(text)); }

FlagSpec read_flag_spec_file(const std::string& path) {
    return flag_spec_from_json(read_file(path));
}

std::string flag_spec_to_json(const FlagSpec& spec) { return flag_spec_json(spec).dump(2); }

std::string coset_table_to_json(const CosetTable& table) {
    json j;
    j["spec"] = flag_spec_json(table.spec());
    j["complete"] = table.complete();
    json strata = json::array();
    for (const auto& stratum : table.strata()) {
        json s = json::array();
        for (const CosetElement& e : stratum) {
            s.push_back({{"idx", e.idx},
                         {"word", e.word},
                         {"b", e.b},
                         {"b_inv", e.b_inv}});
        }
        strata.push_back(std::move(s));
    }
    j["strata"] = std::move(strata);
    return j.dump();
}

CosetTable coset_table_from_json(const std::string& text) {
    json j = parse(text);
    FlagSpec spec = flag_spec_from(j.at("spec"));
    CosetTable table(spec);
    int len = 0;
    for (const auto& s : j.at("strata")) {
        std::vector<CosetElement> stratum;
        for (const auto& e : s) {
            CosetElement el;
            el.len = len;
            el.idx = e.at("idx").get<int>();
            el.word = e.at("word").get<Word>();
            el.b = e.at("b").get<BVector>();
            el.b_inv = e.at("b_inv").get<BVector>();
            if (static_cast<int>(el.word.size()) != len)
                throw IoError("cached word length does not match its stratum");
            if (el.idx != static_cast<int>(stratum.size()) + 1)
                throw IoError("cached stratum indices must be consecutive");
            // recompute both fingerprints rather than trusting the file
            if (b_of_word(spec.cartan, el.word) != el.b ||
                b_of_inverse(spec.cartan, el.word) != el.b_inv)
                throw IoError("cached fingerprints do not match their word");
            stratum.push_back(std::move(el));
        }
        table.push_stratum(std::move(stratum));
        ++len;
    }
    table.mark_complete(j.at("complete").get<bool>());
    return table;
}

void write_cache_file(const std::string& path, const CosetTable& table) {
    std::ofstream out(path);
    if (!out.good()) throw IoError("cannot write '" + path + "'");
    out << coset_table_to_json(table);
    if (!out.good()) throw IoError("failed writing '" + path + "'");
}

CosetTable read_cache_file(const std::string& path, const FlagSpec& expected) {
    CosetTable table = coset_table_from_json(read_file(path));
    if (!table.spec().same_geometry(expected))
        throw CacheMismatchError("cache '" + path + "' was built from a different flag spec");
    return table;
}

std::string expansion_to_json(const ProductExpansion& e) { return expansion_json(e).dump(); }

ProductExpansion expansion_from_json(const std::string& text) {
    return expansion_from(parse(text));
}

std::string table_block_to_json(const TableBlock& block) {
    json j;
    j["degree"] = block.degree;
    json cols = json::array();
    for (auto [len, idx] : block.columns) cols.push_back({len, idx});
    j["columns"] = std::move(cols);
    json rows = json::array();
    for (const auto& row : block.rows) rows.push_back(expansion_json(row));
    j["rows"] = std::move(rows);
    return j.dump();
}

TableBlock table_block_from_json(const std::string& text) {
    json j = parse(text);
    TableBlock block;
    block.degree = j.at("degree").get<int>();
    for (const auto& c : j.at("columns")) {
        auto ref = c.get<std::vector<int>>();
        if (ref.size() != 2) throw IoError("column references must be [len, idx]");
        block.columns.emplace_back(ref[0], ref[1]);
    }
    for (const auto& row : j.at("rows")) block.rows.push_back(expansion_from(row));
    return block;
}

}  // namespace schubert
