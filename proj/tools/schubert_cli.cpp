#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "schubert/errors.hpp"
#include "schubert/fixtures.hpp"
#include "schubert/format.hpp"
#include "schubert/json_io.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

// ---------------------------------------------------------------------------
// flag-spec selection shared by coset / multiply / table

struct SpecOptions {
    std::string spec_file;
    std::string preset;
    std::optional<std::string> k_csv;
    std::optional<std::string> complement_csv;

    void attach(CLI::App* cmd) {
        cmd->add_option("--spec", spec_file, "flag-spec JSON file");
        cmd->add_option("--preset", preset, "Cartan-matrix preset, e.g. E6 or A3");
        auto* k = cmd->add_option("--K", k_csv,
                                  "comma-separated members of K (empty string for the full flag)");
        auto* c = cmd->add_option("--complement", complement_csv,
                                  "comma-separated complement of K");
        k->excludes(c);
    }

    FlagSpec resolve() const {
        if (!spec_file.empty() && !preset.empty())
            throw CLI::ValidationError("--spec and --preset are mutually exclusive");
        if (!spec_file.empty()) {
            if (k_csv || complement_csv)
                throw CLI::ValidationError("--K/--complement cannot override a spec file");
            return read_flag_spec_file(spec_file);
        }
        if (preset.empty())
            throw CLI::ValidationError("one of --spec or --preset is required");
        FlagSpec spec;
        spec.cartan = load_preset(preset);
        if (complement_csv) {
            spec.k_set = ParabolicSubset::complement_of(parse_csv(*complement_csv),
                                                        spec.cartan.rank());
        } else {
            spec.k_set = ParabolicSubset(k_csv ? parse_csv(*k_csv) : std::vector<int>{});
        }
        spec.validate();
        return spec;
    }

    static std::vector<int> parse_csv(const std::string& csv) {
        std::vector<int> out;
        size_t pos = 0;
        while (pos < csv.size()) {
            size_t comma = csv.find(',', pos);
            if (comma == std::string::npos) comma = csv.size();
            std::string token = csv.substr(pos, comma - pos);
            if (!token.empty()) out.push_back(std::stoi(token));
            pos = comma + 1;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// cached table construction

std::string default_cache_dir() {
    if (const char* env = std::getenv("SCHUBERT_CACHE_DIR")) return env;
    return ".schubert-cache";
}

std::string spec_cache_key(const FlagSpec& spec) {
    FlagSpec anon = spec;
    anon.name.reset();
    std::string canon = flag_spec_to_json(anon);
    std::uint64_t h = 1469598103934665603ull;
    for (char c : canon) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct BuildFlags {
    bool use_cache = false;
    std::string cache_dir = default_cache_dir();
    int max_strata = 10000;
};

CosetTable build_with_cache(const FlagSpec& spec, std::optional<int> max_len,
                            const BuildFlags& flags) {
    BuildOptions options;
    options.max_len = max_len;
    options.stratum_ceiling = flags.max_strata;

    auto deep_enough = [&](const CosetTable& t) {
        return t.complete() || (max_len && t.top_length() >= *max_len);
    };

    std::filesystem::path path;
    if (flags.use_cache) {
        path = std::filesystem::path(flags.cache_dir) / (spec_cache_key(spec) + ".json");
        if (std::filesystem::exists(path)) {
            CosetTable cached = read_cache_file(path.string(), spec);
            if (deep_enough(cached)) {
                std::cerr << "# cache: reused " << path.string() << "\n";
                return cached;
            }
            std::cerr << "# cache: too shallow, rebuilding\n";
        }
    }

    auto start = std::chrono::steady_clock::now();
    CosetTable table = build_table(spec, options);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "# built " << table.total_size() << " elements (top length "
              << table.top_length() << (table.complete() ? ", complete" : "") << ") in " << ms
              << " ms\n";

    if (flags.use_cache) {
        std::filesystem::create_directories(flags.cache_dir);
        write_cache_file(path.string(), table);
        std::cerr << "# cache: wrote " << path.string() << "\n";
    }
    return table;
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out.good()) throw IoError("cannot write '" + out_file + "'");
    out << text;
}

SelectMode parse_mode(const std::string& s) {
    if (s == "pruned") return SelectMode::pruned;
    if (s == "naive") return SelectMode::naive;
    throw CLI::ValidationError("unknown selection mode '" + s + "'");
}

// ---------------------------------------------------------------------------

int cmd_coset(const SpecOptions& spec_opts, std::optional<int> max_len,
              const std::string& format, const std::string& out_file, const BuildFlags& flags) {
    FlagSpec spec = spec_opts.resolve();
    CosetTable table = build_with_cache(spec, max_len, flags);
    int depth = max_len ? std::min(*max_len, table.top_length()) : table.top_length();
    switch (parse_output_format(format)) {
        case OutputFormat::text:
            emit(render_coset_text(table, depth), out_file);
            break;
        case OutputFormat::csv:
            emit(render_coset_csv(table, depth), out_file);
            break;
        case OutputFormat::json:
            emit(coset_table_to_json(table) + "\n", out_file);
            break;
    }
    return 0;
}

int cmd_multiply(const SpecOptions& spec_opts, const std::string& u_ref,
                 const std::string& v_ref, const std::string& w_ref, const std::string& format,
                 int jobs, const std::string& mode, const BuildFlags& flags) {
    FlagSpec spec = spec_opts.resolve();
    int depth = element_ref_length(spec.cartan, u_ref) + element_ref_length(spec.cartan, v_ref);
    if (!w_ref.empty()) depth = std::max(depth, element_ref_length(spec.cartan, w_ref));
    CosetTable table = build_with_cache(spec, depth, flags);
    const CosetElement& u = resolve_element(table, u_ref);
    const CosetElement& v = resolve_element(table, v_ref);
    SelectMode select = parse_mode(mode);

    auto start = std::chrono::steady_clock::now();
    if (!w_ref.empty()) {
        const CosetElement& w = resolve_element(table, w_ref);
        std::int64_t a = structure_constant(table, u, v, w, select);
        if (parse_output_format(format) == OutputFormat::json) {
            std::cout << "{\"u\":[" << u.len << "," << u.idx << "],\"v\":[" << v.len << ","
                      << v.idx << "],\"w\":[" << w.len << "," << w.idx << "],\"a\":" << a
                      << "}\n";
        } else {
            std::cout << a << "\n";
        }
    } else {
        ProductExpansion e = expand_product(table, u, v, jobs, select);
        switch (parse_output_format(format)) {
            case OutputFormat::text:
                std::cout << render_expansion_text(table, e);
                break;
            case OutputFormat::csv: {
                TableBlock block;
                block.degree = e.degree;
                for (const CosetElement& w : table.stratum(e.degree))
                    block.columns.emplace_back(w.len, w.idx);
                block.rows.push_back(e);
                std::cout << render_table_csv(block);
                break;
            }
            case OutputFormat::json:
                std::cout << expansion_to_json(e) << "\n";
                break;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "# multiplied in " << ms << " ms\n";
    return 0;
}

int cmd_table(const SpecOptions& spec_opts, int degree, const std::string& format, int jobs,
              const std::string& mode, const BuildFlags& flags) {
    FlagSpec spec = spec_opts.resolve();
    CosetTable table = build_with_cache(spec, degree, flags);
    auto start = std::chrono::steady_clock::now();
    TableBlock block = compute_table_block(table, degree, jobs, parse_mode(mode));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "# " << block.rows.size() << " products of degree " << degree << " in " << ms
              << " ms\n";
    switch (parse_output_format(format)) {
        case OutputFormat::text:
            std::cout << render_table_text(block);
            break;
        case OutputFormat::csv:
            std::cout << render_table_csv(block);
            break;
        case OutputFormat::json:
            std::cout << table_block_to_json(block) << "\n";
            break;
    }
    return 0;
}

int cmd_verify(const std::string& suite, int jobs) {
    bool ok = false;
    if (suite == "tables") {
        ok = verify::run_tables_suite([](const std::string& n) { return fixtures::get(n); },
                                      std::cout, jobs);
    } else if (suite == "grassmannian") {
        ok = verify::run_grassmannian_suite(std::cout);
    } else if (suite == "properties") {
        ok = verify::run_properties_suite(std::cout, jobs);
    } else {
        std::cerr << "unknown suite '" << suite
                  << "' (expected tables, grassmannian or properties)\n";
        return 2;
    }
    std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
    return ok ? 0 : 3;
}

int cmd_presets(const std::string& name) {
    if (name.empty()) {
        std::cout << "A<n>  n >= 1\n"
                  << "B<n>  n >= 2\n"
                  << "C<n>  n >= 3\n"
                  << "D<n>  n >= 4\n"
                  << "E6 E7 E8\n"
                  << "F4\n"
                  << "G2\n";
        return 0;
    }
    CartanMatrix c = load_preset(name);
    for (int i = 1; i <= c.rank(); ++i) {
        for (int j = 1; j <= c.rank(); ++j) {
            std::cout << (j > 1 ? " " : "") << c.at(i, j);
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert-class multiplication on flag manifolds G/H"};
    app.require_subcommand(1);
    int exit_code = 0;

    // coset ------------------------------------------------------------
    auto* coset = app.add_subcommand("coset", "enumerate minimal coset representatives");
    SpecOptions coset_spec;
    coset_spec.attach(coset);
    std::optional<int> coset_max_len;
    std::string coset_format = "text";
    std::string coset_out;
    BuildFlags coset_flags;
    coset->add_option("--max-length", coset_max_len, "stop after this length (default: full)");
    coset->add_option("--format", coset_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    coset->add_option("--out", coset_out, "write output to a file");
    coset->add_flag("--cache", coset_flags.use_cache, "reuse/write a table cache");
    coset->add_option("--cache-dir", coset_flags.cache_dir,
                      "cache directory (default $SCHUBERT_CACHE_DIR or .schubert-cache)");
    coset->add_option("--max-strata", coset_flags.max_strata,
                      "abort enumeration past this many strata")
        ->capture_default_str();
    coset->callback([&] {
        exit_code = cmd_coset(coset_spec, coset_max_len, coset_format, coset_out, coset_flags);
    });

    // multiply ----------------------------------------------------------
    auto* multiply =
        app.add_subcommand("multiply", "expand a product of two Schubert classes");
    SpecOptions mult_spec;
    mult_spec.attach(multiply);
    std::string mult_u, mult_v, mult_w;
    std::string mult_format = "text";
    std::string mult_mode = "pruned";
    int mult_jobs = 0;
    BuildFlags mult_flags;
    multiply->add_option("u", mult_u, "first factor: r.i index, dot-word, or w:word")
        ->required();
    multiply->add_option("v", mult_v, "second factor")->required();
    multiply->add_option("--w", mult_w, "single target class: print one coefficient");
    multiply->add_option("--format", mult_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    multiply->add_option("--jobs", mult_jobs, "worker threads (0 = all cores)");
    multiply->add_option("--select", mult_mode, "subword scan: pruned or naive")
        ->check(CLI::IsMember({"pruned", "naive"}))
        ->capture_default_str();
    multiply->add_flag("--cache", mult_flags.use_cache, "reuse/write a table cache");
    multiply->add_option("--cache-dir", mult_flags.cache_dir, "cache directory");
    multiply->add_option("--max-strata", mult_flags.max_strata, "stratum ceiling");
    multiply->callback([&] {
        exit_code = cmd_multiply(mult_spec, mult_u, mult_v, mult_w, mult_format, mult_jobs,
                                 mult_mode, mult_flags);
    });

    // table --------------------------------------------------------------
    auto* table = app.add_subcommand("table", "full multiplication table of one degree");
    SpecOptions table_spec;
    table_spec.attach(table);
    int table_degree = 0;
    std::string table_format = "text";
    std::string table_mode = "pruned";
    int table_jobs = 0;
    BuildFlags table_flags;
    table->add_option("--degree", table_degree, "total degree l(u)+l(v)")->required();
    table->add_option("--format", table_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    table->add_option("--jobs", table_jobs, "worker threads (0 = all cores)");
    table->add_option("--select", table_mode, "subword scan: pruned or naive")
        ->check(CLI::IsMember({"pruned", "naive"}))
        ->capture_default_str();
    table->add_flag("--cache", table_flags.use_cache, "reuse/write a table cache");
    table->add_option("--cache-dir", table_flags.cache_dir, "cache directory");
    table->add_option("--max-strata", table_flags.max_strata, "stratum ceiling");
    table->callback([&] {
        exit_code =
            cmd_table(table_spec, table_degree, table_format, table_jobs, table_mode, table_flags);
    });

    // verify ---------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int verify_jobs = 0;
    verify_cmd->add_option("suite", suite, "tables, grassmannian or properties")->required();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads (0 = all cores)");
    verify_cmd->callback([&] { exit_code = cmd_verify(suite, verify_jobs); });

    // presets ----------------------------------------------------------------
    auto* presets = app.add_subcommand("presets", "list presets or print one matrix");
    std::string preset_name;
    presets->add_option("name", preset_name, "preset to print, e.g. E6");
    presets->callback([&] { exit_code = cmd_presets(preset_name); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
