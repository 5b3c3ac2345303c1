#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wrp/errors.hpp"
#include "wrp/graph.hpp"
#include "wrp/partition.hpp"
#include "wrp/report.hpp"
#include "wrp/spectra.hpp"
#include "wrp/version.hpp"
#include "wrp/weight_partition.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitResource = 2;

struct CommonFlags {
    wrp::AnalysisOptions opt;
    bool json = false;
    std::string output;
};

void add_tolerance_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tol-eig", flags.opt.tol.eig_group,
                    "Eigenvalue grouping tolerance (relative)");
    cmd->add_option("--tol-wr", flags.opt.tol.weight_regular,
                    "Weight-regularity tolerance (relative)");
    cmd->add_option("--tol-hoffman", flags.opt.tol.hoffman,
                    "Bound-attainment tolerance (absolute)");
    cmd->add_flag("--json", flags.json, "Emit a JSON report");
    cmd->add_flag_function(
        "--no-timestamp", [&flags](std::int64_t) { flags.opt.include_timestamp = false; },
        "Omit the timestamp field (byte-stable output)");
    cmd->add_option("-o,--output", flags.output, "Write the report to a file instead of stdout");
}

void emit(const wrp::Json& report, const CommonFlags& flags) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!flags.output.empty()) {
        file.open(flags.output);
        if (!file) throw wrp::validation_error("cannot open output file: " + flags.output);
        out = &file;
    }
    if (flags.json) {
        *out << report.dump(2) << '\n';
        return;
    }
    // compact text rendering: top-level scalars per section
    for (const auto& [section, value] : report.items()) {
        if (!value.is_object()) {
            *out << section << ": " << value.dump() << '\n';
            continue;
        }
        *out << "[" << section << "]\n";
        for (const auto& [key, field] : value.items()) {
            if (field.is_object() || (field.is_array() && field.size() > 16)) continue;
            *out << "  " << key << " = " << field.dump() << '\n';
        }
    }
}

std::vector<fs::path> collect_edge_lists(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".el")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw wrp::validation_error("directory contains no .el edge lists: " + dir.string());
    return files;
}

int run_analyze(const std::string& graph_path, const std::string& partition_path,
                const CommonFlags& flags, unsigned jobs) {
    if (fs::is_directory(graph_path)) {
        if (!partition_path.empty())
            throw wrp::validation_error("batch mode does not accept a partition file");
        const auto files = collect_edge_lists(graph_path);
        std::vector<std::future<wrp::Json>> pending;
        std::vector<wrp::Json> reports(files.size());
        const unsigned workers = std::max(1u, jobs);
        for (std::size_t start = 0; start < files.size(); start += workers) {
            const std::size_t stop = std::min(files.size(), start + workers);
            for (std::size_t i = start; i < stop; ++i)
                pending.push_back(std::async(std::launch::async, [&, i] {
                    wrp::Graph g = wrp::load_edge_list_file(files[i].string());
                    wrp::Json r = wrp::analyze_graph(g, std::nullopt, flags.opt);
                    r["input"] = files[i].filename().string();
                    return r;
                }));
            for (std::size_t i = start; i < stop; ++i)
                reports[i] = pending[i - start].get();
            pending.clear();
        }
        wrp::Json batch = wrp::Json::array();
        for (auto& r : reports) batch.push_back(std::move(r));
        emit(batch, flags);
        return kExitOk;
    }

    wrp::Graph g = wrp::load_edge_list_file(graph_path);
    std::optional<wrp::VertexPartition> p;
    if (!partition_path.empty())
        p = wrp::load_partition_file(partition_path, g.vertex_count());
    emit(wrp::analyze_graph(g, p, flags.opt), flags);
    return kExitOk;
}

int run_refine(const std::string& graph_path, const std::string& partition_path,
               const CommonFlags& flags) {
    wrp::Graph g = wrp::load_edge_list_file(graph_path);
    if (!wrp::is_connected(g))
        throw wrp::domain_error("Perron vector requires connected graph");
    const auto s = wrp::eigendecompose(g, flags.opt.tol.eig_group);
    const auto nu = wrp::perron_vector(g, s);
    const wrp::VertexPartition seed =
        partition_path.empty() ? wrp::VertexPartition::trivial(g.vertex_count())
                               : wrp::load_partition_file(partition_path, g.vertex_count());
    const auto refined = wrp::coarsest_weight_regular_refinement(
        g, nu, seed, flags.opt.tol.weight_regular);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!flags.output.empty()) {
        file.open(flags.output);
        if (!file) throw wrp::validation_error("cannot open output file: " + flags.output);
        out = &file;
    }
    wrp::save_partition(refined, *out);
    return kExitOk;
}

int run_hoffman(const std::string& graph_path, const CommonFlags& flags) {
    wrp::Graph g = wrp::load_edge_list_file(graph_path);
    emit(wrp::hoffman_report(g, flags.opt), flags);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perron-weighted partition and chromatic-bound analyzer"};
    app.set_version_flag("--version", std::string(wrp::k_version));
    app.require_subcommand(1);

    std::string graph_path, partition_path;
    unsigned jobs = 1;

    CommonFlags analyze_flags;
    auto* analyze = app.add_subcommand(
        "analyze", "Spectrum, weighted partition analysis and chromatic audit");
    analyze->add_option("graph", graph_path, "Edge-list file, or a directory of .el files")
        ->required();
    analyze->add_option("partition", partition_path, "Optional partition file");
    add_tolerance_flags(analyze, analyze_flags);
    analyze->add_option("--chi-cap", analyze_flags.opt.chi_cap,
                        "Largest n for the exact chromatic number");
    analyze->add_flag("--enumerate", analyze_flags.opt.enumerate_optimal,
                      "Enumerate optimal colorings (uniqueness check)");
    analyze->add_flag("--force", analyze_flags.opt.force_chromatic,
                      "Run the chromatic solver past the cap");
    analyze->add_option("--jobs", jobs, "Parallel analyses in batch mode");

    CommonFlags refine_flags;
    auto* refine = app.add_subcommand(
        "refine", "Coarsest weight-regular refinement (partition file to stdout)");
    refine->add_option("graph", graph_path, "Edge-list file")->required();
    refine->add_option("partition", partition_path, "Seed partition (default: one class)");
    add_tolerance_flags(refine, refine_flags);

    CommonFlags hoffman_flags;
    auto* hoffman = app.add_subcommand("hoffman", "Chromatic bound audit only");
    hoffman->add_option("graph", graph_path, "Edge-list file")->required();
    add_tolerance_flags(hoffman, hoffman_flags);
    hoffman->add_option("--chi-cap", hoffman_flags.opt.chi_cap,
                        "Largest n for the exact chromatic number");
    hoffman->add_flag("--enumerate", hoffman_flags.opt.enumerate_optimal,
                      "Enumerate optimal colorings (uniqueness check)");
    hoffman->add_flag("--force", hoffman_flags.opt.force_chromatic,
                      "Run the chromatic solver past the cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(graph_path, partition_path, analyze_flags, jobs);
        if (refine->parsed()) return run_refine(graph_path, partition_path, refine_flags);
        if (hoffman->parsed()) return run_hoffman(graph_path, hoffman_flags);
    } catch (const wrp::resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const wrp::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const wrp::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
