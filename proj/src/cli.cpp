#include "forbid/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forbid/baselines.hpp"
#include "forbid/errors.hpp"
#include "forbid/layout_io.hpp"
#include "forbid/metrics.hpp"
#include "forbid/overlap_scan.hpp"
#include "forbid/solver.hpp"
#include "forbid/svg.hpp"
#include "forbid/trace_io.hpp"

namespace forbid {

namespace fs = std::filesystem;

namespace {

enum class Algorithm { Forbid, ForbidPrime, Scaling };

Algorithm parse_algorithm(const std::string& name) {
    if (name == "forbid") return Algorithm::Forbid;
    if (name == "forbid-prime") return Algorithm::ForbidPrime;
    if (name == "scaling") return Algorithm::Scaling;
    throw CLI::ValidationError("--algorithm", "unknown algorithm '" + name + "'");
}

struct SolveOptions {
    double k = 1.0;
    double alpha = -2.0;
    double scale_step = 0.1;
    int max_iter = 30;
    std::uint64_t seed = 42;
};

SolverResult run_algorithm(Algorithm algo, const Layout& layout, const SolveOptions& o) {
    if (algo == Algorithm::Scaling) return scaling_baseline(layout, o.seed);
    SolverConfig config;
    config.variant = algo == Algorithm::Forbid ? Variant::Forbid : Variant::ForbidPrime;
    config.scale_step = o.scale_step;
    config.stress.alpha = o.alpha;
    config.stress.k = o.k;
    config.schedule.max_iterations = o.max_iter;
    config.seed = o.seed;
    return solve(layout, config);
}

LayoutFormat parse_format(const std::string& name) {
    return name == "agora" ? LayoutFormat::Agora : LayoutFormat::Native;
}

void add_solve_options(CLI::App* cmd, SolveOptions& o) {
    cmd->add_option("--k", o.k, "Exponent factor for overlapping pair weights")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "Weight distance exponent")->capture_default_str();
    cmd->add_option("--scale-step", o.scale_step, "Binary search precision on the scale")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iter", o.max_iter, "Iterations per optimization pass")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
}

// Metrics can legitimately fail on degenerate layouts; callers report that
// without aborting the run.
std::optional<MetricsReport> try_metrics(const Layout& a, const Layout& b, std::string* error) {
    try {
        return compute_metrics(a, b);
    } catch (const InputError& e) {
        if (error) *error = e.what();
        return std::nullopt;
    }
}

int cmd_remove(const fs::path& in, const fs::path& out_path, const std::string& algo_name,
               const SolveOptions& o, const std::string& trace_path, const std::string& report_path,
               LayoutFormat format) {
    const Algorithm algo = parse_algorithm(algo_name);
    const Layout layout = load_layout(in, format);
    const SolverResult result = run_algorithm(algo, layout, o);
    write_file(out_path, serialize_layout(result.layout));
    if (!trace_path.empty()) write_file(trace_path, write_trace_csv(result.trace));
    if (!report_path.empty()) {
        nlohmann::ordered_json doc;
        doc["algorithm"] = algo_name;
        doc["nodes"] = layout.size();
        doc["initial_overlaps"] = find_overlaps(layout).size();
        doc["final_overlaps"] = find_overlaps(result.layout).size();
        doc["final_scale"] = result.final_scale;
        doc["passes"] = result.passes;
        doc["iterations"] = result.trace.size();
        std::string error;
        if (const auto m = try_metrics(layout, result.layout, &error)) {
            doc["metrics"] = nlohmann::ordered_json::parse(metrics_json(*m));
        } else {
            doc["metrics"] = nullptr;
            doc["metrics_error"] = error;
        }
        write_file(report_path, doc.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_metrics(const fs::path& initial, const fs::path& final_path, const std::string& out_path,
                LayoutFormat format, std::ostream& out, std::ostream& err) {
    const Layout a = load_layout(initial, format);
    const Layout b = load_layout(final_path, format);
    const MetricsReport report = compute_metrics(a, b);
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    const std::string text = metrics_json(report);
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
    }
    return kExitOk;
}

int cmd_render(const fs::path& in, const fs::path& out_path, LayoutFormat format) {
    const Layout layout = load_layout(in, format);
    write_file(out_path, render_svg(layout, find_overlaps(layout)));
    return kExitOk;
}

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_bench(const fs::path& dir, const fs::path& out_path, const std::string& algorithms,
              const SolveOptions& o, LayoutFormat format, std::ostream& err) {
    if (!fs::is_directory(dir)) throw InputError("'" + dir.string() + "' is not a directory");
    const std::vector<std::string> names = split_list(algorithms);
    std::vector<Algorithm> algos;
    for (const auto& n : names) algos.push_back(parse_algorithm(n));
    if (algos.empty()) throw CLI::ValidationError("--algorithms", "no algorithm given");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::string csv = "graph,N,E,O,algorithm,oo_nni,sp_ch_a,gs_bb_iar,nm_dm_imse,el_rsdd,time_ms,final_scale\n";
    for (const auto& file : files) {
        const Layout layout = load_layout(file, format);
        const std::size_t initial_overlaps = find_overlaps(layout).size();
        for (std::size_t a = 0; a < algos.size(); ++a) {
            const auto t0 = std::chrono::steady_clock::now();
            const SolverResult result = run_algorithm(algos[a], layout, o);
            const auto t1 = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

            std::string error;
            const auto m = try_metrics(layout, result.layout, &error);
            if (!m) err << "warning: " << file.filename().string() << " / " << names[a] << ": " << error << '\n';
            const auto cell = [&](double MetricsReport::*field) {
                return m ? format_real((*m).*field) : std::string("nan");
            };
            csv += file.stem().string() + ',' + std::to_string(layout.size()) + ',' +
                   std::to_string(layout.edges.size()) + ',' + std::to_string(initial_overlaps) + ',' + names[a] +
                   ',' + cell(&MetricsReport::oo_nni) + ',' + cell(&MetricsReport::sp_ch_a) + ',' +
                   cell(&MetricsReport::gs_bb_iar) + ',' + cell(&MetricsReport::nm_dm_imse) + ',' +
                   cell(&MetricsReport::el_rsdd) + ',' + format_real(ms) + ',' + format_real(result.final_scale) +
                   '\n';
        }
    }
    write_file(out_path, csv);
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Overlap removal for graph layouts by stress optimization and upscaling", "forbid"};
    app.require_subcommand(1);

    std::string format_name = "native";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Input layout format")
            ->check(CLI::IsMember({"native", "agora"}))
            ->capture_default_str();
    };

    SolveOptions solve_opts;
    std::string in, out_file, algorithm = "forbid", trace, report, initial, final_file, dir, algorithms;
    algorithms = "forbid,forbid-prime,scaling";

    auto* remove = app.add_subcommand("remove", "Remove node overlaps from a layout");
    remove->add_option("--in", in, "Input layout")->required();
    remove->add_option("--out", out_file, "Output layout")->required();
    remove->add_option("--algorithm", algorithm, "forbid | forbid-prime | scaling")
        ->check(CLI::IsMember({"forbid", "forbid-prime", "scaling"}))
        ->capture_default_str();
    remove->add_option("--trace", trace, "Convergence trace CSV");
    remove->add_option("--report", report, "Run report JSON");
    add_solve_options(remove, solve_opts);
    add_format(remove);

    auto* metrics = app.add_subcommand("metrics", "Compare an initial and a final layout");
    metrics->add_option("--initial", initial, "Initial layout")->required();
    metrics->add_option("--final", final_file, "Overlap-free layout")->required();
    metrics->add_option("--out", out_file, "Report JSON (stdout when omitted)");
    add_format(metrics);

    auto* render = app.add_subcommand("render", "Draw a layout as SVG");
    render->add_option("--in", in, "Input layout")->required();
    render->add_option("--out", out_file, "Output SVG")->required();
    add_format(render);

    auto* bench = app.add_subcommand("bench", "Run algorithms on every layout in a directory");
    bench->add_option("--dir", dir, "Directory of layout files (*.json)")->required();
    bench->add_option("--out", out_file, "Output CSV")->required();
    bench->add_option("--algorithms", algorithms, "Comma separated algorithm list")->capture_default_str();
    add_solve_options(bench, solve_opts);
    add_format(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    const LayoutFormat format = parse_format(format_name);
    try {
        if (*remove) return cmd_remove(in, out_file, algorithm, solve_opts, trace, report, format);
        if (*metrics) return cmd_metrics(initial, final_file, out_file, format, out, err);
        if (*render) return cmd_render(in, out_file, format);
        if (*bench) return cmd_bench(dir, out_file, algorithms, solve_opts, format, err);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return kExitUsage;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace forbid
