// Copyright 2026 The gridroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gridroute/grid_router.hpp"
#include "gridroute/json_io.hpp"
#include "gridroute/perm_families.hpp"
#include "gridroute/schedule.hpp"
#include "gridroute/svg_plot.hpp"
#include "gridroute/token_swap.hpp"
#include "gridroute/types.hpp"

namespace {

using namespace gridroute;

// Exit codes shared by the subcommands:
//   0 success; 1 internal failure (a schedule failed re-verification, or an
//   unexpected error); 2 malformed input or configuration; 3 input that
//   parses but is not a bijection (route only).
constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kVerifyFail = 1;
constexpr int kBadInput = 2;
constexpr int kNotBijection = 3;

std::pair<int, int> parse_grid_arg(const std::string& text) {
    const auto x = text.find('x');
    const auto parse_part = [&](std::string_view part) {
        int value = 0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, value);
        if (ec != std::errc{} || ptr != end || value < 1) {
            throw ParseError("grid size must look like MxN with positive "
                             "integers, got '" + text + "'");
        }
        return value;
    };
    if (x == std::string::npos) {
        throw ParseError("grid size must look like MxN, got '" + text + "'");
    }
    return {parse_part(std::string_view(text).substr(0, x)),
            parse_part(std::string_view(text).substr(x + 1))};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Computed {
    SwapSchedule schedule;
    std::string algorithm;
    long long time_us = 0;
};

// Runs the requested algorithm and reports the wall-clock time of schedule
// computation only. "local" is the full main procedure (transposed
// orientation and naive fallback included, per the options).
Computed compute_schedule(const Grid& grid, const Permutation& pi,
                          const std::string& algo, const RouteOptions& options) {
    Computed result;
    if (algo == "local") {
        RouteResult r = route(grid, pi, options);
        result.schedule = std::move(r.schedule);
        result.algorithm = std::move(r.algorithm);
        result.time_us = r.elapsed.count();
        return result;
    }
    const auto start = std::chrono::steady_clock::now();
    if (algo == "naive") {
        result.schedule = naive_grid_route(grid, pi);
    } else if (algo == "ats") {
        result.schedule = layerize(grid, token_swap(grid, pi));
    } else {
        throw InvalidSpecError("unknown algorithm '" + algo + "'");
    }
    if (options.compact) {
        result.schedule = compact_schedule(grid, result.schedule);
    }
    result.time_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    result.algorithm = algo;
    return result;
}

struct RouteArgs {
    std::string grid;
    std::string perm_path;
    std::string algo = "local";
    std::string out_path;
    bool no_transpose = false;
    bool no_fallback = false;
    bool compact = false;
};

int cmd_route(const RouteArgs& args) {
    try {
        const auto [m, n] = parse_grid_arg(args.grid);
        const Grid grid(m, n);
        const Permutation pi = load_permutation(args.perm_path);
        if (!(pi.grid() == grid)) {
            std::cerr << "error: '" << args.perm_path << "' is for a "
                      << pi.grid().rows() << "x" << pi.grid().cols()
                      << " grid, expected " << m << "x" << n << "\n";
            return kBadInput;
        }
        RouteOptions options;
        options.use_transpose = !args.no_transpose;
        options.naive_fallback = !args.no_fallback;
        options.compact = args.compact;
        const Computed result = compute_schedule(grid, pi, args.algo, options);

        const VerifyReport report = verify_schedule(grid, pi, result.schedule);
        if (!report.ok) {
            std::cerr << "internal error: computed schedule failed verification";
            if (report.first_mismatch) {
                std::cerr << " at (" << report.first_mismatch->row - 1 << ","
                          << report.first_mismatch->col - 1 << ")";
            }
            std::cerr << "\n";
            return kInternal;
        }
        write_text_atomic(args.out_path,
                          schedule_to_json(grid, result.algorithm, result.schedule));
        std::cout << "algorithm=" << result.algorithm
                  << " depth=" << result.schedule.depth()
                  << " swaps=" << result.schedule.swap_count()
                  << " time_us=" << result.time_us << " out=" << args.out_path
                  << "\n";
        return kOk;
    } catch (const InvalidPermutationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotBijection;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

struct VerifyArgs {
    std::string grid;
    std::string perm_path;
    std::string schedule_path;
};

int cmd_verify(const VerifyArgs& args) {
    try {
        const auto [m, n] = parse_grid_arg(args.grid);
        const Grid grid(m, n);
        const Permutation pi = load_permutation(args.perm_path);
        const LoadedSchedule loaded = load_schedule(args.schedule_path);
        if (!(pi.grid() == grid) || !(loaded.grid == grid)) {
            std::cerr << "error: grid mismatch between --grid and input files\n";
            return kBadInput;
        }
        VerifyReport report;
        try {
            report = verify_schedule(grid, pi, loaded.schedule);
        } catch (const InvalidLayerError& e) {
            std::cout << "fail: " << e.what() << "\n";
            return kVerifyFail;
        }
        if (!report.ok) {
            const Vertex v = report.first_mismatch.value_or(Vertex{1, 1});
            std::cout << "fail: first mismatch at (" << v.row - 1 << ","
                      << v.col - 1 << ")\n";
            return kVerifyFail;
        }
        std::cout << "ok: schedule realizes the permutation (depth "
                  << loaded.schedule.depth() << ", swaps "
                  << loaded.schedule.swap_count() << ")\n";
        return kOk;
    } catch (const GridRouteError& e) {
        // Parse failures and non-bijections both mean the inputs could not
        // be interpreted; for verify that is exit 2.
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

struct BenchArgs {
    std::string grids;
    std::string families;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string algos;
    std::string out_path;
    std::string plot_dir;
};

struct BenchmarkRow {
    int grid_m = 0;
    int grid_n = 0;
    std::string family;
    std::uint64_t seed = 0;
    std::string algorithm;
    int depth = 0;
    int depth_compacted = 0;
    std::size_t swaps = 0;
    long long time_us = 0;
};

int worker_count(std::size_t task_count) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned cap = hw;
    if (const char* env = std::getenv("GRIDROUTE_THREADS")) {
        int requested = 0;
        const std::string text(env);
        const auto* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, requested);
        if (ec == std::errc{} && ptr == end && requested >= 1) {
            cap = static_cast<unsigned>(requested);
        }
    }
    return static_cast<int>(std::min<std::size_t>(cap, std::max<std::size_t>(task_count, 1)));
}

double median(std::vector<double> values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return (values[mid - 1] + values[mid]) / 2.0;
}

int cmd_bench(const BenchArgs& args) {
    try {
        std::vector<std::pair<int, int>> grids;
        for (const auto& g : split_list(args.grids)) {
            const auto dims = parse_grid_arg(g);
            if (std::find(grids.begin(), grids.end(), dims) == grids.end()) {
                grids.push_back(dims);
            }
        }
        std::vector<FamilySpec> families;
        for (const auto& f : split_list(args.families)) {
            families.push_back(parse_family(f));
        }
        std::vector<std::string> algos = split_list(args.algos);
        for (const auto& a : algos) {
            if (a != "local" && a != "naive" && a != "ats") {
                throw InvalidSpecError("unknown algorithm '" + a +
                                       "' (expected local, naive, or ats)");
            }
        }
        if (grids.empty() || families.empty() || algos.empty() || args.trials < 1) {
            throw InvalidSpecError(
                "bench needs at least one grid, family, and algorithm, and "
                "trials must be positive");
        }

        struct Task {
            std::size_t grid_index;
            std::size_t family_index;
            std::uint64_t seed;
        };
        std::vector<Task> tasks;
        for (std::size_t gi = 0; gi < grids.size(); ++gi) {
            for (std::size_t fi = 0; fi < families.size(); ++fi) {
                for (int t = 0; t < args.trials; ++t) {
                    tasks.push_back(Task{gi, fi, args.seed + static_cast<std::uint64_t>(t)});
                }
            }
        }

        std::vector<std::vector<BenchmarkRow>> results(tasks.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::mutex error_mutex;
        std::string error_message;

        const auto run_task = [&](const Task& task, std::vector<BenchmarkRow>& rows) {
            const Grid grid(grids[task.grid_index].first,
                            grids[task.grid_index].second);
            FamilySpec spec = families[task.family_index];
            spec.seed = task.seed;
            const Permutation pi = generate(grid, spec);
            for (const auto& algo : algos) {
                const Computed result = compute_schedule(grid, pi, algo, RouteOptions{});
                const VerifyReport report = verify_schedule(grid, pi, result.schedule);
                if (!report.ok) {
                    throw std::runtime_error(
                        "schedule failed verification (algorithm " + algo +
                        ", grid " + std::to_string(grid.rows()) + "x" +
                        std::to_string(grid.cols()) + ", family " +
                        family_name(spec) + ", seed " + std::to_string(task.seed) + ")");
                }
                BenchmarkRow row;
                row.grid_m = grid.rows();
                row.grid_n = grid.cols();
                row.family = family_name(spec);
                row.seed = task.seed;
                row.algorithm = algo;
                row.depth = result.schedule.depth();
                row.depth_compacted = compact_schedule(grid, result.schedule).depth();
                row.swaps = result.schedule.swap_count();
                row.time_us = result.time_us;
                rows.push_back(std::move(row));
            }
        };

        const auto worker = [&]() {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t index = next.fetch_add(1);
                if (index >= tasks.size()) return;
                try {
                    run_task(tasks[index], results[index]);
                } catch (const std::exception& e) {
                    failed.store(true);
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (error_message.empty()) error_message = e.what();
                }
            }
        };

        const int workers = worker_count(tasks.size());
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (failed.load()) {
            std::cerr << "internal error: " << error_message << "\n";
            return kInternal;
        }

        std::vector<BenchmarkRow> rows;
        for (auto& part : results) {
            for (auto& row : part) rows.push_back(std::move(row));
        }
        std::sort(rows.begin(), rows.end(), [](const BenchmarkRow& a, const BenchmarkRow& b) {
            return std::tie(a.grid_m, a.grid_n, a.family, a.seed, a.algorithm) <
                   std::tie(b.grid_m, b.grid_n, b.family, b.seed, b.algorithm);
        });

        std::ostringstream csv;
        csv << "grid_m,grid_n,family,seed,algorithm,depth,depth_compacted,swaps,time_us\n";
        for (const auto& row : rows) {
            csv << row.grid_m << ',' << row.grid_n << ',' << row.family << ','
                << row.seed << ',' << row.algorithm << ',' << row.depth << ','
                << row.depth_compacted << ',' << row.swaps << ',' << row.time_us
                << '\n';
        }
        write_text_atomic(args.out_path, csv.str());

        if (!args.plot_dir.empty()) {
            std::filesystem::create_directories(args.plot_dir);
            std::vector<std::string> categories;
            categories.reserve(grids.size());
            for (const auto& [m, n] : grids) {
                categories.push_back(std::to_string(m) + "x" + std::to_string(n));
            }
            // series key: algorithm + family, in a deterministic order.
            std::vector<PlotSeries> depth_series;
            std::vector<PlotSeries> time_series;
            for (const auto& algo : algos) {
                for (const auto& family : families) {
                    const std::string fname = family_name(family);
                    PlotSeries depths{algo + " / " + fname, {}};
                    PlotSeries times{algo + " / " + fname, {}};
                    for (const auto& [m, n] : grids) {
                        std::vector<double> depth_vals;
                        std::vector<double> time_vals;
                        for (const auto& row : rows) {
                            if (row.grid_m == m && row.grid_n == n &&
                                row.family == fname && row.algorithm == algo) {
                                depth_vals.push_back(static_cast<double>(row.depth));
                                time_vals.push_back(static_cast<double>(row.time_us));
                            }
                        }
                        depths.values.push_back(median(std::move(depth_vals)));
                        times.values.push_back(median(std::move(time_vals)));
                    }
                    depth_series.push_back(std::move(depths));
                    time_series.push_back(std::move(times));
                }
            }
            const auto depth_path =
                (std::filesystem::path(args.plot_dir) / "depth.svg").string();
            const auto time_path =
                (std::filesystem::path(args.plot_dir) / "time.svg").string();
            write_text_atomic(depth_path,
                              render_line_chart("Median schedule depth by grid size",
                                                "grid size", "median depth",
                                                categories, depth_series,
                                                /*log_y=*/false));
            write_text_atomic(time_path,
                              render_line_chart("Median routing time by grid size",
                                                "grid size", "median time (us)",
                                                categories, time_series,
                                                /*log_y=*/true));
            std::cout << "plots: " << depth_path << " " << time_path << "\n";
        }

        std::cout << "rng=" << Rng::name() << " seed_base=" << args.seed
                  << " trials=" << args.trials << " rows=" << rows.size()
                  << " out=" << args.out_path << "\n";
        return kOk;
    } catch (const GridRouteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit routing on grid coupling graphs: route, verify, bench"};
    app.require_subcommand(1);

    RouteArgs route_args;
    CLI::App* route_cmd =
        app.add_subcommand("route", "Compute a swap schedule for a permutation");
    route_cmd->add_option("--grid", route_args.grid, "grid size MxN")->required();
    route_cmd->add_option("--perm", route_args.perm_path, "permutation JSON file")
        ->required();
    route_cmd
        ->add_option("--algo", route_args.algo,
                     "routing algorithm: local, naive, or ats")
        ->check(CLI::IsMember({"local", "naive", "ats"}));
    route_cmd->add_option("--out", route_args.out_path, "output schedule JSON file")
        ->required();
    route_cmd->add_flag("--no-transpose", route_args.no_transpose,
                        "skip the transposed-orientation attempt (local only)");
    route_cmd->add_flag("--no-fallback", route_args.no_fallback,
                        "skip the naive fallback (local only)");
    route_cmd->add_flag("--compact", route_args.compact,
                        "greedily merge layers before writing");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check that a schedule file realizes a permutation file");
    verify_cmd->add_option("--grid", verify_args.grid, "grid size MxN")->required();
    verify_cmd->add_option("--perm", verify_args.perm_path, "permutation JSON file")
        ->required();
    verify_cmd
        ->add_option("--schedule", verify_args.schedule_path, "schedule JSON file")
        ->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "Benchmark sweep over grids, families, seeds, and algorithms");
    bench_cmd->add_option("--grids", bench_args.grids, "comma list, e.g. 4x4,8x8")
        ->required();
    bench_cmd
        ->add_option("--families", bench_args.families,
                     "comma list: uniform, block_local[:HxW], "
                     "overlapping_block[:HxW[:S]], identity")
        ->required();
    bench_cmd->add_option("--trials", bench_args.trials, "seeds per (grid, family)")
        ->required();
    bench_cmd->add_option("--seed", bench_args.seed, "seed base")->required();
    bench_cmd->add_option("--algos", bench_args.algos, "comma list from local,naive,ats")
        ->required();
    bench_cmd->add_option("--out", bench_args.out_path, "output CSV file")->required();
    bench_cmd->add_option("--plot", bench_args.plot_dir,
                          "directory for depth.svg and time.svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // Help requests exit 0; anything else is a usage/config error.
        return code == 0 ? 0 : kBadInput;
    }

    if (route_cmd->parsed()) return cmd_route(route_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    return cmd_bench(bench_args);
}
