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

// End-to-end tests of the gridroute binary: exit codes, file formats, CSV
// shape, reproducibility. The binary path is injected via GRIDROUTE_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gridroute/json_io.hpp"
#include "gridroute/perm_families.hpp"
#include "gridroute/schedule.hpp"
#include "gridroute/types.hpp"

namespace fs = std::filesystem;
using namespace gridroute;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

// Scratch directory cleaned up when the test ends.
struct Scratch {
    fs::path dir;

    Scratch() {
        dir = fs::temp_directory_path() /
              ("gridroute_cli_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    fs::path file(const std::string& name) const { return dir / name; }

    static int& counter() {
        static int value = 0;
        return value;
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

RunResult run_cli(const Scratch& scratch, const std::string& args) {
    const fs::path capture = scratch.dir / "capture.txt";
    const std::string command = std::string(GRIDROUTE_CLI_PATH) + " " + args +
                                " > \"" + capture.string() + "\" 2>&1";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.output = slurp(capture);
    return result;
}

fs::path write_perm(const Scratch& scratch, const std::string& name,
                    const Permutation& pi) {
    const fs::path path = scratch.file(name);
    write_text_atomic(path.string(), permutation_to_json(pi));
    return path;
}

Permutation uniform_perm(const Grid& g, std::uint64_t seed) {
    FamilySpec spec;
    spec.kind = FamilyKind::uniform;
    spec.seed = seed;
    return generate(g, spec);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv_row(const std::string& row) {
    std::vector<std::string> fields;
    std::istringstream in(row);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

std::string strip_last_field(const std::string& row) {
    const auto pos = row.rfind(',');
    return pos == std::string::npos ? row : row.substr(0, pos);
}

const std::string kCsvHeader =
    "grid_m,grid_n,family,seed,algorithm,depth,depth_compacted,swaps,time_us";

}  // namespace

TEST_CASE("route on the identity produces an empty schedule") {
    Scratch scratch;
    const Grid g(3, 3);
    std::vector<int> dest(9);
    for (int v = 0; v < 9; ++v) dest[v] = v;
    const fs::path perm = write_perm(scratch, "perm.json", Permutation(g, dest));
    const fs::path out = scratch.file("schedule.json");

    const RunResult r = run_cli(scratch, "route --grid 3x3 --perm \"" +
                                             perm.string() + "\" --algo local --out \"" +
                                             out.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("depth=0") != std::string::npos);

    const LoadedSchedule loaded = load_schedule(out.string());
    CHECK(loaded.schedule.depth() == 0);
    CHECK(loaded.grid == g);
}

TEST_CASE("route output for every algorithm passes the verify subcommand") {
    Scratch scratch;
    const Grid g(8, 8);
    const fs::path perm = write_perm(scratch, "perm.json", uniform_perm(g, 5));
    for (const std::string algo : {"local", "naive", "ats"}) {
        const fs::path out = scratch.file("schedule_" + algo + ".json");
        const RunResult routed =
            run_cli(scratch, "route --grid 8x8 --perm \"" + perm.string() +
                                 "\" --algo " + algo + " --out \"" + out.string() + "\"");
        CHECK_MESSAGE(routed.exit_code == 0, algo, ": ", routed.output);

        const RunResult verified =
            run_cli(scratch, "verify --grid 8x8 --perm \"" + perm.string() +
                                 "\" --schedule \"" + out.string() + "\"");
        CHECK_MESSAGE(verified.exit_code == 0, algo, ": ", verified.output);
        CHECK(verified.output.rfind("ok:", 0) == 0);
    }
}

TEST_CASE("route with --compact still verifies") {
    Scratch scratch;
    const Grid g(4, 4);
    const fs::path perm = write_perm(scratch, "perm.json", uniform_perm(g, 11));
    const fs::path out = scratch.file("schedule.json");
    const RunResult routed =
        run_cli(scratch, "route --grid 4x4 --perm \"" + perm.string() +
                             "\" --algo local --compact --out \"" + out.string() + "\"");
    CHECK(routed.exit_code == 0);
    const RunResult verified =
        run_cli(scratch, "verify --grid 4x4 --perm \"" + perm.string() +
                             "\" --schedule \"" + out.string() + "\"");
    CHECK(verified.exit_code == 0);
}

TEST_CASE("route rejects a non-bijective permutation with exit 3") {
    Scratch scratch;
    const fs::path perm = scratch.file("perm.json");
    spit(perm, R"({"rows": 2, "cols": 2, "perm": [0, 0, 1, 2]})");
    const RunResult r =
        run_cli(scratch, "route --grid 2x2 --perm \"" + perm.string() +
                             "\" --algo local --out \"" +
                             scratch.file("out.json").string() + "\"");
    CHECK(r.exit_code == 3);
}

TEST_CASE("route rejects malformed input with exit 2") {
    Scratch scratch;
    const fs::path perm = scratch.file("perm.json");
    spit(perm, R"({"rows": 2, "cols")");
    const std::string out = scratch.file("out.json").string();
    CHECK(run_cli(scratch, "route --grid 2x2 --perm \"" + perm.string() +
                               "\" --algo local --out \"" + out + "\"")
              .exit_code == 2);
    CHECK(run_cli(scratch, "route --grid 2x2 --perm \"" +
                               scratch.file("missing.json").string() +
                               "\" --algo local --out \"" + out + "\"")
              .exit_code == 2);
}

TEST_CASE("verify accepts the empty schedule exactly for the identity") {
    Scratch scratch;
    const Grid g(2, 2);
    const fs::path empty = scratch.file("empty.json");
    write_text_atomic(empty.string(), schedule_to_json(g, "local", SwapSchedule{}));

    std::vector<int> identity{0, 1, 2, 3};
    const fs::path id_perm = write_perm(scratch, "id.json", Permutation(g, identity));
    const RunResult ok =
        run_cli(scratch, "verify --grid 2x2 --perm \"" + id_perm.string() +
                             "\" --schedule \"" + empty.string() + "\"");
    CHECK(ok.exit_code == 0);

    std::vector<int> swapped{1, 0, 2, 3};
    const fs::path swap_perm =
        write_perm(scratch, "swap.json", Permutation(g, swapped));
    const RunResult fail =
        run_cli(scratch, "verify --grid 2x2 --perm \"" + swap_perm.string() +
                             "\" --schedule \"" + empty.string() + "\"");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("first mismatch at (0,0)") != std::string::npos);
}

TEST_CASE("verify reports grid mismatches as input errors") {
    Scratch scratch;
    const Grid g(2, 2);
    std::vector<int> identity{0, 1, 2, 3};
    const fs::path perm = write_perm(scratch, "id.json", Permutation(g, identity));
    const fs::path empty = scratch.file("empty.json");
    write_text_atomic(empty.string(), schedule_to_json(g, "local", SwapSchedule{}));
    const RunResult r =
        run_cli(scratch, "verify --grid 3x3 --perm \"" + perm.string() +
                             "\" --schedule \"" + empty.string() + "\"");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bench writes the documented CSV with one row per task-algorithm") {
    Scratch scratch;
    const fs::path out = scratch.file("bench.csv");
    const RunResult r = run_cli(
        scratch,
        "bench --grids 4x4,8x8 --families uniform --trials 20 --seed 1 "
        "--algos local,ats --out \"" + out.string() + "\"");
    REQUIRE_MESSAGE(r.exit_code == 0, r.output);
    CHECK(r.output.find("rng=mt19937_64") != std::string::npos);
    CHECK(r.output.find("seed_base=1") != std::string::npos);

    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 1 + 2 * 1 * 20 * 2);
    CHECK(lines[0] == kCsvHeader);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(split_csv_row(lines[i]).size() == 9);
    }
}

TEST_CASE("bench on the identity family reports zero depth and swaps") {
    Scratch scratch;
    const fs::path out = scratch.file("bench.csv");
    const RunResult r = run_cli(
        scratch,
        "bench --grids 3x3 --families identity --trials 3 --seed 9 "
        "--algos local,naive,ats --out \"" + out.string() + "\"");
    REQUIRE_MESSAGE(r.exit_code == 0, r.output);
    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 1 + 3 * 3);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_csv_row(lines[i]);
        REQUIRE(fields.size() == 9);
        CHECK(fields[2] == "identity");
        CHECK(fields[5] == "0");  // depth
        CHECK(fields[6] == "0");  // depth_compacted
        CHECK(fields[7] == "0");  // swaps
    }
}

TEST_CASE("bench output is reproducible apart from the timing column") {
    Scratch scratch;
    const std::string args =
        "bench --grids 4x4 --families uniform,block_local:2x2 --trials 5 "
        "--seed 42 --algos local,naive,ats --out ";
    const fs::path first = scratch.file("a.csv");
    const fs::path second = scratch.file("b.csv");
    REQUIRE(run_cli(scratch, args + "\"" + first.string() + "\"").exit_code == 0);
    REQUIRE(run_cli(scratch, args + "\"" + second.string() + "\"").exit_code == 0);

    const auto a = lines_of(slurp(first));
    const auto b = lines_of(slurp(second));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(strip_last_field(a[i]) == strip_last_field(b[i]));
    }
}

TEST_CASE("bench --plot emits the two SVG charts") {
    Scratch scratch;
    const fs::path out = scratch.file("bench.csv");
    const fs::path plots = scratch.dir / "plots";
    const RunResult r = run_cli(
        scratch,
        "bench --grids 2x2,4x4 --families uniform --trials 3 --seed 7 "
        "--algos local,ats --out \"" + out.string() + "\" --plot \"" +
            plots.string() + "\"");
    REQUIRE_MESSAGE(r.exit_code == 0, r.output);
    CHECK(r.output.find("plots:") != std::string::npos);
    for (const std::string name : {"depth.svg", "time.svg"}) {
        const std::string svg = slurp(plots / name);
        CHECK(svg.find("<svg") != std::string::npos);
    }
}

TEST_CASE("bench rejects bad configuration with exit 2") {
    Scratch scratch;
    const std::string out = scratch.file("bench.csv").string();
    CHECK(run_cli(scratch,
                  "bench --grids 4x4 --families uniform --trials 2 --seed 1 "
                  "--algos gaussian --out \"" + out + "\"")
              .exit_code == 2);
    CHECK(run_cli(scratch,
                  "bench --grids 4x4 --families gaussian --trials 2 --seed 1 "
                  "--algos local --out \"" + out + "\"")
              .exit_code == 2);
    CHECK(run_cli(scratch,
                  "bench --grids 7 --families uniform --trials 2 --seed 1 "
                  "--algos local --out \"" + out + "\"")
              .exit_code == 2);
}

TEST_CASE("usage errors exit 2 and --help exits 0") {
    Scratch scratch;
    CHECK(run_cli(scratch, "").exit_code == 2);
    CHECK(run_cli(scratch, "route").exit_code == 2);
    CHECK(run_cli(scratch, "--help").exit_code == 0);
}
