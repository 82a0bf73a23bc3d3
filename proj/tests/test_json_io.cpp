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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "gridroute/json_io.hpp"
#include "gridroute/schedule.hpp"
#include "gridroute/types.hpp"

using namespace gridroute;

namespace {

namespace fs = std::filesystem;

// Unique scratch file per test body; removed on destruction.
struct TempFile {
    fs::path path;

    explicit TempFile(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("gridroute_test_" + tag + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json");
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }

    void fill(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
};

}  // namespace

TEST_CASE("permutation JSON round-trips through disk") {
    const Grid g(2, 3);
    const Permutation pi(g, {3, 0, 4, 2, 5, 1});
    TempFile file("perm_roundtrip");
    write_text_atomic(file.path.string(), permutation_to_json(pi));
    const Permutation back = load_permutation(file.path.string());
    CHECK(back == pi);
}

TEST_CASE("permutation JSON is 0-based row-major") {
    TempFile file("perm_zero_based");
    file.fill(R"({"rows": 2, "cols": 2, "perm": [1, 0, 2, 3]})");
    const Permutation pi = load_permutation(file.path.string());
    CHECK(pi.image(Vertex{1, 1}) == Vertex{1, 2});
    CHECK(pi.image(Vertex{1, 2}) == Vertex{1, 1});
    CHECK(pi.image(Vertex{2, 1}) == Vertex{2, 1});
}

TEST_CASE("permutation JSON error paths") {
    TempFile file("perm_errors");

    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_permutation((file.path / "nope").string()), ParseError);
    }
    SUBCASE("truncated JSON") {
        file.fill(R"({"rows": 2, "cols": 2, "perm": [1, 0)");
        CHECK_THROWS_AS(load_permutation(file.path.string()), ParseError);
    }
    SUBCASE("missing field") {
        file.fill(R"({"rows": 2, "perm": [0, 1]})");
        CHECK_THROWS_AS(load_permutation(file.path.string()), ParseError);
    }
    SUBCASE("non-integer entry") {
        file.fill(R"({"rows": 2, "cols": 2, "perm": [0, "x", 2, 3]})");
        CHECK_THROWS_AS(load_permutation(file.path.string()), ParseError);
    }
    SUBCASE("not a bijection") {
        file.fill(R"({"rows": 2, "cols": 2, "perm": [0, 0, 2, 3]})");
        CHECK_THROWS_AS(load_permutation(file.path.string()),
                        InvalidPermutationError);
    }
    SUBCASE("wrong length") {
        file.fill(R"({"rows": 2, "cols": 2, "perm": [0, 1, 2]})");
        CHECK_THROWS_AS(load_permutation(file.path.string()),
                        InvalidPermutationError);
    }
}

TEST_CASE("schedule JSON round-trips with algorithm and counts") {
    const Grid g(2, 2);
    SwapSchedule s;
    s.layers.push_back({Swap(Vertex{1, 1}, Vertex{1, 2}),
                        Swap(Vertex{2, 1}, Vertex{2, 2})});
    s.layers.push_back({Swap(Vertex{1, 2}, Vertex{2, 2})});
    TempFile file("sched_roundtrip");
    write_text_atomic(file.path.string(), schedule_to_json(g, "local", s));

    const LoadedSchedule back = load_schedule(file.path.string());
    CHECK(back.grid == g);
    CHECK(back.algorithm == "local");
    CHECK(back.schedule.layers == s.layers);
}

TEST_CASE("schedule JSON uses 0-based external coordinates") {
    TempFile file("sched_zero_based");
    file.fill(R"({"rows": 2, "cols": 2, "algorithm": "naive",
                  "layers": [[[[0,0],[0,1]]]], "depth": 1, "swaps": 1})");
    const LoadedSchedule loaded = load_schedule(file.path.string());
    REQUIRE(loaded.schedule.depth() == 1);
    CHECK(loaded.schedule.layers[0][0] == Swap(Vertex{1, 1}, Vertex{1, 2}));
}

TEST_CASE("schedule JSON error paths") {
    TempFile file("sched_errors");

    SUBCASE("vertex outside the grid") {
        file.fill(R"({"rows": 2, "cols": 2, "layers": [[[[0,0],[0,2]]]]})");
        CHECK_THROWS_AS(load_schedule(file.path.string()), ParseError);
    }
    SUBCASE("depth disagrees with layers") {
        file.fill(R"({"rows": 2, "cols": 2, "layers": [], "depth": 3})");
        CHECK_THROWS_AS(load_schedule(file.path.string()), ParseError);
    }
    SUBCASE("swap with one endpoint") {
        file.fill(R"({"rows": 2, "cols": 2, "layers": [[[[0,0]]]]})");
        CHECK_THROWS_AS(load_schedule(file.path.string()), ParseError);
    }
}

TEST_CASE("write_text_atomic replaces existing content") {
    TempFile file("atomic");
    write_text_atomic(file.path.string(), "first");
    write_text_atomic(file.path.string(), "second");
    std::ifstream in(file.path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "second");
    // No temporary droppings left behind.
    int siblings = 0;
    for (const auto& entry : fs::directory_iterator(file.path.parent_path())) {
        if (entry.path().string().find(file.path.filename().string() + ".tmp") !=
            std::string::npos) {
            ++siblings;
        }
    }
    CHECK(siblings == 0);
}
