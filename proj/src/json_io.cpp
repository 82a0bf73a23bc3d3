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

#include "gridroute/json_io.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace gridroute {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        throw ParseError("'" + path + "' is not valid JSON");
    }
    return doc;
}

int require_dim(const json& doc, const char* key, const std::string& path) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw ParseError("'" + path + "' lacks integer field \"" + key + "\"");
    }
    const auto value = doc[key].get<std::int64_t>();
    if (value < 1 || value > 1 << 20) {
        throw ParseError("'" + path + "' has out-of-range \"" + key + "\"");
    }
    return static_cast<int>(value);
}

Vertex vertex_from_json(const json& pair, const Grid& grid,
                        const std::string& path) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw ParseError("'" + path + "' has a malformed vertex (expected [i,j])");
    }
    // External coordinates are 0-based.
    Vertex v{pair[0].get<int>() + 1, pair[1].get<int>() + 1};
    if (!grid.contains(v)) {
        throw ParseError("'" + path + "' has vertex [" +
                         std::to_string(v.row - 1) + "," +
                         std::to_string(v.col - 1) + "] outside the grid");
    }
    return v;
}

}  // namespace

Permutation load_permutation(const std::string& path) {
    const json doc = parse_file(path);
    if (!doc.is_object()) {
        throw ParseError("'" + path + "' must be a JSON object");
    }
    const Grid grid(require_dim(doc, "rows", path), require_dim(doc, "cols", path));
    if (!doc.contains("perm") || !doc["perm"].is_array()) {
        throw ParseError("'" + path + "' lacks array field \"perm\"");
    }
    const auto& perm = doc["perm"];
    std::vector<int> dest;
    dest.reserve(perm.size());
    for (const auto& entry : perm) {
        if (!entry.is_number_integer()) {
            throw ParseError("'" + path + "' has a non-integer perm entry");
        }
        dest.push_back(entry.get<int>());
    }
    // Bijection violations (wrong length, out of range, duplicates) surface
    // as InvalidPermutationError from the constructor.
    return Permutation(grid, std::move(dest));
}

LoadedSchedule load_schedule(const std::string& path) {
    const json doc = parse_file(path);
    if (!doc.is_object()) {
        throw ParseError("'" + path + "' must be a JSON object");
    }
    const Grid grid(require_dim(doc, "rows", path), require_dim(doc, "cols", path));
    std::string algorithm;
    if (doc.contains("algorithm")) {
        if (!doc["algorithm"].is_string()) {
            throw ParseError("'" + path + "' has non-string \"algorithm\"");
        }
        algorithm = doc["algorithm"].get<std::string>();
    }
    if (!doc.contains("layers") || !doc["layers"].is_array()) {
        throw ParseError("'" + path + "' lacks array field \"layers\"");
    }
    SwapSchedule schedule;
    for (const auto& layer_json : doc["layers"]) {
        if (!layer_json.is_array()) {
            throw ParseError("'" + path + "' has a non-array layer");
        }
        Layer layer;
        for (const auto& swap_json : layer_json) {
            if (!swap_json.is_array() || swap_json.size() != 2) {
                throw ParseError("'" + path +
                                 "' has a malformed swap (expected a vertex pair)");
            }
            layer.push_back(Swap(vertex_from_json(swap_json[0], grid, path),
                                 vertex_from_json(swap_json[1], grid, path)));
        }
        schedule.layers.push_back(std::move(layer));
    }
    // depth/swaps are derived; when present they must agree with layers.
    const auto check_count = [&](const char* key, std::int64_t expected) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_number_integer() ||
            doc[key].get<std::int64_t>() != expected) {
            throw ParseError("'" + path + "' field \"" + key +
                             "\" disagrees with layers");
        }
    };
    check_count("depth", schedule.depth());
    check_count("swaps", static_cast<std::int64_t>(schedule.swap_count()));
    return LoadedSchedule{grid, std::move(algorithm), std::move(schedule)};
}

std::string permutation_to_json(const Permutation& pi) {
    json doc;
    doc["rows"] = pi.grid().rows();
    doc["cols"] = pi.grid().cols();
    doc["perm"] = pi.dest();
    return doc.dump();
}

std::string schedule_to_json(const Grid& grid, const std::string& algorithm,
                             const SwapSchedule& schedule) {
    json layers = json::array();
    for (const auto& layer : schedule.layers) {
        json layer_json = json::array();
        for (const auto& swap : layer) {
            layer_json.push_back(json::array(
                {json::array({swap.a.row - 1, swap.a.col - 1}),
                 json::array({swap.b.row - 1, swap.b.col - 1})}));
        }
        layers.push_back(std::move(layer_json));
    }
    json doc;
    doc["rows"] = grid.rows();
    doc["cols"] = grid.cols();
    doc["algorithm"] = algorithm;
    doc["layers"] = std::move(layers);
    doc["depth"] = schedule.depth();
    doc["swaps"] = schedule.swap_count();
    return doc.dump();
}

void write_text_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    const fs::path tmp =
        dir / (target.filename().string() + ".tmp." +
               std::to_string(static_cast<unsigned long>(::getpid())));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ParseError("cannot create temporary file next to '" + path + "'");
        }
        out << text;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw ParseError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ParseError("failed to move temporary file onto '" + path + "'");
    }
}

}  // namespace gridroute
