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

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridroute {

// All coordinates are 1-based: rows in [1,m], columns in [1,n]. The JSON
// interchange format is 0-based row-major; conversion happens only at the
// serialization boundary (see json_io).
struct Vertex {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

class GridRouteError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidLayerError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

class WindowOutOfRangeError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

class NonSquareInputError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

class HallViolationError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

class InvalidSpecError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

class InvalidPermutationError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

class ParseError : public GridRouteError {
  public:
    using GridRouteError::GridRouteError;
};

/// An m x n grid graph. Vertices are (i,j) with 1 <= i <= m, 1 <= j <= n;
/// edges join vertices at L1-distance 1.
class Grid {
  public:
    Grid(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) {
            throw InvalidSpecError("grid dimensions must be positive, got " +
                                   std::to_string(rows) + "x" + std::to_string(cols));
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vertex_count() const { return rows_ * cols_; }

    bool contains(const Vertex& v) const {
        return v.row >= 1 && v.row <= rows_ && v.col >= 1 && v.col <= cols_;
    }

    bool adjacent(const Vertex& a, const Vertex& b) const {
        if (!contains(a) || !contains(b)) {
            return false;
        }
        const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
        const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
        return dr + dc == 1;
    }

    // Row-major vertex index in [0, m*n).
    int index(const Vertex& v) const { return (v.row - 1) * cols_ + (v.col - 1); }

    Vertex vertex(int index) const {
        return Vertex{index / cols_ + 1, index % cols_ + 1};
    }

    int l1_distance(const Vertex& a, const Vertex& b) const {
        const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
        const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
        return dr + dc;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

  private:
    int rows_;
    int cols_;
};

/// A bijection on the vertex set of a grid, stored as a destination map
/// over row-major vertex indices.
class Permutation {
  public:
    // Validates that dest is a bijection on [0, grid.vertex_count()).
    Permutation(const Grid& grid, std::vector<int> dest);

    static Permutation identity(const Grid& grid);

    const Grid& grid() const { return grid_; }

    Vertex image(const Vertex& v) const { return grid_.vertex(dest_[grid_.index(v)]); }
    int image_index(int index) const { return dest_[index]; }

    bool is_identity() const;

    const std::vector<int>& dest() const { return dest_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    Grid grid_;
    std::vector<int> dest_;
};

/// Simulation state: pos[token] = row-major index of the vertex currently
/// holding the token. Tokens are identified with their start vertices.
struct Placement {
    std::vector<int> pos;

    static Placement identity(const Grid& grid);

    bool operator==(const Placement&) const = default;
};

}  // namespace gridroute
