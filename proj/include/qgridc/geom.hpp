// Copyright 2025 The qgridc Authors
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

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace qgridc {

/// A point on the k-dimensional grid. First coordinate is the column (x),
/// second the row (y). Coordinates are non-negative when addressing a
/// bounded grid of side m.
struct GridPoint {
    std::vector<int32_t> c;

    GridPoint() = default;
    GridPoint(std::initializer_list<int32_t> coords) : c(coords) {}
    explicit GridPoint(std::vector<int32_t> coords) : c(std::move(coords)) {}

    int dim() const { return static_cast<int>(c.size()); }
    int32_t operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int32_t& operator[](int i) { return c[static_cast<size_t>(i)]; }

    bool operator==(const GridPoint& o) const { return c == o.c; }
    bool operator!=(const GridPoint& o) const { return c != o.c; }
    bool operator<(const GridPoint& o) const { return c < o.c; }

    GridPoint operator+(const GridPoint& o) const;
    GridPoint operator-(const GridPoint& o) const;

    /// Coordinate-sum parity; 0 or 1.
    int parity() const;

    std::string str() const;
};

enum class Norm { L1, Linf };

/// Standard norm of a-b. Throws std::invalid_argument on dimension mismatch.
int distance(const GridPoint& a, const GridPoint& b, Norm norm);

/// True iff the l1 distance is exactly 1.
bool adjacent(const GridPoint& a, const GridPoint& b);

/// The square ring R_k: points at l_inf distance (m-1)/2 - ring_index from
/// the grid center, ordered clockwise from the bottom-left corner.
struct RingDescriptor {
    int m = 0;
    int ring_index = 0;
    std::vector<GridPoint> points;           // r_0 .. r_{last_index}
    std::array<GridPoint, 4> corners;        // C_0..C_3
    std::array<GridPoint, 4> directions;     // D_0..D_3
    int last_index = -1;
};

/// Enumerates ring `ring_index` of the m x m grid (m odd). The degenerate
/// ring at index (m-1)/2 is the single center point.
RingDescriptor ring_points(int m, int ring_index);

/// Control/ancilla placement for the ring-compaction circuits: controls are
/// every odd-coordinate-sum cell of the hypercube grid (non-adjacent by
/// parity), the target is the center, everything else is an ancilla.
struct ControlLayout {
    int m = 0;
    int dim = 2;
    std::vector<GridPoint> controls;   // sorted
    std::vector<GridPoint> ancillas;   // sorted
    GridPoint target;

    bool is_control(const GridPoint& p) const;
};

ControlLayout control_layout(int m, int dim);

/// Number of controls on ring j of an m x m layout: 4((m-1)/2 - j).
int ring_control_count(int m, int ring_index);

GridPoint grid_center(int m, int dim);

/// All points of the dim-dimensional grid of side m, lexicographic order.
std::vector<GridPoint> all_points(int m, int dim);

struct GridPointHash {
    size_t operator()(const GridPoint& p) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int32_t v : p.c) h = h * 1099511628211ull ^ static_cast<size_t>(v + 7);
        return h;
    }
};

}  // namespace qgridc
