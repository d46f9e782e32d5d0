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

#include "qgridc/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qgridc {

GridPoint GridPoint::operator+(const GridPoint& o) const {
    GridPoint r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

GridPoint GridPoint::operator-(const GridPoint& o) const {
    GridPoint r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

int GridPoint::parity() const {
    int64_t s = 0;
    for (int32_t v : c) s += v;
    return static_cast<int>(((s % 2) + 2) % 2);
}

std::string GridPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

int distance(const GridPoint& a, const GridPoint& b, Norm norm) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("distance: dimension mismatch " + a.str() + " vs " + b.str());
    int l1 = 0, linf = 0;
    for (int i = 0; i < a.dim(); ++i) {
        int d = std::abs(a[i] - b[i]);
        l1 += d;
        linf = std::max(linf, d);
    }
    return norm == Norm::L1 ? l1 : linf;
}

bool adjacent(const GridPoint& a, const GridPoint& b) {
    return a.dim() == b.dim() && distance(a, b, Norm::L1) == 1;
}

RingDescriptor ring_points(int m, int ring_index) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("ring_points: m must be odd and >= 3");
    const int half = (m - 1) / 2;
    if (ring_index < 0 || ring_index > half)
        throw std::invalid_argument("ring_points: ring index out of range");

    RingDescriptor r;
    r.m = m;
    r.ring_index = ring_index;
    const int k = ring_index;
    r.corners = {GridPoint{k, k}, GridPoint{k, m - k - 1},
                 GridPoint{m - k - 1, m - k - 1}, GridPoint{m - k - 1, k}};
    r.directions = {GridPoint{0, 1}, GridPoint{1, 0}, GridPoint{0, -1}, GridPoint{-1, 0}};

    if (ring_index == half) {  // degenerate single-point ring: the center
        r.points = {GridPoint{half, half}};
        r.last_index = 0;
        return r;
    }
    const int side = m - 2 * k;  // side length of the ring square
    // Clockwise from the bottom-left corner: each side contributes side-1
    // points (the far corner belongs to the next side).
    for (int i = 0; i < 4; ++i) {
        GridPoint p = r.corners[static_cast<size_t>(i)];
        for (int t = 0; t < side - 1; ++t) {
            r.points.push_back(p);
            p = p + r.directions[static_cast<size_t>(i)];
        }
    }
    r.last_index = static_cast<int>(r.points.size()) - 1;
    return r;
}

int ring_control_count(int m, int ring_index) {
    return 4 * ((m - 1) / 2 - ring_index);
}

GridPoint grid_center(int m, int dim) {
    GridPoint p;
    p.c.assign(static_cast<size_t>(dim), (m - 1) / 2);
    return p;
}

std::vector<GridPoint> all_points(int m, int dim) {
    std::vector<GridPoint> out;
    GridPoint p;
    p.c.assign(static_cast<size_t>(dim), 0);
    while (true) {
        out.push_back(p);
        int i = dim - 1;
        for (; i >= 0; --i) {
            if (++p[i] < m) break;
            p[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

bool ControlLayout::is_control(const GridPoint& p) const {
    return std::binary_search(controls.begin(), controls.end(), p);
}

ControlLayout control_layout(int m, int dim) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("control_layout: m must be odd and >= 3");
    if (dim < 2) throw std::invalid_argument("control_layout: dim must be >= 2");
    ControlLayout lay;
    lay.m = m;
    lay.dim = dim;
    lay.target = grid_center(m, dim);
    for (auto& p : all_points(m, dim)) {
        if (p == lay.target) continue;
        if (p.parity() == 1)
            lay.controls.push_back(p);
        else
            lay.ancillas.push_back(p);
    }
    return lay;
}

}  // namespace qgridc
