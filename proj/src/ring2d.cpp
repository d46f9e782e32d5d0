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

#include <algorithm>
#include <stdexcept>

#include "qgridc/ring_compactor.hpp"

namespace qgridc {

namespace {

BasicOp swap_op(GridPoint a, GridPoint b) {
    BasicOp op;
    op.gate = GateSpec::simple(GateKind::SWAP);
    op.qubits = {Address::grid(std::move(a)), Address::grid(std::move(b))};
    return op;
}

BasicOp mcx_op(GridPoint target, std::vector<GridPoint> controls) {
    BasicOp op;
    op.gate = GateSpec::mcx(static_cast<int>(controls.size()));
    op.qubits = {Address::grid(std::move(target))};
    for (auto& c : controls) op.qubits.push_back(Address::grid(std::move(c)));
    return op;
}

}  // namespace

void control_clockwise(int ring_index, int m, std::vector<Timestep>& into) {
    const int k = ring_index;
    const int w = m - 2 * k;  // side of this ring's square
    if (k < 1 || w < 3) throw std::invalid_argument("control_clockwise: invalid ring index");
    RingDescriptor ring = ring_points(m, k);
    Timestep ts;
    ts.kind = TimestepKind::Logical;
    for (int i = 0; i < 4; ++i) {
        const GridPoint& C = ring.corners[static_cast<size_t>(i)];
        const GridPoint& Di = ring.directions[static_cast<size_t>(i)];
        const GridPoint& Dprev = ring.directions[static_cast<size_t>((i + 3) % 4)];
        auto at = [&](const GridPoint& base, const GridPoint& d, int t) {
            GridPoint p = base;
            for (int s = 0; s < t; ++s) p = p + d;
            return p;
        };
        // Corner ancilla: AND of the two outer-ring values flanking it. On
        // the innermost (3x3) ring the adjacent own mid-side control joins
        // as a third input, since there is no room for a separate op.
        std::vector<GridPoint> corner_controls = {C - Di, C + Dprev};
        if (w == 3) corner_controls.push_back(C + Di);
        ts.ops.push_back(mcx_op(C, std::move(corner_controls)));
        if (w >= 5) {
            // Mid-side ancillas: in-ring predecessor (a control of this
            // ring) AND the outward neighbor (a value slot of the outer
            // ring). The side's last ancilla takes three inputs.
            for (int j = 2; j <= w - 5; j += 2) {
                GridPoint Lj = at(C, Di, j);
                ts.ops.push_back(mcx_op(Lj, {at(C, Di, j - 1), Lj + Dprev}));
            }
            GridPoint p = at(C, Di, w - 3);
            ts.ops.push_back(
                mcx_op(p, {at(C, Di, w - 4), p + Dprev, at(C, Di, w - 2)}));
        }
    }
    into.push_back(std::move(ts));
}

void rotate(int ring_index, int m, std::vector<Timestep>& into) {
    RingDescriptor ring = ring_points(m, ring_index);
    const int n_pts = static_cast<int>(ring.points.size());
    if (n_pts < 2) return;
    Timestep ts;
    ts.kind = TimestepKind::Physical;
    for (int i = 1; i <= ring.last_index; i += 2) {
        int next = (i + 1) % n_pts;
        ts.ops.push_back(swap_op(ring.points[static_cast<size_t>(i)],
                                 ring.points[static_cast<size_t>(next)]));
    }
    into.push_back(std::move(ts));
}

namespace {

// Zero-ferry: walks a fresh |0> from an untouched outer-ring even cell down
// each mid axis into the innermost mid-side control slots, two swap layers
// per stage, entering cells only once they are dead. Returns, per stage
// 1..kb, the (up to 2) swap layers of that stage.
std::vector<std::array<std::vector<BasicOp>, 2>> plan_ferry(int m) {
    const int kb = (m - 3) / 2;
    const int c = (m - 1) / 2;
    std::vector<std::array<std::vector<BasicOp>, 2>> layers(static_cast<size_t>(kb));
    if (kb == 0) return layers;

    struct Axis {
        GridPoint mid;
        GridPoint u;  // outward unit (mid + t*u walks away from center)
        GridPoint v;  // dogleg sidestep
    };
    const std::vector<Axis> axes = {
        {GridPoint{c, kb}, GridPoint{0, -1}, GridPoint{-1, 0}},          // south
        {GridPoint{c, m - 1 - kb}, GridPoint{0, 1}, GridPoint{1, 0}},    // north
        {GridPoint{kb, c}, GridPoint{-1, 0}, GridPoint{0, -1}},         // west
        {GridPoint{m - 1 - kb, c}, GridPoint{1, 0}, GridPoint{0, 1}},   // east
    };
    // Path from the zero source to the mid; source parity must be even.
    auto build_path = [&](const Axis& ax) {
        std::vector<GridPoint> path;  // source first
        GridPoint outer = ax.mid;
        for (int t = 0; t < kb; ++t) outer = outer + ax.u;  // ring-0 axis cell
        if (outer.parity() == 0) {
            path.push_back(outer);
        } else {
            path.push_back(outer + ax.v);
            path.push_back(outer);
        }
        for (int t = kb - 1; t >= 0; --t) {
            GridPoint p = ax.mid;
            for (int s = 0; s < t; ++s) p = p + ax.u;
            path.push_back(p);
        }
        return path;
    };
    auto ring_of = [&](const GridPoint& p) {
        int d = std::max(std::abs(p[0] - c), std::abs(p[1] - c));
        return (m - 1) / 2 - d;
    };
    for (const auto& ax : axes) {
        auto path = build_path(ax);
        // hop h moves the zero from path[h-1] into path[h]
        const int hops = static_cast<int>(path.size()) - 1;
        int h = 1;
        for (int stage = 1; stage <= kb && h <= hops; ++stage) {
            for (int layer = 0; layer < 2 && h <= hops; ++layer) {
                const GridPoint& target = path[static_cast<size_t>(h)];
                bool is_mid = target == ax.mid;
                bool enterable = is_mid ? stage == kb : ring_of(target) <= stage - 1;
                if (!enterable) break;
                layers[static_cast<size_t>(stage - 1)][static_cast<size_t>(layer)].push_back(
                    swap_op(path[static_cast<size_t>(h - 1)], target));
                ++h;
            }
        }
        if (h <= hops) throw std::logic_error("ferry schedule infeasible");
    }
    return layers;
}

}  // namespace

CompactionPlan plan_control_2d(int m, const GateSpec& u) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("control circuit: m must be odd >= 3");
    if (u.kind != GateKind::ControlledU || u.controls != 0)
        throw std::invalid_argument("control circuit: pass the payload as a 1-qubit unitary");
    const int kb = (m - 3) / 2;

    CompactionPlan plan;
    plan.m = m;
    plan.dim = 2;
    plan.stages.resize(static_cast<size_t>(kb) + 1);
    for (int k = 0; k <= kb; ++k) plan.stages[static_cast<size_t>(k)].ring_index = k;

    auto ferry = plan_ferry(m);
    for (int k = 1; k <= kb; ++k) {
        auto& ts = plan.stages[static_cast<size_t>(k)].timesteps;
        control_clockwise(k, m, ts);
        for (int layer = 0; layer < 2; ++layer) {
            Timestep f;
            f.kind = TimestepKind::Physical;
            f.ops = ferry[static_cast<size_t>(k - 1)][static_cast<size_t>(layer)];
            ts.push_back(std::move(f));  // kept even when empty: fixed schedule
        }
        rotate(k, m, ts);
    }

    // Base case on the central 3x3 (ring kb), Alg-3 line for line.
    auto& base = plan.stages[static_cast<size_t>(kb)].timesteps;
    {
        Timestep b1;
        b1.kind = TimestepKind::Logical;
        b1.ops.push_back(mcx_op(GridPoint{kb, kb}, {GridPoint{kb, kb + 1}, GridPoint{kb + 1, kb}}));
        b1.ops.push_back(mcx_op(GridPoint{kb + 2, kb + 2},
                                {GridPoint{kb + 1, kb + 2}, GridPoint{kb + 2, kb + 1}}));
        base.push_back(std::move(b1));
        Timestep b2;
        b2.kind = TimestepKind::Physical;
        b2.ops.push_back(swap_op(GridPoint{kb, kb}, GridPoint{kb, kb + 1}));
        b2.ops.push_back(swap_op(GridPoint{kb + 2, kb + 1}, GridPoint{kb + 2, kb + 2}));
        base.push_back(std::move(b2));
    }
    BasicOp cu;
    cu.gate = GateSpec::controlled_u(2, u.matrix, u.label);
    cu.qubits = {Address::grid(GridPoint{kb + 1, kb + 1}), Address::grid(GridPoint{kb, kb + 1}),
                 Address::grid(GridPoint{kb + 2, kb + 1})};
    plan.central_op = std::move(cu);

    // Uncompute: every compute timestep mirrored in reverse order; multi-
    // controlled X instances flag the dagger-paired decomposition.
    std::vector<const Timestep*> fwd;
    for (const auto& st : plan.stages)
        for (const auto& ts : st.timesteps) fwd.push_back(&ts);
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
        Timestep rev = **it;
        for (auto& op : rev.ops) op.mirrored = true;
        plan.uncompute_suffix.push_back(std::move(rev));
    }
    return plan;
}

AdaptiveCircuit control_circuit(int m, int dim, const GateSpec& u) {
    if (dim == 3) return control_circuit_kd(m, dim, u);
    if (dim != 2) throw std::invalid_argument("control_circuit: dim must be 2 or 3");
    CompactionPlan plan = plan_control_2d(m, u);
    CircuitBuilder b(Model::NANTC, 2);
    for (const auto& st : plan.stages)
        for (const auto& ts : st.timesteps) {
            b.begin_step(ts.kind);
            for (const auto& op : ts.ops) b.push(op);
            b.end_step(/*keep_empty=*/true);
        }
    b.begin_step(TimestepKind::Logical);
    b.push(plan.central_op);
    b.end_step();
    for (const auto& ts : plan.uncompute_suffix) {
        b.begin_step(ts.kind);
        for (const auto& op : ts.ops) b.push(op);
        b.end_step(/*keep_empty=*/true);
    }
    const int n_controls = (m * m - 1) / 2;
    return b.finish(n_controls + 1);
}

}  // namespace qgridc
