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

#include "qgridc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgridc {

namespace {

BasicOp op2(GateKind k, Address a, Address b) {
    BasicOp op;
    op.gate = GateSpec::simple(k);
    op.gate.kind = k;
    op.qubits = {std::move(a), std::move(b)};
    return op;
}

BasicOp cv_op(const Mat2& v, Address control, Address target, const std::string& label) {
    BasicOp op;
    op.gate = GateSpec::controlled_u(1, v, label);
    // store as [target, control] to match the CU qubit convention
    op.qubits = {std::move(target), std::move(control)};
    return op;
}

BasicOp u1_op(const Mat2& u, Address q, const std::string& label) {
    BasicOp op;
    op.gate = GateSpec::controlled_u(0, u, label);
    op.qubits = {std::move(q)};
    return op;
}

// Star-geometry 2-controlled U: target t with controls a, b both adjacent
// to t. Barenco conjugation with V = sqrt(U); the control-control CNOT is
// rerouted through the target with swaps.
//   CV(b,t) . SWAP(b,t) . CX(a,t) . CV'(t->b) . CX(a,t) . SWAP(b,t) . CV(a,t)
std::vector<std::vector<BasicOp>> expand_ccu(const Mat2& u, const Address& t, const Address& a,
                                             const Address& b, const std::string& label) {
    Mat2 v = mat2_sqrt(u);
    Mat2 vdg = mat2_dagger(v);
    std::vector<std::vector<BasicOp>> seq;
    seq.push_back({cv_op(v, b, t, label + "^1/2")});
    seq.push_back({op2(GateKind::SWAP, b, t)});
    seq.push_back({op2(GateKind::CNOT, a, t)});
    seq.push_back({cv_op(vdg, t, b, label + "^-1/2")});
    seq.push_back({op2(GateKind::CNOT, a, t)});
    seq.push_back({op2(GateKind::SWAP, b, t)});
    seq.push_back({cv_op(v, a, t, label + "^1/2")});
    return seq;
}

// Relative-phase 3-controlled X on a star (all CNOTs target t). Equal to
// MCX-3 up to a diagonal phase on the wires; generators emit MCX-3 only in
// compute/uncompute pairs off the payload target, where the diagonals cancel
// (the mirrored instance uses the reversed inverse sequence).
std::vector<std::vector<BasicOp>> expand_rc3x(const Address& t, const Address& a, const Address& b,
                                              const Address& c, bool mirrored) {
    const double q = M_PI / 4.0;
    auto rz = [](double ang) {
        return Mat2{std::polar(1.0, -ang / 2), cxd(0), cxd(0), std::polar(1.0, ang / 2)};
    };
    const double r = 1.0 / std::sqrt(2.0);
    // u2(0, pi) = H up to global phase
    Mat2 h{cxd(r), cxd(r), cxd(r), cxd(-r)};
    std::vector<std::vector<BasicOp>> seq;
    auto put1 = [&](const Mat2& m, const std::string& lbl) { seq.push_back({u1_op(m, t, lbl)}); };
    auto cx = [&](const Address& ctl) { seq.push_back({op2(GateKind::CNOT, ctl, t)}); };
    put1(h, "h");
    put1(rz(q), "t");
    cx(c);
    put1(rz(-q), "tdg");
    put1(h, "h");
    cx(a);
    put1(rz(q), "t");
    cx(b);
    put1(rz(-q), "tdg");
    cx(a);
    put1(rz(q), "t");
    cx(b);
    put1(rz(-q), "tdg");
    put1(h, "h");
    put1(rz(q), "t");
    cx(c);
    put1(rz(-q), "tdg");
    put1(h, "h");
    if (mirrored) {
        // dagger: reverse order, invert each layer
        std::vector<std::vector<BasicOp>> rev;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            auto layer = *it;
            for (auto& op : layer)
                if (op.gate.kind == GateKind::ControlledU)
                    op.gate.matrix = mat2_dagger(op.gate.matrix);
            rev.push_back(std::move(layer));
        }
        return rev;
    }
    return seq;
}

}  // namespace

std::vector<std::vector<BasicOp>> expand_op(const BasicOp& op) {
    const int arity = op.gate.arity();
    switch (op.gate.kind) {
        case GateKind::MCX:
            if (arity == 2) {
                BasicOp cx = op;
                cx.gate = GateSpec::simple(GateKind::CNOT);
                cx.qubits = {op.qubits[1], op.qubits[0]};
                return {{cx}};
            }
            if (arity == 3)
                return expand_ccu(gate_matrix_1q(GateKind::X), op.qubits[0], op.qubits[1],
                                  op.qubits[2], "X");
            if (arity == 4)
                return expand_rc3x(op.qubits[0], op.qubits[1], op.qubits[2], op.qubits[3],
                                   op.mirrored);
            throw std::invalid_argument("expand_op: MCX with more than 3 controls");
        case GateKind::ControlledU: {
            if (arity <= 2) return {{op}};
            if (arity == 3)
                return expand_ccu(op.gate.matrix, op.qubits[0], op.qubits[1], op.qubits[2],
                                  op.gate.label);
            if (arity == 4) {
                // CV(c,t) . SWAP(c,t) . CCX(t;a,b) . CV'(t->c) . CCX(t;a,b)
                //   . SWAP(c,t) . CCV(t;a,b),  V = sqrt(U)
                const Address &t = op.qubits[0], &a = op.qubits[1], &b = op.qubits[2],
                              &c = op.qubits[3];
                Mat2 v = mat2_sqrt(op.gate.matrix);
                std::vector<std::vector<BasicOp>> seq;
                seq.push_back({cv_op(v, c, t, op.gate.label + "^1/2")});
                seq.push_back({op2(GateKind::SWAP, c, t)});
                auto ccx = expand_ccu(gate_matrix_1q(GateKind::X), t, a, b, "X");
                seq.insert(seq.end(), ccx.begin(), ccx.end());
                seq.push_back({cv_op(mat2_dagger(v), t, c, op.gate.label + "^-1/2")});
                seq.insert(seq.end(), ccx.begin(), ccx.end());
                seq.push_back({op2(GateKind::SWAP, c, t)});
                auto ccv = expand_ccu(v, t, a, b, op.gate.label + "^1/2");
                seq.insert(seq.end(), ccv.begin(), ccv.end());
                return seq;
            }
            throw std::invalid_argument("expand_op: CU with more than 3 controls");
        }
        case GateKind::Fanout: {
            std::vector<std::vector<BasicOp>> seq;
            for (size_t i = 1; i < op.qubits.size(); ++i)
                seq.push_back({op2(GateKind::CNOT, op.qubits[0], op.qubits[i])});
            return seq;
        }
        default:
            return {{op}};
    }
}

int64_t expansion_size(const BasicOp& op) {
    const int arity = op.gate.arity();
    if (arity <= 2) return 1;
    switch (op.gate.kind) {
        case GateKind::MCX:
            return arity == 3 ? kExpandDepthCCX : kExpandDepthMCX3;
        case GateKind::ControlledU:
            return arity == 3 ? kExpandDepthCCX : kExpandDepthCU3;
        case GateKind::Fanout:
            return arity - 1;
        default:
            return 1;
    }
}

int64_t expansion_depth(const BasicOp& op) { return expansion_size(op); }

int64_t depth(const AdaptiveCircuit& c) {
    int64_t d = 0;
    for (const auto& ts : c.timesteps)
        d += ts.kind == TimestepKind::Logical ? kLogicalWindow : 1;
    return d;
}

int64_t size(const AdaptiveCircuit& c) {
    int64_t s = 0;
    for (const auto& ts : c.timesteps)
        for (const auto& op : ts.ops) s += expansion_size(op);
    return s;
}

int64_t logical_depth(const AdaptiveCircuit& c) {
    return static_cast<int64_t>(c.timesteps.size());
}

int64_t logical_size(const AdaptiveCircuit& c) {
    int64_t s = 0;
    for (const auto& ts : c.timesteps) s += static_cast<int64_t>(ts.ops.size());
    return s;
}

int64_t touched_count(const AdaptiveCircuit& c) {
    return static_cast<int64_t>(c.touched().size());
}

int64_t width(const AdaptiveCircuit& c) {
    auto t = c.touched();
    if (t.empty()) return 0;
    if (c.model != Model::CCNTC) return static_cast<int64_t>(t.size());
    // smallest axis-aligned bounding hypercube
    const int dim = c.dim;
    std::vector<int32_t> lo(static_cast<size_t>(dim), INT32_MAX),
        hi(static_cast<size_t>(dim), INT32_MIN);
    for (const auto& q : t) {
        for (int i = 0; i < dim; ++i) {
            lo[static_cast<size_t>(i)] = std::min(lo[static_cast<size_t>(i)], q.point[i]);
            hi[static_cast<size_t>(i)] = std::max(hi[static_cast<size_t>(i)], q.point[i]);
        }
    }
    int64_t side = 0;
    for (int i = 0; i < dim; ++i)
        side = std::max(side, static_cast<int64_t>(hi[static_cast<size_t>(i)]) -
                                  lo[static_cast<size_t>(i)] + 1);
    int64_t vol = 1;
    for (int i = 0; i < dim; ++i) vol *= side;
    return vol;
}

CostReport cost_report(const AdaptiveCircuit& c) {
    return CostReport{depth(c), size(c), width(c), c.model};
}

}  // namespace qgridc
