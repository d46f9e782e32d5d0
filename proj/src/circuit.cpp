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

#include "qgridc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgridc {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::CNOT: return "CNOT";
        case GateKind::SWAP: return "SWAP";
        case GateKind::MCX: return "MCX";
        case GateKind::ControlledU: return "CU";
        case GateKind::Fanout: return "FANOUT";
        case GateKind::Measure: return "M";
        case GateKind::CondPauli: return "CPAULI";
    }
    return "?";
}

const char* model_name(Model m) {
    switch (m) {
        case Model::NANTC: return "NANTC";
        case Model::CCAC: return "CCAC";
        case Model::CCNTC: return "CCNTC";
    }
    return "?";
}

GateSpec GateSpec::controlled_u(int n_controls, const Mat2& u, std::string label) {
    if (!is_unitary_2x2(u))
        throw std::invalid_argument("controlled_u: payload is not unitary within 1e-12");
    GateSpec g;
    g.kind = GateKind::ControlledU;
    g.controls = n_controls;
    g.matrix = u;
    g.label = std::move(label);
    return g;
}

int GateSpec::arity() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::Measure:
        case GateKind::CondPauli:
            return 1;
        case GateKind::CNOT:
        case GateKind::SWAP:
            return 2;
        case GateKind::MCX:
        case GateKind::ControlledU:
            return controls + 1;
        case GateKind::Fanout:
            return targets + 1;
    }
    return 1;
}

bool GateSpec::operator==(const GateSpec& o) const {
    if (kind != o.kind || controls != o.controls || targets != o.targets) return false;
    if (kind == GateKind::ControlledU) {
        for (int i = 0; i < 4; ++i)
            if (std::abs(matrix[static_cast<size_t>(i)] - o.matrix[static_cast<size_t>(i)]) > 1e-12)
                return false;
    }
    return true;
}

Mat2 gate_matrix_1q(GateKind k) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (k) {
        case GateKind::H: return Mat2{cxd(r), cxd(r), cxd(r), cxd(-r)};
        case GateKind::X: return Mat2{cxd(0), cxd(1), cxd(1), cxd(0)};
        case GateKind::Y: return Mat2{cxd(0), cxd(0, -1), cxd(0, 1), cxd(0)};
        case GateKind::Z: return Mat2{cxd(1), cxd(0), cxd(0), cxd(-1)};
        case GateKind::S: return Mat2{cxd(1), cxd(0), cxd(0), cxd(0, 1)};
        case GateKind::Sdg: return Mat2{cxd(1), cxd(0), cxd(0), cxd(0, -1)};
        default:
            throw std::invalid_argument("gate_matrix_1q: not a fixed 1-qubit gate");
    }
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_dagger(const Mat2& a) {
    return Mat2{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

bool is_unitary_2x2(const Mat2& u, double tol) {
    Mat2 p = mat2_mul(u, mat2_dagger(u));
    return std::abs(p[0] - cxd(1)) < tol && std::abs(p[1]) < tol && std::abs(p[2]) < tol &&
           std::abs(p[3] - cxd(1)) < tol;
}

// Principal square root via diagonalization. A 2x2 unitary has orthonormal
// eigenvectors; take the principal root of each eigenvalue.
Mat2 mat2_sqrt(const Mat2& u) {
    const cxd a = u[0], b = u[1], c = u[2], d = u[3];
    const cxd tr = a + d, det = a * d - b * c;
    const cxd disc = std::sqrt(tr * tr - 4.0 * det);
    cxd l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    auto principal = [](cxd l) {
        double ang = std::arg(l);
        return std::polar(std::sqrt(std::abs(l)), ang / 2.0);
    };
    if (std::abs(l1 - l2) < 1e-14) {
        // u = l * I on its eigenspace(s); handle the diagonalizable-only case
        // (unitaries are always diagonalizable).
        if (std::abs(b) < 1e-14 && std::abs(c) < 1e-14) {
            return Mat2{principal(a), cxd(0), cxd(0), principal(d)};
        }
    }
    // Eigenvector for l1: (b, l1-a) or (l1-d, c), whichever is nonzero.
    cxd v1x, v1y;
    if (std::abs(b) > 1e-14) {
        v1x = b;
        v1y = l1 - a;
    } else if (std::abs(c) > 1e-14) {
        v1x = l1 - d;
        v1y = c;
    } else {
        return Mat2{principal(a), cxd(0), cxd(0), principal(d)};
    }
    double n1 = std::sqrt(std::norm(v1x) + std::norm(v1y));
    v1x /= n1;
    v1y /= n1;
    // Orthogonal complement (unitary => eigenvectors orthogonal).
    cxd v2x = -std::conj(v1y), v2y = std::conj(v1x);
    cxd s1 = principal(l1), s2 = principal(l2);
    // V diag(s) V^dagger
    return Mat2{s1 * v1x * std::conj(v1x) + s2 * v2x * std::conj(v2x),
                s1 * v1x * std::conj(v1y) + s2 * v2x * std::conj(v2y),
                s1 * v1y * std::conj(v1x) + s2 * v2y * std::conj(v2x),
                s1 * v1y * std::conj(v1y) + s2 * v2y * std::conj(v2y)};
}

std::string BasicOp::str() const {
    std::ostringstream os;
    os << gate_kind_name(gate.kind);
    if (gate.kind == GateKind::ControlledU && !gate.label.empty()) os << "[" << gate.label << "]";
    for (const auto& q : qubits) os << " " << q.str();
    if (measurement_id) os << " ->m" << *measurement_id;
    return os.str();
}

std::vector<Address> AdaptiveCircuit::touched() const {
    std::set<Address> s;
    for (const auto& ts : timesteps)
        for (const auto& op : ts.ops)
            for (const auto& q : op.qubits) s.insert(q);
    return {s.begin(), s.end()};
}

void CircuitBuilder::begin_step(TimestepKind kind) {
    if (in_step_) throw std::logic_error("begin_step: already in a step");
    in_step_ = true;
    current_kind_ = kind;
    current_.clear();
}

void CircuitBuilder::push(BasicOp op) {
    if (!in_step_) throw std::logic_error("push: no open step");
    if (op.gate.kind == GateKind::Measure && !op.measurement_id)
        op.measurement_id = next_id_++;
    current_.push_back(std::move(op));
}

MeasurementId CircuitBuilder::measure(const Address& q) {
    MeasurementId id = next_id_++;
    BasicOp op;
    op.gate = GateSpec::simple(GateKind::Measure);
    op.qubits = {q};
    op.measurement_id = id;
    if (!in_step_) throw std::logic_error("measure: no open step");
    current_.push_back(std::move(op));
    return id;
}

void CircuitBuilder::end_step(bool keep_empty) {
    if (!in_step_) throw std::logic_error("end_step: no open step");
    in_step_ = false;
    if (current_.empty() && !keep_empty) return;
    circ_.timesteps.push_back(Timestep{std::move(current_), current_kind_});
    current_ = {};
}

void CircuitBuilder::push_step(std::vector<BasicOp> ops, TimestepKind kind) {
    begin_step(kind);
    for (auto& op : ops) push(std::move(op));
    end_step();
}

AdaptiveCircuit CircuitBuilder::finish(int n_inputs) {
    if (in_step_) throw std::logic_error("finish: step still open");
    circ_.n_inputs = n_inputs;
    circ_.measurement_count = next_id_;
    return std::move(circ_);
}

namespace {

// Hub-and-spokes shape for multi-qubit logical ops: every qubit adjacent to
// the gate's hub (target for MCX/CU, source for Fanout).
bool star_shaped(const BasicOp& op) {
    const Address& hub = op.qubits[0];
    for (size_t i = 1; i < op.qubits.size(); ++i)
        if (!adjacent(hub.point, op.qubits[i].point)) return false;
    return true;
}

}  // namespace

std::vector<Violation> validate(const AdaptiveCircuit& c) {
    std::vector<Violation> out;
    auto bad = [&out](int t, int o, std::string msg) {
        out.push_back(Violation{t, o, std::move(msg)});
    };

    const bool grid = c.model != Model::CCAC;
    std::set<MeasurementId> seen_ids;   // ids from earlier timesteps
    std::set<MeasurementId> all_ids;
    MeasurementId last_id = -1;

    for (int t = 0; t < static_cast<int>(c.timesteps.size()); ++t) {
        const Timestep& ts = c.timesteps[static_cast<size_t>(t)];
        std::set<Address> used;
        std::vector<MeasurementId> step_ids;
        for (int o = 0; o < static_cast<int>(ts.ops.size()); ++o) {
            const BasicOp& op = ts.ops[static_cast<size_t>(o)];
            const int arity = op.gate.arity();
            if (static_cast<int>(op.qubits.size()) != arity) {
                bad(t, o, "arity mismatch for " + op.str());
                continue;
            }
            std::set<Address> qs(op.qubits.begin(), op.qubits.end());
            if (static_cast<int>(qs.size()) != arity) bad(t, o, "duplicate qubit in " + op.str());
            for (const auto& q : op.qubits) {
                if (grid && q.abstract) bad(t, o, "abstract address in grid-model circuit");
                if (!grid && !q.abstract) bad(t, o, "grid address in CCAC circuit");
                if (grid && !q.abstract && q.point.dim() != c.dim)
                    bad(t, o, "address dimension mismatch at " + q.str());
                if (used.count(q)) bad(t, o, "non-disjoint ops: qubit " + q.str() + " reused");
            }
            used.insert(op.qubits.begin(), op.qubits.end());

            if (arity == 2 && grid && !op.qubits[0].abstract &&
                !adjacent(op.qubits[0].point, op.qubits[1].point))
                bad(t, o, "non-adjacent 2-qubit op " + op.str());
            if (arity > 2) {
                if (ts.kind != TimestepKind::Logical)
                    bad(t, o, "multi-qubit op in a physical timestep: " + op.str());
                if (c.model == Model::CCAC)
                    bad(t, o, "CCAC basic operations act on at most 2 qubits: " + op.str());
                if (grid) {
                    if (arity > std::max(2, c.dim + 2))
                        bad(t, o, "logical op too wide for dim: " + op.str());
                    if (!star_shaped(op)) bad(t, o, "logical op not hub-adjacent: " + op.str());
                }
            }
            if (op.gate.kind == GateKind::ControlledU && !is_unitary_2x2(op.gate.matrix))
                bad(t, o, "controlled-U payload not unitary");
            if (op.gate.kind == GateKind::Measure) {
                if (!op.measurement_id) {
                    bad(t, o, "measurement without id");
                } else {
                    if (all_ids.count(*op.measurement_id))
                        bad(t, o, "duplicate measurement id " + std::to_string(*op.measurement_id));
                    if (*op.measurement_id < last_id)
                        bad(t, o, "measurement ids not in timestep order");
                    all_ids.insert(*op.measurement_id);
                    step_ids.push_back(*op.measurement_id);
                }
            }
            if (op.condition && op.gate.kind != GateKind::CondPauli)
                bad(t, o, "condition on a non-Pauli gate");
            if (op.gate.kind == GateKind::CondPauli) {
                if (!op.condition) {
                    bad(t, o, "conditional Pauli without condition");
                } else {
                    if (c.model == Model::NANTC)
                        bad(t, o, "classically conditioned op in NANTC circuit");
                    for (const auto& set :
                         {op.condition->x_parity_of, op.condition->z_parity_of})
                        for (MeasurementId id : set)
                            if (!seen_ids.count(id))
                                bad(t, o,
                                    "condition references measurement " + std::to_string(id) +
                                        " not strictly earlier (causality)");
                }
            }
        }
        for (MeasurementId id : step_ids) {
            seen_ids.insert(id);
            last_id = std::max(last_id, id);
        }
    }
    return out;
}

std::string violations_to_string(const std::vector<Violation>& v) {
    std::ostringstream os;
    for (const auto& x : v)
        os << "t" << x.timestep << " op" << x.op << ": " << x.message << "\n";
    return os.str();
}

}  // namespace qgridc
