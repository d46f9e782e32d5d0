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
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgridc/geom.hpp"

namespace qgridc {

using MeasurementId = int32_t;
using cxd = std::complex<double>;
using Mat2 = std::array<cxd, 4>;  // row-major 2x2

/// Qubit address: a grid point in the nearest-neighbor models, or an
/// abstract integer index in CCAC mode.
struct Address {
    GridPoint point;        // for abstract addresses point.c = {index}
    bool abstract = false;

    static Address grid(GridPoint p) { return Address{std::move(p), false}; }
    static Address index(int32_t i) { return Address{GridPoint{i}, true}; }

    int32_t idx() const { return point.c.empty() ? 0 : point.c[0]; }
    bool operator==(const Address& o) const { return abstract == o.abstract && point == o.point; }
    bool operator!=(const Address& o) const { return !(*this == o); }
    bool operator<(const Address& o) const {
        if (abstract != o.abstract) return abstract < o.abstract;
        return point < o.point;
    }
    std::string str() const { return abstract ? "q" + std::to_string(idx()) : point.str(); }
};

enum class GateKind {
    H, X, Y, Z, S, Sdg,
    CNOT,      // qubits: [control, target]
    SWAP,
    MCX,       // qubits: [target, c1..ck], 1 <= k <= 4 (k <= 3 on grids)
    ControlledU,  // qubits: [target, c1..ck], 0 <= k <= 3; 2x2 payload
    Fanout,    // qubits: [source, t1..tk], 1 <= k <= 4 (k <= 3 on grids)
    Measure,   // computational basis; carries a MeasurementId
    CondPauli, // X^(parity of x set) * Z^(parity of z set)
};

const char* gate_kind_name(GateKind k);

struct GateSpec {
    GateKind kind = GateKind::X;
    int controls = 0;     // MCX / ControlledU
    int targets = 1;      // Fanout
    Mat2 matrix{};        // ControlledU payload
    std::string label;    // optional display name for the payload

    static GateSpec simple(GateKind k) { return GateSpec{k, 0, 1, {}, {}}; }
    static GateSpec mcx(int n_controls) { return GateSpec{GateKind::MCX, n_controls, 1, {}, {}}; }
    static GateSpec fanout(int n_targets) { return GateSpec{GateKind::Fanout, 0, n_targets, {}, {}}; }
    static GateSpec controlled_u(int n_controls, const Mat2& u, std::string label = "U");

    /// Number of qubits the gate acts on.
    int arity() const;
    bool operator==(const GateSpec& o) const;
};

/// Matrix helpers for the named gates.
Mat2 gate_matrix_1q(GateKind k);
bool is_unitary_2x2(const Mat2& u, double tol = 1e-12);
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_dagger(const Mat2& a);
Mat2 mat2_sqrt(const Mat2& u);  // principal square root of a 2x2 unitary

struct ClassicalCondition {
    std::set<MeasurementId> x_parity_of;
    std::set<MeasurementId> z_parity_of;

    bool empty() const { return x_parity_of.empty() && z_parity_of.empty(); }
    bool operator==(const ClassicalCondition& o) const {
        return x_parity_of == o.x_parity_of && z_parity_of == o.z_parity_of;
    }
};

struct BasicOp {
    GateSpec gate;
    std::vector<Address> qubits;
    std::optional<ClassicalCondition> condition;  // CondPauli only
    std::optional<MeasurementId> measurement_id;  // Measure only
    bool mirrored = false;  // uncompute-half instance; picks the dagger-paired
                            // physical decomposition, same logical action

    std::string str() const;
};

enum class TimestepKind { Physical, Logical };

struct Timestep {
    std::vector<BasicOp> ops;
    TimestepKind kind = TimestepKind::Physical;
};

enum class Model { NANTC, CCAC, CCNTC };

const char* model_name(Model m);

struct AdaptiveCircuit {
    Model model = Model::CCNTC;
    int dim = 2;
    std::vector<Timestep> timesteps;
    int n_inputs = 0;
    int measurement_count = 0;

    /// All distinct addresses touched by any op.
    std::vector<Address> touched() const;
};

/// Single-owner builder. Measurement ids are issued in emission order.
class CircuitBuilder {
public:
    CircuitBuilder(Model model, int dim) {
        circ_.model = model;
        circ_.dim = dim;
    }

    void begin_step(TimestepKind kind = TimestepKind::Physical);
    void push(BasicOp op);
    /// Ends the current step. Empty steps are kept only if keep_empty is set;
    /// fixed-frame generators use that to emit constant-depth schedules.
    void end_step(bool keep_empty = false);

    void push_step(std::vector<BasicOp> ops, TimestepKind kind = TimestepKind::Physical);

    MeasurementId measure(const Address& q);  // pushes into the current step
    MeasurementId next_measurement_id() const { return next_id_; }

    AdaptiveCircuit finish(int n_inputs);

private:
    AdaptiveCircuit circ_;
    std::vector<BasicOp> current_;
    bool in_step_ = false;
    TimestepKind current_kind_ = TimestepKind::Physical;
    MeasurementId next_id_ = 0;
};

struct Violation {
    int timestep = -1;  // -1: circuit-level
    int op = -1;
    std::string message;
};

/// Model-validity check per the timestep/adjacency/causality rules. Returns
/// an empty list iff the circuit is valid; never throws.
std::vector<Violation> validate(const AdaptiveCircuit& c);

std::string violations_to_string(const std::vector<Violation>& v);

}  // namespace qgridc
