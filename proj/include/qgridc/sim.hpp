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

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "qgridc/circuit.hpp"

namespace qgridc {

/// Injectable measurement-outcome source so adaptive runs are reproducible.
class OutcomeSource {
public:
    virtual ~OutcomeSource() = default;
    /// Chooses an outcome given the probability of measuring 1.
    virtual int pick(double prob_one) = 0;
};

class SeededSource final : public OutcomeSource {
public:
    explicit SeededSource(uint64_t seed) : rng_(seed) {}
    int pick(double prob_one) override {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < prob_one ? 1 : 0;
    }

private:
    std::mt19937_64 rng_;
};

/// Replays a fixed outcome script; throws if the script asks for a branch of
/// probability ~0 or runs out.
class ScriptedSource final : public OutcomeSource {
public:
    explicit ScriptedSource(std::vector<int> bits) : bits_(std::move(bits)) {}
    int pick(double prob_one) override;

private:
    std::vector<int> bits_;
    size_t pos_ = 0;
};

using MeasurementRecord = std::map<MeasurementId, int>;

/// Parity of a measurement-id set under a record; unknown ids throw.
int record_parity(const MeasurementRecord& rec, const std::set<MeasurementId>& ids);

/// Address <-> dense index mapping (sorted address order).
class QubitMap {
public:
    QubitMap() = default;
    explicit QubitMap(std::vector<Address> addrs);
    static QubitMap from_circuit(const AdaptiveCircuit& c);

    int index(const Address& a) const;
    bool contains(const Address& a) const;
    int size() const { return static_cast<int>(addrs_.size()); }
    const std::vector<Address>& addresses() const { return addrs_; }

private:
    std::vector<Address> addrs_;
    std::map<Address, int> idx_;
};

// ---------------------------------------------------------------------------
// Boolean / target-vector simulator: every gate except single-qubit unitaries
// on one designated target must be a computational-basis permutation.
// ---------------------------------------------------------------------------

struct BooleanState {
    std::map<Address, uint8_t> bits;  // absent addresses read as 0
    std::optional<Address> target;
    std::array<cxd, 2> target_vec{cxd(1), cxd(0)};

    uint8_t bit(const Address& a) const {
        auto it = bits.find(a);
        return it == bits.end() ? 0 : it->second;
    }
    void set(const Address& a, uint8_t v) { bits[a] = v; }
};

BooleanState run_boolean(const AdaptiveCircuit& c, BooleanState initial);

// ---------------------------------------------------------------------------
// Dense state-vector simulator, qubit i = bit i of the amplitude index.
// ---------------------------------------------------------------------------

inline constexpr int kDenseQubitLimit = 24;

class DenseSim {
public:
    explicit DenseSim(int n);
    int n() const { return n_; }

    const std::vector<cxd>& amps() const { return amps_; }
    void set_state(std::vector<cxd> amps);  // checks normalization (1e-10)
    void set_basis_state(uint64_t bits);

    void apply1(int q, const Mat2& u);
    void cnot(int control, int target);
    void swap(int a, int b);
    void mcx(int target, const std::vector<int>& controls);
    void fanout(int source, const std::vector<int>& targets);
    void controlled_u(int target, const std::vector<int>& controls, const Mat2& u);
    int measure(int q, OutcomeSource& src);  // collapses and renormalizes
    double prob_one(int q) const;

    /// Applies one op; measurements record into rec, conditions read rec.
    void apply(const BasicOp& op, const QubitMap& map, MeasurementRecord& rec,
               OutcomeSource& src);

private:
    int n_;
    std::vector<cxd> amps_;
};

struct DenseRun {
    DenseSim state;
    MeasurementRecord record;
};

/// Runs a circuit from |0..0> or a provided initial state; the map defaults
/// to the circuit's touched addresses in sorted order.
DenseRun run_dense(const AdaptiveCircuit& c, const QubitMap& map,
                   const std::vector<cxd>* initial, OutcomeSource& src);

/// |<a|b>| over the full register.
double overlap_abs(const DenseSim& a, const DenseSim& b);

// ---------------------------------------------------------------------------
// Stabilizer tableau simulator (Clifford + measurement + conditional Pauli).
// ---------------------------------------------------------------------------

class StabilizerSim {
public:
    explicit StabilizerSim(int n);
    int n() const { return n_; }

    void h(int q);
    void s(int q);
    void sdg(int q);
    void x(int q);
    void y(int q);
    void z(int q);
    void cnot(int control, int target);
    void swap(int a, int b);
    int measure(int q, OutcomeSource& src);

    /// Outcome of a Z measurement if deterministic; nullopt when random.
    std::optional<int> deterministic_z(int q) const;

    /// True iff (-1)^sign * P stabilizes the state, for the single-qubit
    /// Pauli P in {X,Y,Z} on qubit q.
    bool stabilized_by_1q(int q, GateKind pauli, int sign) const;

    /// Row access (stabilizer rows are n..2n-1): x/z bit and sign.
    bool row_x(int row, int q) const { return x_[static_cast<size_t>(row)][static_cast<size_t>(q)]; }
    bool row_z(int row, int q) const { return z_[static_cast<size_t>(row)][static_cast<size_t>(q)]; }
    bool row_sign(int row) const { return r_[static_cast<size_t>(row)]; }

    void apply(const BasicOp& op, const QubitMap& map, MeasurementRecord& rec,
               OutcomeSource& src);

private:
    void rowsum(int h, int i);
    int n_;
    std::vector<std::vector<uint8_t>> x_, z_;
    std::vector<uint8_t> r_;
};

struct StabilizerRun {
    StabilizerSim state;
    MeasurementRecord record;
};

StabilizerRun run_stabilizer(const AdaptiveCircuit& c, const QubitMap& map, OutcomeSource& src,
                             const std::vector<BasicOp>* preparation = nullptr);

}  // namespace qgridc
