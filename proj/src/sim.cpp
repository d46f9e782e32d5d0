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

#include "qgridc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgridc {

int ScriptedSource::pick(double prob_one) {
    if (pos_ >= bits_.size()) throw std::runtime_error("scripted outcomes exhausted");
    int b = bits_[pos_++];
    if ((b == 1 && prob_one < 1e-12) || (b == 0 && prob_one > 1.0 - 1e-12))
        throw std::runtime_error("scripted outcome selects a zero-probability branch");
    return b;
}

int record_parity(const MeasurementRecord& rec, const std::set<MeasurementId>& ids) {
    int p = 0;
    for (MeasurementId id : ids) {
        auto it = rec.find(id);
        if (it == rec.end())
            throw std::runtime_error("condition references unrecorded measurement " +
                                     std::to_string(id));
        p ^= it->second & 1;
    }
    return p;
}

QubitMap::QubitMap(std::vector<Address> addrs) : addrs_(std::move(addrs)) {
    std::sort(addrs_.begin(), addrs_.end());
    addrs_.erase(std::unique(addrs_.begin(), addrs_.end()), addrs_.end());
    for (int i = 0; i < static_cast<int>(addrs_.size()); ++i) idx_[addrs_[static_cast<size_t>(i)]] = i;
}

QubitMap QubitMap::from_circuit(const AdaptiveCircuit& c) { return QubitMap(c.touched()); }

int QubitMap::index(const Address& a) const {
    auto it = idx_.find(a);
    if (it == idx_.end()) throw std::out_of_range("address not in qubit map: " + a.str());
    return it->second;
}

bool QubitMap::contains(const Address& a) const { return idx_.count(a) > 0; }

// ---------------------------------------------------------------------------
// Boolean simulator
// ---------------------------------------------------------------------------

BooleanState run_boolean(const AdaptiveCircuit& c, BooleanState st) {
    auto is_target = [&st](const Address& a) { return st.target && *st.target == a; };
    auto apply_vec = [&st](const Mat2& u) {
        auto v = st.target_vec;
        st.target_vec = {u[0] * v[0] + u[1] * v[1], u[2] * v[0] + u[3] * v[1]};
    };
    for (const auto& ts : c.timesteps) {
        for (const auto& op : ts.ops) {
            switch (op.gate.kind) {
                case GateKind::X:
                    if (is_target(op.qubits[0]))
                        apply_vec(gate_matrix_1q(GateKind::X));
                    else
                        st.set(op.qubits[0], st.bit(op.qubits[0]) ^ 1);
                    break;
                case GateKind::CNOT: {
                    if (is_target(op.qubits[0]) || is_target(op.qubits[1]))
                        throw std::runtime_error("boolean sim: CNOT touches the target qubit");
                    uint8_t cbit = st.bit(op.qubits[0]);
                    if (cbit) st.set(op.qubits[1], st.bit(op.qubits[1]) ^ 1);
                    break;
                }
                case GateKind::SWAP: {
                    if (is_target(op.qubits[0]) || is_target(op.qubits[1]))
                        throw std::runtime_error("boolean sim: SWAP touches the target qubit");
                    uint8_t a = st.bit(op.qubits[0]), b = st.bit(op.qubits[1]);
                    st.set(op.qubits[0], b);
                    st.set(op.qubits[1], a);
                    break;
                }
                case GateKind::MCX: {
                    uint8_t all = 1;
                    for (size_t i = 1; i < op.qubits.size(); ++i) {
                        if (is_target(op.qubits[i]))
                            throw std::runtime_error("boolean sim: MCX control on the target");
                        all &= st.bit(op.qubits[i]);
                    }
                    if (is_target(op.qubits[0])) {
                        if (all) apply_vec(gate_matrix_1q(GateKind::X));
                    } else if (all) {
                        st.set(op.qubits[0], st.bit(op.qubits[0]) ^ 1);
                    }
                    break;
                }
                case GateKind::Fanout: {
                    if (is_target(op.qubits[0]))
                        throw std::runtime_error("boolean sim: fanout sourced at the target");
                    uint8_t src = st.bit(op.qubits[0]);
                    for (size_t i = 1; i < op.qubits.size(); ++i) {
                        if (is_target(op.qubits[i]))
                            throw std::runtime_error("boolean sim: fanout hits the target");
                        if (src) st.set(op.qubits[i], st.bit(op.qubits[i]) ^ 1);
                    }
                    break;
                }
                case GateKind::ControlledU: {
                    if (!is_target(op.qubits[0]))
                        throw std::runtime_error(
                            "boolean sim: unsupported gate on a non-target qubit: " + op.str());
                    uint8_t all = 1;
                    for (size_t i = 1; i < op.qubits.size(); ++i) all &= st.bit(op.qubits[i]);
                    if (all) apply_vec(op.gate.matrix);
                    break;
                }
                case GateKind::H:
                case GateKind::Y:
                case GateKind::Z:
                case GateKind::S:
                case GateKind::Sdg:
                    if (!is_target(op.qubits[0]))
                        throw std::runtime_error(
                            "boolean sim: unsupported gate on a non-target qubit: " + op.str());
                    apply_vec(gate_matrix_1q(op.gate.kind));
                    break;
                default:
                    throw std::runtime_error("boolean sim: unsupported op " + op.str());
            }
        }
    }
    return st;
}

// ---------------------------------------------------------------------------
// Dense simulator
// ---------------------------------------------------------------------------

DenseSim::DenseSim(int n) : n_(n) {
    if (n < 1 || n > kDenseQubitLimit)
        throw std::invalid_argument("dense sim: qubit budget is 1.." +
                                    std::to_string(kDenseQubitLimit));
    amps_.assign(size_t{1} << n, cxd(0));
    amps_[0] = cxd(1);
}

void DenseSim::set_state(std::vector<cxd> amps) {
    if (amps.size() != amps_.size()) throw std::invalid_argument("set_state: bad length");
    double norm = 0;
    for (const auto& a : amps) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::invalid_argument("set_state: state not normalized");
    amps_ = std::move(amps);
}

void DenseSim::set_basis_state(uint64_t bits) {
    std::fill(amps_.begin(), amps_.end(), cxd(0));
    amps_[bits] = cxd(1);
}

void DenseSim::apply1(int q, const Mat2& u) {
    const uint64_t bit = uint64_t{1} << q;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        cxd a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = u[0] * a0 + u[1] * a1;
        amps_[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

void DenseSim::cnot(int control, int target) {
    const uint64_t cb = uint64_t{1} << control, tb = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
}

void DenseSim::swap(int a, int b) {
    const uint64_t ab = uint64_t{1} << a, bb = uint64_t{1} << b;
    for (uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & ab) && !(i & bb)) std::swap(amps_[i], amps_[(i & ~ab) | bb]);
}

void DenseSim::mcx(int target, const std::vector<int>& controls) {
    uint64_t mask = 0;
    for (int c : controls) mask |= uint64_t{1} << c;
    const uint64_t tb = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == mask && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
}

void DenseSim::fanout(int source, const std::vector<int>& targets) {
    const uint64_t sb = uint64_t{1} << source;
    uint64_t tmask = 0;
    for (int t : targets) tmask |= uint64_t{1} << t;
    std::vector<cxd> out(amps_.size());
    for (uint64_t i = 0; i < amps_.size(); ++i)
        out[(i & sb) ? i ^ tmask : i] = amps_[i];
    amps_ = std::move(out);
}

void DenseSim::controlled_u(int target, const std::vector<int>& controls, const Mat2& u) {
    uint64_t mask = 0;
    for (int c : controls) mask |= uint64_t{1} << c;
    const uint64_t tb = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) != mask || (i & tb)) continue;
        cxd a0 = amps_[i], a1 = amps_[i | tb];
        amps_[i] = u[0] * a0 + u[1] * a1;
        amps_[i | tb] = u[2] * a0 + u[3] * a1;
    }
}

double DenseSim::prob_one(int q) const {
    const uint64_t bit = uint64_t{1} << q;
    double p = 0;
    for (uint64_t i = 0; i < amps_.size(); ++i)
        if (i & bit) p += std::norm(amps_[i]);
    return p;
}

int DenseSim::measure(int q, OutcomeSource& src) {
    double p1 = prob_one(q);
    int outcome = src.pick(p1);
    const uint64_t bit = uint64_t{1} << q;
    double keep = outcome ? p1 : 1.0 - p1;
    if (keep < 1e-300) throw std::runtime_error("measure: collapsing onto zero-norm branch");
    double scale = 1.0 / std::sqrt(keep);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        bool one = (i & bit) != 0;
        if (one == (outcome == 1))
            amps_[i] *= scale;
        else
            amps_[i] = cxd(0);
    }
    return outcome;
}

void DenseSim::apply(const BasicOp& op, const QubitMap& map, MeasurementRecord& rec,
                     OutcomeSource& src) {
    auto qi = [&](size_t k) { return map.index(op.qubits[k]); };
    switch (op.gate.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
            apply1(qi(0), gate_matrix_1q(op.gate.kind));
            break;
        case GateKind::CNOT:
            cnot(qi(0), qi(1));
            break;
        case GateKind::SWAP:
            swap(qi(0), qi(1));
            break;
        case GateKind::MCX: {
            std::vector<int> cs;
            for (size_t i = 1; i < op.qubits.size(); ++i) cs.push_back(qi(i));
            mcx(qi(0), cs);
            break;
        }
        case GateKind::Fanout: {
            std::vector<int> tsx;
            for (size_t i = 1; i < op.qubits.size(); ++i) tsx.push_back(qi(i));
            fanout(qi(0), tsx);
            break;
        }
        case GateKind::ControlledU: {
            std::vector<int> cs;
            for (size_t i = 1; i < op.qubits.size(); ++i) cs.push_back(qi(i));
            controlled_u(qi(0), cs, op.gate.matrix);
            break;
        }
        case GateKind::Measure:
            rec[*op.measurement_id] = measure(qi(0), src);
            break;
        case GateKind::CondPauli: {
            int xp = record_parity(rec, op.condition->x_parity_of);
            int zp = record_parity(rec, op.condition->z_parity_of);
            if (xp) apply1(qi(0), gate_matrix_1q(GateKind::X));
            if (zp) apply1(qi(0), gate_matrix_1q(GateKind::Z));
            break;
        }
    }
}

DenseRun run_dense(const AdaptiveCircuit& c, const QubitMap& map, const std::vector<cxd>* initial,
                   OutcomeSource& src) {
    DenseRun run{DenseSim(std::max(map.size(), 1)), {}};
    if (initial) run.state.set_state(*initial);
    for (const auto& ts : c.timesteps)
        for (const auto& op : ts.ops) run.state.apply(op, map, run.record, src);
    return run;
}

double overlap_abs(const DenseSim& a, const DenseSim& b) {
    if (a.amps().size() != b.amps().size()) throw std::invalid_argument("overlap: size mismatch");
    cxd s(0);
    for (size_t i = 0; i < a.amps().size(); ++i) s += std::conj(a.amps()[i]) * b.amps()[i];
    return std::abs(s);
}

// ---------------------------------------------------------------------------
// Stabilizer simulator (Aaronson-Gottesman tableau)
// ---------------------------------------------------------------------------

StabilizerSim::StabilizerSim(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("stabilizer sim: need at least one qubit");
    const size_t rows = 2 * static_cast<size_t>(n);
    x_.assign(rows, std::vector<uint8_t>(static_cast<size_t>(n), 0));
    z_.assign(rows, std::vector<uint8_t>(static_cast<size_t>(n), 0));
    r_.assign(rows, 0);
    for (int i = 0; i < n; ++i) {
        x_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;                       // destabilizer X_i
        z_[static_cast<size_t>(n + i)][static_cast<size_t>(i)] = 1;                   // stabilizer Z_i
    }
}

void StabilizerSim::h(int q) {
    for (size_t i = 0; i < r_.size(); ++i) {
        r_[i] ^= x_[i][static_cast<size_t>(q)] & z_[i][static_cast<size_t>(q)];
        std::swap(x_[i][static_cast<size_t>(q)], z_[i][static_cast<size_t>(q)]);
    }
}

void StabilizerSim::s(int q) {
    for (size_t i = 0; i < r_.size(); ++i) {
        r_[i] ^= x_[i][static_cast<size_t>(q)] & z_[i][static_cast<size_t>(q)];
        z_[i][static_cast<size_t>(q)] ^= x_[i][static_cast<size_t>(q)];
    }
}

void StabilizerSim::sdg(int q) { s(q); s(q); s(q); }

void StabilizerSim::x(int q) {
    for (size_t i = 0; i < r_.size(); ++i) r_[i] ^= z_[i][static_cast<size_t>(q)];
}

void StabilizerSim::z(int q) {
    for (size_t i = 0; i < r_.size(); ++i) r_[i] ^= x_[i][static_cast<size_t>(q)];
}

void StabilizerSim::y(int q) {
    for (size_t i = 0; i < r_.size(); ++i)
        r_[i] ^= x_[i][static_cast<size_t>(q)] ^ z_[i][static_cast<size_t>(q)];
}

void StabilizerSim::cnot(int control, int target) {
    const size_t a = static_cast<size_t>(control), b = static_cast<size_t>(target);
    for (size_t i = 0; i < r_.size(); ++i) {
        r_[i] ^= x_[i][a] & z_[i][b] & (x_[i][b] ^ z_[i][a] ^ 1);
        x_[i][b] ^= x_[i][a];
        z_[i][a] ^= z_[i][b];
    }
}

void StabilizerSim::swap(int a, int b) {
    for (size_t i = 0; i < r_.size(); ++i) {
        std::swap(x_[i][static_cast<size_t>(a)], x_[i][static_cast<size_t>(b)]);
        std::swap(z_[i][static_cast<size_t>(a)], z_[i][static_cast<size_t>(b)]);
    }
}

namespace {
// Phase exponent contribution of multiplying single-qubit Paulis (x1,z1)*(x2,z2).
int g_phase(int x1, int z1, int x2, int z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return z2 - x2;          // Y * P
    if (x1 && !z1) return z2 * (2 * x2 - 1);  // X * P
    return x2 * (1 - 2 * z2);              // Z * P
}
}  // namespace

void StabilizerSim::rowsum(int h, int i) {
    const size_t hh = static_cast<size_t>(h), ii = static_cast<size_t>(i);
    int ph = 2 * r_[hh] + 2 * r_[ii];
    for (int j = 0; j < n_; ++j) {
        const size_t jj = static_cast<size_t>(j);
        ph += g_phase(x_[ii][jj], z_[ii][jj], x_[hh][jj], z_[hh][jj]);
        x_[hh][jj] ^= x_[ii][jj];
        z_[hh][jj] ^= z_[ii][jj];
    }
    ph = ((ph % 4) + 4) % 4;
    r_[hh] = static_cast<uint8_t>(ph == 2);
}

std::optional<int> StabilizerSim::deterministic_z(int q) const {
    for (int p = n_; p < 2 * n_; ++p)
        if (x_[static_cast<size_t>(p)][static_cast<size_t>(q)]) return std::nullopt;
    // Deterministic: accumulate destabilizer-indexed stabilizer product into
    // a scratch row (textbook 2n-th row computation).
    StabilizerSim tmp(*this);
    tmp.x_.push_back(std::vector<uint8_t>(static_cast<size_t>(n_), 0));
    tmp.z_.push_back(std::vector<uint8_t>(static_cast<size_t>(n_), 0));
    tmp.r_.push_back(0);
    const int scratch = 2 * n_;
    for (int i = 0; i < n_; ++i)
        if (tmp.x_[static_cast<size_t>(i)][static_cast<size_t>(q)]) tmp.rowsum(scratch, i + n_);
    return tmp.r_[static_cast<size_t>(scratch)] ? 1 : 0;
}

int StabilizerSim::measure(int q, OutcomeSource& src) {
    const size_t qq = static_cast<size_t>(q);
    int p = -1;
    for (int i = n_; i < 2 * n_; ++i)
        if (x_[static_cast<size_t>(i)][qq]) {
            p = i;
            break;
        }
    if (p >= 0) {
        // Random outcome.
        int outcome = src.pick(0.5);
        for (int i = 0; i < 2 * n_; ++i)
            if (i != p && x_[static_cast<size_t>(i)][qq]) rowsum(i, p);
        x_[static_cast<size_t>(p - n_)] = x_[static_cast<size_t>(p)];
        z_[static_cast<size_t>(p - n_)] = z_[static_cast<size_t>(p)];
        r_[static_cast<size_t>(p - n_)] = r_[static_cast<size_t>(p)];
        std::fill(x_[static_cast<size_t>(p)].begin(), x_[static_cast<size_t>(p)].end(), 0);
        std::fill(z_[static_cast<size_t>(p)].begin(), z_[static_cast<size_t>(p)].end(), 0);
        z_[static_cast<size_t>(p)][qq] = 1;
        r_[static_cast<size_t>(p)] = static_cast<uint8_t>(outcome);
        return outcome;
    }
    auto det = deterministic_z(q);
    return *det;
}

bool StabilizerSim::stabilized_by_1q(int q, GateKind pauli, int sign) const {
    StabilizerSim tmp(*this);
    // Rotate the Pauli onto Z_q, then ask for a deterministic Z outcome.
    switch (pauli) {
        case GateKind::Z: break;
        case GateKind::X: tmp.h(q); break;
        case GateKind::Y: tmp.sdg(q); tmp.h(q); break;
        default: throw std::invalid_argument("stabilized_by_1q: expected X, Y or Z");
    }
    auto det = tmp.deterministic_z(q);
    if (!det) return false;
    return *det == (sign < 0 ? 1 : 0);
}

void StabilizerSim::apply(const BasicOp& op, const QubitMap& map, MeasurementRecord& rec,
                          OutcomeSource& src) {
    auto qi = [&](size_t k) { return map.index(op.qubits[k]); };
    switch (op.gate.kind) {
        case GateKind::H: h(qi(0)); break;
        case GateKind::X: x(qi(0)); break;
        case GateKind::Y: y(qi(0)); break;
        case GateKind::Z: z(qi(0)); break;
        case GateKind::S: s(qi(0)); break;
        case GateKind::Sdg: sdg(qi(0)); break;
        case GateKind::CNOT: cnot(qi(0), qi(1)); break;
        case GateKind::SWAP: swap(qi(0), qi(1)); break;
        case GateKind::Measure: rec[*op.measurement_id] = measure(qi(0), src); break;
        case GateKind::CondPauli: {
            int xp = record_parity(rec, op.condition->x_parity_of);
            int zp = record_parity(rec, op.condition->z_parity_of);
            if (xp) x(qi(0));
            if (zp) z(qi(0));
            break;
        }
        case GateKind::MCX:
            if (op.qubits.size() == 2) {
                cnot(qi(1), qi(0));
                break;
            }
            throw std::runtime_error("stabilizer sim: non-Clifford gate " + op.str());
        default:
            throw std::runtime_error("stabilizer sim: non-Clifford gate " + op.str());
    }
}

StabilizerRun run_stabilizer(const AdaptiveCircuit& c, const QubitMap& map, OutcomeSource& src,
                             const std::vector<BasicOp>* preparation) {
    StabilizerRun run{StabilizerSim(std::max(map.size(), 1)), {}};
    if (preparation)
        for (const auto& op : *preparation) run.state.apply(op, map, run.record, src);
    for (const auto& ts : c.timesteps)
        for (const auto& op : ts.ops) run.state.apply(op, map, run.record, src);
    return run;
}

}  // namespace qgridc
