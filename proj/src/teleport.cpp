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

#include "qgridc/teleport.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgridc {

namespace {

BasicOp gate1(GateKind k, GridPoint p) {
    BasicOp op;
    op.gate = GateSpec::simple(k);
    op.qubits = {Address::grid(std::move(p))};
    return op;
}

BasicOp gate2(GateKind k, GridPoint a, GridPoint b) {
    BasicOp op;
    op.gate = GateSpec::simple(k);
    op.qubits = {Address::grid(std::move(a)), Address::grid(std::move(b))};
    return op;
}

BasicOp cond_pauli(GridPoint p, ClassicalCondition cond) {
    BasicOp op;
    op.gate = GateSpec::simple(GateKind::CondPauli);
    op.qubits = {Address::grid(std::move(p))};
    op.condition = std::move(cond);
    return op;
}

void check_line(const std::vector<GridPoint>& line) {
    if (line.size() < 2) return;
    const int dim = line[0].dim();
    int axis = -1;
    for (size_t i = 1; i < line.size(); ++i) {
        if (!adjacent(line[i - 1], line[i]))
            throw std::invalid_argument("chain points must be consecutive-adjacent");
        for (int d = 0; d < dim; ++d)
            if (line[i][d] != line[i - 1][d]) {
                if (axis == -1) axis = d;
                if (axis != d) throw std::invalid_argument("chain points must be collinear");
            }
    }
}

// A teleport phase: several disjoint chains scheduled into one fixed frame
// of kChainFrameSlots physical timesteps. Bell measurements of all chains
// land in the same layer so they run in parallel.
class ChainFrame {
public:
    explicit ChainFrame(CircuitBuilder& b) : b_(b) {}

    void add_chain(const std::vector<GridPoint>& line) {
        check_line(line);
        if (line.size() < 2) return;
        size_t d = line.size() - 1;
        size_t end = d;
        if (d == 1) {
            slot(kSwap).push_back(gate2(GateKind::SWAP, line[0], line[1]));
            return;
        }
        if (d % 2 == 1) {
            // teleport over the even prefix, finish with one SWAP
            end = d - 1;
            slot(kSwap).push_back(gate2(GateKind::SWAP, line[end], line[d]));
        }
        std::vector<BellOutcome> outcomes;
        std::vector<std::pair<GridPoint, MeasurementId>> measured;
        for (size_t i = 1; i + 1 <= end; i += 2) {
            slot(kPrepH).push_back(gate1(GateKind::H, line[i]));
            slot(kPrepCnot).push_back(gate2(GateKind::CNOT, line[i], line[i + 1]));
        }
        for (size_t i = 0; i + 1 < end; i += 2) {
            slot(kMeasCnot).push_back(gate2(GateKind::CNOT, line[i], line[i + 1]));
            slot(kMeasH).push_back(gate1(GateKind::H, line[i]));
            BellOutcome o;
            o.phase_id = b_.next_measurement_id() + static_cast<MeasurementId>(pending_.size());
            pending_.push_back(line[i]);
            o.flip_id = b_.next_measurement_id() + static_cast<MeasurementId>(pending_.size());
            pending_.push_back(line[i + 1]);
            outcomes.push_back(o);
            measured.emplace_back(line[i], o.phase_id);
            measured.emplace_back(line[i + 1], o.flip_id);
        }
        slot(kCorrect).push_back(
            cond_pauli(line[end], correction_condition(outcomes)));
        for (auto& [p, id] : measured) {
            ClassicalCondition reset;
            reset.x_parity_of = {id};
            slot(kReset).push_back(cond_pauli(p, std::move(reset)));
        }
    }

    /// Emits the full frame; every slot becomes one physical timestep, empty
    /// slots included, so the phase depth is the same for every job mix.
    void flush() {
        for (int s = 0; s < kChainFrameSlots; ++s) {
            b_.begin_step(TimestepKind::Physical);
            if (s == kMeasure) {
                for (const auto& p : pending_) {
                    BasicOp m;
                    m.gate = GateSpec::simple(GateKind::Measure);
                    m.qubits = {Address::grid(p)};
                    b_.push(std::move(m));  // builder assigns sequential ids
                }
            } else {
                for (auto& op : slots_[static_cast<size_t>(s)]) b_.push(std::move(op));
            }
            b_.end_step(/*keep_empty=*/true);
        }
        for (auto& s : slots_) s.clear();
        pending_.clear();
    }

private:
    enum Slot { kPrepH = 0, kPrepCnot, kMeasCnot, kMeasH, kMeasure, kCorrect, kSwap, kReset };

    std::vector<BasicOp>& slot(int s) { return slots_[static_cast<size_t>(s)]; }

    CircuitBuilder& b_;
    std::array<std::vector<BasicOp>, kChainFrameSlots> slots_;
    std::vector<GridPoint> pending_;  // measurement layer, in id order
};

}  // namespace

void emit_bell_pair(CircuitBuilder& b, const GridPoint& pa, const GridPoint& pb) {
    if (!adjacent(pa, pb)) throw std::invalid_argument("bell pair endpoints must be adjacent");
    b.push_step({gate1(GateKind::H, pa)});
    b.push_step({gate2(GateKind::CNOT, pa, pb)});
}

BellOutcome emit_bell_measure(CircuitBuilder& b, const GridPoint& pa, const GridPoint& pb) {
    if (!adjacent(pa, pb)) throw std::invalid_argument("bell measure endpoints must be adjacent");
    b.push_step({gate2(GateKind::CNOT, pa, pb)});
    b.push_step({gate1(GateKind::H, pa)});
    b.begin_step();
    BellOutcome o;
    o.phase_id = b.measure(Address::grid(pa));
    o.flip_id = b.measure(Address::grid(pb));
    b.end_step();
    return o;
}

void emit_reset(CircuitBuilder& b,
                const std::vector<std::pair<GridPoint, MeasurementId>>& measured) {
    b.begin_step();
    for (const auto& [p, id] : measured) {
        ClassicalCondition cond;
        cond.x_parity_of = {id};
        b.push(cond_pauli(p, std::move(cond)));
    }
    b.end_step();
}

void emit_chain(CircuitBuilder& b, const std::vector<GridPoint>& line) {
    ChainFrame frame(b);
    frame.add_chain(line);
    frame.flush();
}

void validate_reorder_spec(const ReorderSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("reorder: n must be positive");
    std::set<int> image;
    for (int j : spec.T) {
        if (j < 0 || j >= spec.n) throw std::invalid_argument("reorder: row index out of range");
        auto it = spec.pi.find(j);
        if (it == spec.pi.end()) throw std::invalid_argument("reorder: pi missing a row in T");
        if (it->second < 0 || it->second >= spec.n)
            throw std::invalid_argument("reorder: target column out of range");
        if (!image.insert(it->second).second)
            throw std::invalid_argument("reorder: pi is not injective");
    }
    for (const auto& [j, col] : spec.pi)
        if (!spec.T.count(j)) throw std::invalid_argument("reorder: pi defined outside T");
    for (int j : spec.T) {
        if (spec.pi.at(j) != 0) continue;
        for (int k = 0; k < j; ++k)
            if (!spec.T.count(k))
                throw std::invalid_argument(
                    "reorder: pi(j)=0 requires every lower row to be in T");
    }
}

namespace {

std::vector<GridPoint> row_line(int j, int x_from, int x_to) {
    std::vector<GridPoint> line;
    int step = x_from <= x_to ? 1 : -1;
    for (int x = x_from;; x += step) {
        line.push_back(GridPoint{x, j});
        if (x == x_to) break;
    }
    return line;
}

std::vector<GridPoint> col_line(int col, int y_from, int y_to) {
    std::vector<GridPoint> line;
    int step = y_from <= y_to ? 1 : -1;
    for (int y = y_from;; y += step) {
        line.push_back(GridPoint{col, y});
        if (y == y_to) break;
    }
    return line;
}

void emit_reorder_phases(CircuitBuilder& b, const ReorderSpec& spec, bool reversed) {
    if (spec.T.empty()) return;
    if (!reversed) {
        ChainFrame horizontal(b);
        for (int j : spec.T) horizontal.add_chain(row_line(j, 0, spec.pi.at(j)));
        horizontal.flush();
        ChainFrame vertical(b);
        for (int j : spec.T) vertical.add_chain(col_line(spec.pi.at(j), j, 0));
        vertical.flush();
    } else {
        ChainFrame vertical(b);
        for (int j : spec.T) vertical.add_chain(col_line(spec.pi.at(j), 0, j));
        vertical.flush();
        ChainFrame horizontal(b);
        for (int j : spec.T) horizontal.add_chain(row_line(j, spec.pi.at(j), 0));
        horizontal.flush();
    }
}

}  // namespace

AdaptiveCircuit reorder(const ReorderSpec& spec) {
    validate_reorder_spec(spec);
    CircuitBuilder b(Model::CCNTC, 2);
    emit_reorder_phases(b, spec, /*reversed=*/false);
    return b.finish(spec.n);
}

void validate_interaction_spec(const InteractionSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("interact: n must be positive");
    std::set<int32_t> used;
    bool seen_pair = false;
    for (const auto& item : spec.items) {
        if (item.qubits.empty() || item.qubits.size() > 2)
            throw std::invalid_argument("interact: J sets have one or two elements");
        if (item.qubits.size() == 1 && seen_pair)
            throw std::invalid_argument("interact: singletons must precede pairs");
        if (item.qubits.size() == 2) seen_pair = true;
        for (int32_t q : item.qubits) {
            if (q < 0 || q >= spec.n) throw std::invalid_argument("interact: index out of range");
            if (!used.insert(q).second)
                throw std::invalid_argument("interact: overlapping J sets");
        }
        if (item.gate.arity() != static_cast<int>(item.qubits.size()))
            throw std::invalid_argument("interact: gate arity does not match |J|");
    }
}

ReorderSpec interaction_targets(const InteractionSpec& spec) {
    ReorderSpec r;
    r.n = spec.n;
    int i = 0;
    for (const auto& item : spec.items) {
        if (item.qubits.size() == 1) {
            i = 1;
        } else {
            int32_t j1 = std::min(item.qubits[0], item.qubits[1]);
            int32_t j2 = std::max(item.qubits[0], item.qubits[1]);
            r.pi[j1] = i;
            r.pi[j2] = i + 1;
            r.T.insert(j1);
            r.T.insert(j2);
            i += 2;
        }
    }
    return r;
}

namespace {

void emit_interact_into(CircuitBuilder& b, const InteractionSpec& spec,
                        std::map<MeasurementId, MeasurementId>* id_map) {
    validate_interaction_spec(spec);
    ReorderSpec targets = interaction_targets(spec);
    validate_reorder_spec(targets);

    emit_reorder_phases(b, targets, /*reversed=*/false);

    b.begin_step();
    int i = 0;
    for (const auto& item : spec.items) {
        BasicOp op;
        op.gate = item.gate;
        op.condition = item.condition;
        if (item.qubits.size() == 1) {
            op.qubits = {Address::grid(GridPoint{0, item.qubits[0]})};
            i = 1;
        } else {
            int32_t j1 = std::min(item.qubits[0], item.qubits[1]);
            GridPoint p1{i, 0}, p2{i + 1, 0};
            // keep the caller's qubit order
            if (item.qubits[0] == j1)
                op.qubits = {Address::grid(p1), Address::grid(p2)};
            else
                op.qubits = {Address::grid(p2), Address::grid(p1)};
            i += 2;
        }
        if (op.gate.kind == GateKind::Measure) {
            MeasurementId out_id = b.next_measurement_id();
            if (id_map && item.measurement_id) (*id_map)[*item.measurement_id] = out_id;
        }
        b.push(std::move(op));
    }
    b.end_step(/*keep_empty=*/true);

    emit_reorder_phases(b, targets, /*reversed=*/true);
}

}  // namespace

AdaptiveCircuit interact(const InteractionSpec& spec) {
    CircuitBuilder b(Model::CCNTC, 2);
    emit_interact_into(b, spec, nullptr);
    return b.finish(spec.n);
}

AdaptiveCircuit simulate_ccac(const AdaptiveCircuit& ccac) {
    if (ccac.model != Model::CCAC)
        throw std::invalid_argument("simulate_ccac: input must be a CCAC circuit");
    {
        auto v = validate(ccac);
        if (!v.empty())
            throw std::invalid_argument("simulate_ccac: invalid input circuit:\n" +
                                        violations_to_string(v));
    }
    const int n = ccac.n_inputs;
    CircuitBuilder b(Model::CCNTC, 2);
    std::map<MeasurementId, MeasurementId> id_map;

    for (const auto& ts : ccac.timesteps) {
        InteractionSpec spec;
        spec.n = n;
        for (const auto& op : ts.ops) {
            if (op.gate.arity() > 2)
                throw std::invalid_argument("simulate_ccac: input op of arity > 2");
            InteractionItem item;
            item.gate = op.gate;
            for (const auto& q : op.qubits) {
                if (q.idx() < 0 || q.idx() >= n)
                    throw std::invalid_argument("simulate_ccac: qubit index outside width");
                item.qubits.push_back(q.idx());
            }
            if (op.condition) {
                ClassicalCondition cond;
                for (auto id : op.condition->x_parity_of) cond.x_parity_of.insert(id_map.at(id));
                for (auto id : op.condition->z_parity_of) cond.z_parity_of.insert(id_map.at(id));
                item.condition = std::move(cond);
            }
            item.measurement_id = op.measurement_id;
            spec.items.push_back(std::move(item));
        }
        // singletons first, stable otherwise
        std::stable_sort(spec.items.begin(), spec.items.end(),
                         [](const InteractionItem& a, const InteractionItem& c) {
                             return a.qubits.size() < c.qubits.size();
                         });
        emit_interact_into(b, spec, &id_map);
    }
    return b.finish(n);
}

}  // namespace qgridc
