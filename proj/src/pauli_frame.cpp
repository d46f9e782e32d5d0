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

#include "qgridc/pauli_frame.hpp"

#include <stdexcept>

namespace qgridc {

PauliOp sigma_of(int index) {
    switch (index) {
        case 0: return PauliOp{0, 0, 0};
        case 1: return PauliOp{1, 0, 0};
        case 2: return PauliOp{1, 1, 0};  // X.Z, proportional to Y
        case 3: return PauliOp{0, 1, 0};
    }
    throw std::out_of_range("sigma_of: index must be in 0..3");
}

namespace {

// a . b as operators (a applied after b): X^xa Z^za X^xb Z^zb
// = (-1)^{za xb} X^{xa+xb} Z^{za+zb}.
PauliOp pauli_mul(const PauliOp& a, const PauliOp& b) {
    PauliOp r;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.phase_pow = (a.phase_pow + b.phase_pow + 2 * (a.z & b.x)) % 4;
    return r;
}

PauliOp tree_fold(std::span<const PauliOp> v) {
    if (v.empty()) return PauliOp{};
    if (v.size() == 1) return v[0];
    size_t mid = v.size() / 2;
    return pauli_mul(tree_fold(v.subspan(0, mid)), tree_fold(v.subspan(mid)));
}

}  // namespace

PauliOp compose(std::span<const PauliOp> corrections) { return tree_fold(corrections); }

int bell_index_from_bits(int phase_bit, int flip_bit) {
    // Phi_0 -> 00, Phi_1 -> 01, Phi_2 -> 11, Phi_3 -> 10 under CNOT;H;measure.
    static const int table[2][2] = {{0, 1}, {3, 2}};
    return table[phase_bit & 1][flip_bit & 1];
}

PauliOp correction_for_index(int index) { return sigma_of(index); }

ClassicalCondition correction_condition(std::span<const BellOutcome> outcomes) {
    ClassicalCondition cond;
    auto toggle = [](std::set<MeasurementId>& s, MeasurementId id) {
        auto it = s.find(id);
        if (it == s.end())
            s.insert(id);
        else
            s.erase(it);
    };
    for (const auto& o : outcomes) {
        toggle(cond.x_parity_of, o.flip_id);
        toggle(cond.z_parity_of, o.phase_id);
    }
    return cond;
}

}  // namespace qgridc
