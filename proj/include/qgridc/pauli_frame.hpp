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

#include <span>
#include <vector>

#include "qgridc/circuit.hpp"

namespace qgridc {

/// X^x Z^z with an optional i^phase_pow phase. Bits compose by XOR; phases
/// track (-1)^{z1 x2} from commuting Z past X.
struct PauliOp {
    uint8_t x = 0;
    uint8_t z = 0;
    int phase_pow = 0;  // phase = i^phase_pow, mod 4

    bool identity_up_to_phase() const { return x == 0 && z == 0; }
    bool operator==(const PauliOp& o) const {
        return x == o.x && z == o.z && ((phase_pow - o.phase_pow) % 4 + 4) % 4 == 0;
    }
};

/// sigma_0 = I, sigma_1 = X, sigma_2 = X.Z, sigma_3 = Z (each up to phase):
/// |Phi_l> = (I (x) sigma_l)|Phi_0>.
PauliOp sigma_of(int index);

/// Left-to-right product sigma(list[0]) . sigma(list[1]) ... evaluated as a
/// balanced binary tree. Bits XOR; phase tracked exactly.
PauliOp compose(std::span<const PauliOp> corrections);

/// Bell-measurement outcome. `index` is the Bell-state index of the
/// projected state; phase_id / flip_id are the MeasurementIds of the two
/// computational measurements in the fixed CNOT;H decomposition.
struct BellOutcome {
    int index = 0;
    MeasurementId phase_id = -1;
    MeasurementId flip_id = -1;
};

/// Bell index from the decomposed measurement bits (p = control-after-H,
/// f = CNOT target): (0,0)->0, (0,1)->1, (1,1)->2, (1,0)->3.
int bell_index_from_bits(int phase_bit, int flip_bit);

/// sigma-bits (x, z) of the correction for Bell index k; equals X^f Z^p in
/// terms of the measurement bits.
PauliOp correction_for_index(int index);

/// Deferred correction for a chain of Bell measurements, as measurement-
/// outcome parities: X on the flip bits' parity, Z on the phase bits'.
/// Composition is the symmetric difference of the id sets.
ClassicalCondition correction_condition(std::span<const BellOutcome> outcomes);

}  // namespace qgridc
