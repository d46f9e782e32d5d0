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

#include "qgridc/density.hpp"

#include <stdexcept>

namespace qgridc {

namespace {

int qubits_of(const DensityMatrix& rho) {
    int n = 0;
    while ((int64_t{1} << n) < rho.rows()) ++n;
    if ((int64_t{1} << n) != rho.rows() || rho.rows() != rho.cols())
        throw std::invalid_argument("density: dimension is not a power of two");
    return n;
}

// Applies the op's unitary to every column, i.e. rho -> G rho (columns),
// then the caller conjugates. We reuse DenseSim kernels by viewing each
// column as a state vector (unnormalized is fine for linearity).
void apply_unitary_cols(DensityMatrix& rho, const BasicOp& op, const QubitMap& map) {
    const int n = qubits_of(rho);
    DenseSim scratch(n);
    MeasurementRecord rec;
    SeededSource dummy(0);
    for (Eigen::Index col = 0; col < rho.cols(); ++col) {
        std::vector<cxd> v(static_cast<size_t>(rho.rows()));
        for (Eigen::Index r = 0; r < rho.rows(); ++r) v[static_cast<size_t>(r)] = rho(r, col);
        // bypass normalization: apply kernels directly
        DenseSim s(n);
        {
            // raw injection
            std::vector<cxd> tmp = v;
            double norm = 0;
            for (auto& a : tmp) norm += std::norm(a);
            if (norm < 1e-300) continue;  // zero column
            double scale = 1.0 / std::sqrt(norm);
            for (auto& a : tmp) a *= scale;
            s.set_state(tmp);
            s.apply(op, map, rec, dummy);
            for (Eigen::Index r = 0; r < rho.rows(); ++r)
                rho(r, col) = s.amps()[static_cast<size_t>(r)] / scale;
        }
    }
}

}  // namespace

DensityMatrix basis_density(int n, uint64_t bits) {
    const Eigen::Index d = Eigen::Index{1} << n;
    DensityMatrix rho = DensityMatrix::Zero(d, d);
    rho(static_cast<Eigen::Index>(bits), static_cast<Eigen::Index>(bits)) = 1.0;
    return rho;
}

DensityMatrix density_from_state(const std::vector<cxd>& amps) {
    const Eigen::Index d = static_cast<Eigen::Index>(amps.size());
    DensityMatrix rho(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            rho(i, j) = amps[static_cast<size_t>(i)] * std::conj(amps[static_cast<size_t>(j)]);
    return rho;
}

void apply_to_density(DensityMatrix& rho, const BasicOp& op, const QubitMap& map) {
    const int n = qubits_of(rho);
    if (n > kDensityQubitLimit) throw std::invalid_argument("density: qubit budget exceeded");
    if (op.gate.kind == GateKind::CondPauli)
        throw std::invalid_argument("density: conditional ops unsupported");
    if (op.gate.kind == GateKind::Measure) {
        // dephasing channel on the measured qubit
        const int q = map.index(op.qubits[0]);
        const int64_t bit = int64_t{1} << q;
        for (Eigen::Index i = 0; i < rho.rows(); ++i)
            for (Eigen::Index j = 0; j < rho.cols(); ++j)
                if ((i & bit) != (j & bit)) rho(i, j) = 0.0;
        return;
    }
    apply_unitary_cols(rho, op, map);
    // conjugate: rho -> rho G^dagger == (G rho^dagger)^dagger
    rho.adjointInPlace();
    apply_unitary_cols(rho, op, map);
    rho.adjointInPlace();
}

DensityMatrix run_density(const AdaptiveCircuit& c, const QubitMap& map, DensityMatrix rho) {
    for (const auto& ts : c.timesteps)
        for (const auto& op : ts.ops) apply_to_density(rho, op, map);
    return rho;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("trace_distance: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(a - b);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DensityMatrix partial_trace_keep(const DensityMatrix& rho, int n, const std::vector<int>& keep) {
    for (int q : keep)
        if (q < 0 || q >= n) throw std::out_of_range("partial_trace: qubit index out of range");
    const int k = static_cast<int>(keep.size());
    const Eigen::Index dk = Eigen::Index{1} << k;
    std::vector<int> other;
    for (int q = 0; q < n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) other.push_back(q);
    auto assemble = [&](int64_t kept_bits, int64_t env_bits) {
        int64_t full = 0;
        for (int i = 0; i < k; ++i)
            if (kept_bits & (int64_t{1} << i)) full |= int64_t{1} << keep[static_cast<size_t>(i)];
        for (size_t i = 0; i < other.size(); ++i)
            if (env_bits & (int64_t{1} << i)) full |= int64_t{1} << other[i];
        return full;
    };
    DensityMatrix out = DensityMatrix::Zero(dk, dk);
    const int64_t denv = int64_t{1} << other.size();
    for (int64_t i = 0; i < dk; ++i)
        for (int64_t j = 0; j < dk; ++j) {
            cxd s(0);
            for (int64_t e = 0; e < denv; ++e)
                s += rho(static_cast<Eigen::Index>(assemble(i, e)),
                         static_cast<Eigen::Index>(assemble(j, e)));
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    return out;
}

DensityMatrix partial_trace_to(const DensityMatrix& rho, int n, int keep) {
    return partial_trace_keep(rho, n, {keep});
}

DensityMatrix reduced_from_state(const std::vector<cxd>& amps, int n,
                                 const std::vector<int>& keep) {
    const int k = static_cast<int>(keep.size());
    const Eigen::Index dk = Eigen::Index{1} << k;
    std::vector<int> other;
    for (int q = 0; q < n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) other.push_back(q);
    DensityMatrix out = DensityMatrix::Zero(dk, dk);
    const int64_t denv = int64_t{1} << other.size();
    auto assemble = [&](int64_t kept_bits, int64_t env_bits) {
        int64_t full = 0;
        for (int i = 0; i < k; ++i)
            if (kept_bits & (int64_t{1} << i)) full |= int64_t{1} << keep[static_cast<size_t>(i)];
        for (size_t i = 0; i < other.size(); ++i)
            if (env_bits & (int64_t{1} << i)) full |= int64_t{1} << other[i];
        return full;
    };
    for (int64_t i = 0; i < dk; ++i)
        for (int64_t j = 0; j < dk; ++j) {
            cxd s(0);
            for (int64_t e = 0; e < denv; ++e)
                s += amps[static_cast<size_t>(assemble(i, e))] *
                     std::conj(amps[static_cast<size_t>(assemble(j, e))]);
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    return out;
}

bool is_valid_density(const DensityMatrix& rho, double tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
        return false;
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho);
    return es.eigenvalues().minCoeff() > -tol;
}

}  // namespace qgridc
