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

#include "qgridc/sim.hpp"

namespace qgridc {

/// The classical controller: proposes the next timestep given the outcome
/// history, or nullopt to halt.
class Controller {
public:
    virtual ~Controller() = default;
    virtual std::optional<Timestep> next(const MeasurementRecord& history) = 0;
};

/// A device executes proposed timesteps after checking them against its
/// model rules (disjointness, and grid adjacency for grid devices).
class Device {
public:
    virtual ~Device() = default;
    virtual void apply_step(const Timestep& ts, MeasurementRecord& rec) = 0;
    /// Model/dim used for per-step validity checking.
    virtual Model model() const = 0;
    virtual int dim() const = 0;
};

class DenseDevice final : public Device {
public:
    DenseDevice(Model model, int dim, QubitMap map)
        : model_(model), dim_(dim), map_(std::move(map)), sim_(std::max(map_.size(), 1)) {}
    void apply_step(const Timestep& ts, MeasurementRecord& rec) override;
    Model model() const override { return model_; }
    int dim() const override { return dim_; }
    DenseSim& sim() { return sim_; }
    const QubitMap& map() const { return map_; }
    void seed(uint64_t s) { src_ = SeededSource(s); }

private:
    Model model_;
    int dim_;
    QubitMap map_;
    DenseSim sim_;
    SeededSource src_{12345};
};

class StabilizerDevice final : public Device {
public:
    StabilizerDevice(Model model, int dim, QubitMap map)
        : model_(model), dim_(dim), map_(std::move(map)), sim_(std::max(map_.size(), 1)) {}
    void apply_step(const Timestep& ts, MeasurementRecord& rec) override;
    Model model() const override { return model_; }
    int dim() const override { return dim_; }
    StabilizerSim& sim() { return sim_; }
    const QubitMap& map() const { return map_; }
    void seed(uint64_t s) { src_ = SeededSource(s); }

private:
    Model model_;
    int dim_;
    QubitMap map_;
    StabilizerSim sim_;
    SeededSource src_{12345};
};

struct Transcript {
    struct Entry {
        Timestep step;
        std::vector<std::pair<MeasurementId, int>> outcomes;
    };
    std::vector<Entry> entries;
    MeasurementRecord record;

    int64_t depth() const { return static_cast<int64_t>(entries.size()); }
};

/// The controller loop: propose, check, apply, record; halts on nullopt.
/// Invalid proposals throw std::runtime_error with the violation report.
Transcript execute_adaptive(Controller& controller, Device& device);

/// Replays a compiled circuit step by step.
class ReplayController final : public Controller {
public:
    explicit ReplayController(const AdaptiveCircuit& c) : circ_(c) {}
    std::optional<Timestep> next(const MeasurementRecord& history) override;

private:
    const AdaptiveCircuit& circ_;
    size_t pos_ = 0;
};

}  // namespace qgridc
