// Copyright 2026 The icp Authors
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

#include "icp/engine.hpp"

#include <numeric>

namespace icp {

Propagator::Propagator(const Decomposed& d, ScheduleMode mode)
    : d_(&d), mode_(mode), pending_(d.rules.size(), 0) {
  if (mode == ScheduleMode::Scheduled) {
    order_ = d.schedule;
  } else {
    order_.resize(d.rules.size());
    std::iota(order_.begin(), order_.end(), 0u);
  }
  mark_all_pending();
}

void Propagator::mark_all_pending() {
  std::fill(pending_.begin(), pending_.end(), 1);
  pending_count_ = pending_.size();
}

void Propagator::clear_pending() {
  std::fill(pending_.begin(), pending_.end(), 0);
  pending_count_ = 0;
}

void Propagator::note_change(VarId v) {
  for (uint32_t r : d_->readers[v]) {
    if (!pending_[r]) {
      pending_[r] = 1;
      ++pending_count_;
    }
  }
}

PropagationResult Propagator::propagate(DomainStore& store) {
  if (d_->csp.infeasible) return {PropagationResult::Status::EmptyDomain, 0};
  for (const IntegerInterval& dom : store) {
    if (dom.is_empty()) return {PropagationResult::Status::EmptyDomain, 0};
  }
  uint64_t steps = 0;
  while (pending_count_ > 0) {
    for (uint32_t r : order_) {
      if (!pending_[r]) continue;
      pending_[r] = 0;
      --pending_count_;
      ++applications_;
      if (++steps > step_limit_) {
        throw StepLimitExceeded("propagation step limit exceeded");
      }
      RuleOutcome out = apply_rule(d_->rules[r], store, &ops_);
      if (out.status == RuleStatus::Unchanged) continue;
      ++effective_;
      if (out.status == RuleStatus::Failed) {
        clear_pending();
        return {PropagationResult::Status::EmptyDomain, out.var};
      }
      note_change(out.var);
    }
  }
  return {};
}

}  // namespace icp
