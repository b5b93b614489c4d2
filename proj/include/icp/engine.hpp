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

#ifndef ICP_ENGINE_HPP_
#define ICP_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icp/decompose.hpp"

namespace icp {

enum class ScheduleMode { Cycle, Scheduled };

struct PropagationResult {
  enum class Status { Fixpoint, EmptyDomain };
  Status status = Status::Fixpoint;
  VarId var = 0;  // the emptied variable

  bool ok() const { return status == Status::Fixpoint; }
};

class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the rules of a decomposed problem over a domain store. A rule is
// pending until applied; a change to a variable makes every rule reading it
// pending again.
class Propagator {
 public:
  explicit Propagator(const Decomposed& d,
                      ScheduleMode mode = ScheduleMode::Scheduled);

  const Decomposed& problem() const { return *d_; }
  ScheduleMode mode() const { return mode_; }

  void mark_all_pending();
  void clear_pending();
  void note_change(VarId v);
  bool is_pending(uint32_t rule) const { return pending_[rule] != 0; }

  // Applies pending rules until none is pending or a domain empties. The
  // visiting order is the rule order (Cycle) or the generated schedule
  // (Scheduled), repeated in passes.
  PropagationResult propagate(DomainStore& store);

  uint64_t applications() const { return applications_; }
  uint64_t effective() const { return effective_; }
  const OpCounters& ops() const { return ops_; }
  // Rule applications allowed in one propagate call before it throws
  // StepLimitExceeded.
  void set_step_limit(uint64_t limit) { step_limit_ = limit; }

 private:
  const Decomposed* d_;
  ScheduleMode mode_;
  std::vector<uint32_t> order_;
  std::vector<char> pending_;
  uint64_t pending_count_ = 0;
  uint64_t applications_ = 0;
  uint64_t effective_ = 0;
  uint64_t step_limit_ = 100000000;
  OpCounters ops_;
};

}  // namespace icp

#endif  // ICP_ENGINE_HPP_
