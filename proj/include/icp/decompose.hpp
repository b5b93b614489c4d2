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

#ifndef ICP_DECOMPOSE_HPP_
#define ICP_DECOMPOSE_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "icp/model.hpp"
#include "icp/rules.hpp"

namespace icp {

// Propagation approaches: direct (unoptimized, optimized), partial
// decomposition (every nonlinear power product, only duplicates) and full
// decomposition (multiplication, squaring, exponentiation).
enum class Variant { DU, DO, PU, PO, FM, FS, FE };

inline constexpr Variant kAllVariants[] = {Variant::DU, Variant::DO, Variant::PU,
                                           Variant::PO, Variant::FM, Variant::FS,
                                           Variant::FE};

// Short names: du, do, pu, po, fm, fs, fe.
const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// An auxiliary variable and the term it stands for.
struct AuxDef {
  enum class Kind { PowerProduct, Product, Power };
  VarId var = 0;
  Kind kind = Kind::PowerProduct;
  PowerProduct powers;  // the full term over user variables
  VarId a = 0;          // Product: a * b; Power: a^n
  VarId b = 0;
  unsigned n = 0;
  // Rule writing `var` from its definition, and rules writing back into the
  // defining variables.
  uint32_t forward_rule = 0;
  std::vector<uint32_t> backward_rules;

  // Variables the definition is stated over.
  std::vector<VarId> operands() const;
};

struct Decomposed {
  Variant variant = Variant::DU;
  // Variables in order: user variables, the objective variable when
  // maximizing, then auxiliaries. Constraints: auxiliary definitions followed
  // by the rewritten problem constraints.
  Csp csp;
  uint32_t user_vars = 0;
  std::optional<VarId> objective;
  std::vector<AuxDef> aux;
  // Auxiliary definition rules come first, in definition order.
  std::vector<ReductionRule> rules;
  std::vector<uint32_t> schedule;
  // For each variable, the rules that read it.
  std::vector<std::vector<uint32_t>> readers;

  uint32_t first_aux() const {
    return user_vars + (objective.has_value() ? 1 : 0);
  }
  bool is_aux(VarId v) const { return v >= first_aux(); }
  const AuxDef& aux_of(VarId v) const { return aux[v - first_aux()]; }
};

Decomposed decompose(const Csp& csp, Variant variant,
                     DivisionMode division = DivisionMode::Weak);

// Initial domains: user domains as declared, the objective unrestricted, and
// each auxiliary the interval value of its definition, bottom-up.
DomainStore initial_store(const Decomposed& d);
// Recomputes auxiliary domains from the given store.
void compute_aux_domains(const Decomposed& d, DomainStore& store);

// For every problem rule: forward rules of the auxiliaries it reads
// (bottom-up), the rule itself, then backward rules of the auxiliary it
// writes (top-down). Rules never reached are appended in index order.
std::vector<uint32_t> generate_schedule(const Decomposed& d);

}  // namespace icp

#endif  // ICP_DECOMPOSE_HPP_
