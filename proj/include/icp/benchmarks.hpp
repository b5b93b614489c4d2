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

#ifndef ICP_BENCHMARKS_HPP_
#define ICP_BENCHMARKS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icp/model.hpp"

namespace icp {

// Built-in problems. The size parameter is the upper bound of n for cubes,
// the domain bound for opt, the largest base for kyoto and n for sumprod;
// fractions ignores it.
struct BenchmarkSpec {
  std::string name;
  long size = 0;
};

const std::vector<std::string>& benchmark_names();
long default_benchmark_size(std::string_view name);

// Problem text in the input language; throws std::invalid_argument for an
// unknown name or a size out of range.
std::string benchmark_text(const BenchmarkSpec& spec);
Csp build_benchmark(const BenchmarkSpec& spec);

}  // namespace icp

#endif  // ICP_BENCHMARKS_HPP_
