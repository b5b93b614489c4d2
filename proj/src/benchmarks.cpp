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

#include "icp/benchmarks.hpp"

#include <sstream>
#include <stdexcept>

namespace icp {

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names{"cubes", "opt", "fractions",
                                              "kyoto", "sumprod"};
  return names;
}

long default_benchmark_size(std::string_view name) {
  if (name == "cubes" || name == "opt") return 100000;
  if (name == "kyoto") return 100;
  if (name == "sumprod") return 14;
  if (name == "fractions") return 9;
  throw std::invalid_argument("unknown benchmark '" + std::string(name) + "'");
}

namespace {

std::string cubes(long limit) {
  std::ostringstream s;
  s << "# sums of four distinct positive cubes up to " << limit << "\n"
    << "var x1 in Z;\nvar x2 in Z;\nvar x3 in Z;\nvar x4 in Z;\n"
    << "var n in [1.." << limit << "];\n"
    << "constraint 1 <= x1;\n"
    << "constraint x1 <= x2 - 1;\n"
    << "constraint x2 <= x3 - 1;\n"
    << "constraint x3 <= x4 - 1;\n"
    << "constraint x4 <= n;\n"
    << "constraint x1^3 + x2^3 + x3^3 + x4^3 = n;\n";
  return s.str();
}

std::string opt(long bound) {
  std::ostringstream s;
  s << "var x in [1.." << bound << "];\n"
    << "var y in [1.." << bound << "];\n"
    << "var z in [1.." << bound << "];\n"
    << "constraint x^3 + y^2 = z^3;\n"
    << "maximize 2*x*y - z;\n";
  return s.str();
}

std::string fractions() {
  std::ostringstream s;
  s << "# A/BC + D/EF + G/HI = 1 over distinct nonzero digits\n";
  const std::string letters = "ABCDEFGHI";
  for (char c : letters) s << "var " << c << " in [1..9];\n";
  const std::string bc = "(10*B + C)", ef = "(10*E + F)", hi = "(10*H + I)";
  s << "constraint A*" << ef << "*" << hi << " + D*" << bc << "*" << hi
    << " + G*" << bc << "*" << ef << " = " << bc << "*" << ef << "*" << hi
    << ";\n";
  s << "constraint A*" << ef << " >= D*" << bc << ";\n";
  s << "constraint D*" << hi << " >= G*" << ef << ";\n";
  s << "constraint 3*A >= " << bc << ";\n";
  s << "constraint 3*G <= " << hi << ";\n";
  for (size_t i = 0; i < letters.size(); ++i) {
    for (size_t j = i + 1; j < letters.size(); ++j) {
      s << "constraint " << letters[i] << " != " << letters[j] << ";\n";
    }
  }
  return s.str();
}

std::string kyoto(long max_base) {
  if (max_base < 2) throw std::invalid_argument("kyoto needs a base of at least 2");
  std::ostringstream s;
  s << "# KYOTO + KYOTO + KYOTO = TOKYO in base B\n"
    << "var B in [2.." << max_base << "];\n"
    << "var T in [1.." << max_base - 1 << "];\n"
    << "var O in [0.." << max_base - 1 << "];\n"
    << "var K in [1.." << max_base - 1 << "];\n"
    << "var Y in [0.." << max_base - 1 << "];\n"
    << "constraint 3*(K*B^4 + Y*B^3 + O*B^2 + T*B + O) = "
       "T*B^4 + O*B^3 + K*B^2 + Y*B + O;\n";
  const std::string digits = "KYOT";
  for (size_t i = 0; i < digits.size(); ++i) {
    for (size_t j = i + 1; j < digits.size(); ++j) {
      s << "constraint " << digits[i] << " != " << digits[j] << ";\n";
    }
  }
  for (char c : digits) s << "constraint " << c << " < B;\n";
  return s.str();
}

std::string sumprod(long n) {
  if (n < 1 || n > 1000) throw std::invalid_argument("sumprod size must be in [1..1000]");
  std::ostringstream s;
  for (long i = 1; i <= n; ++i) s << "var x" << i << " in [1.." << n << "];\n";
  for (long i = 1; i <= n; ++i) s << "var c" << i << " in [" << i << ".." << i << "];\n";
  auto join = [&](char var, const char* op) {
    std::string out;
    for (long i = 1; i <= n; ++i) {
      if (i > 1) out += op;
      out += var + std::to_string(i);
    }
    return out;
  };
  s << "constraint " << join('x', " + ") << " = " << join('c', " + ") << ";\n";
  s << "constraint " << join('x', "*") << " = " << join('c', "*") << ";\n";
  for (long i = 1; i < n; ++i) {
    s << "constraint x" << i << " <= x" << i + 1 << ";\n";
  }
  return s.str();
}

}  // namespace

std::string benchmark_text(const BenchmarkSpec& spec) {
  long size = spec.size > 0 ? spec.size : default_benchmark_size(spec.name);
  if (spec.name == "cubes") return cubes(size);
  if (spec.name == "opt") return opt(size);
  if (spec.name == "fractions") return fractions();
  if (spec.name == "kyoto") return kyoto(size);
  if (spec.name == "sumprod") return sumprod(size);
  throw std::invalid_argument("unknown benchmark '" + spec.name + "'");
}

Csp build_benchmark(const BenchmarkSpec& spec) {
  return parse_problem(benchmark_text(spec));
}

}  // namespace icp
