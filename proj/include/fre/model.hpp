// Copyright 2026 The fre-opt Authors
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

// Problem instances for
//
//   optimize  c^T x
//   s.t.      max_j min{a_ij, x_i, x_j} = b_i   for every row i
//             x in [0,1]^n
//
// and exact evaluation of the max-min composition on a candidate x.
// Rows and columns are 0-based throughout the library; reports add one.

#ifndef FRE_MODEL_HPP_
#define FRE_MODEL_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fre/decimal.hpp"
#include "json.hpp"

namespace fre {

using Vector = std::vector<Decimal>;
using Matrix = std::vector<Vector>;

enum class Sense { kMinimize, kMaximize };

std::string_view SenseName(Sense sense);

// Malformed or out-of-range user input (instance documents, graph files,
// candidate vectors).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Instance {
 public:
  // Requires a square `a` with entries in [0,1], b in [0,1]^n, and |c| = n.
  // Throws InputError otherwise. Use Squarify() first for rectangular data.
  Instance(Matrix a, Vector b, Vector c, Sense sense);

  std::size_t size() const { return b_.size(); }
  const Decimal& a(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Matrix& coefficients() const { return a_; }
  const Vector& rhs() const { return b_; }
  const Vector& costs() const { return c_; }
  Sense sense() const { return sense_; }

  // Largest number of fractional digits among the entries of A and b.
  int precision() const { return precision_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Matrix a_;
  Vector b_;
  Vector c_;
  Sense sense_;
  int precision_ = 0;
};

// Pads an m x n system to order max(m, n): zero columns when m > n, and
// zero rows with right-hand side 0 when m < n. Square input is returned
// unchanged. Throws InputError if `a` is ragged or |b| != m.
std::pair<Matrix, Vector> Squarify(Matrix a, Vector b);

// Reads {"A": [[...]], "b": [...], "c": [...], "sense": "min"|"max"}.
// Entries may be decimal strings (parsed exactly) or JSON numbers. Non-square
// systems are squarified; extra columns get cost 0. "sense" defaults to min.
Instance ParseInstance(std::string_view json_text);
Instance LoadInstance(const std::filesystem::path& path);
nlohmann::json InstanceToJson(const Instance& instance);

// Scalar and vector conversions shared by every JSON surface.
Decimal DecimalFromJson(const nlohmann::json& value);
Vector VectorFromJson(const nlohmann::json& value);
nlohmann::json VectorToJson(const Vector& v);

// a_i (x) x = max_j min{a_ij, x_i, x_j}. Throws std::out_of_range for a bad
// row and InputError when x has the wrong size or leaves [0,1].
Decimal ComposeRow(const Instance& instance, std::size_t row, const Vector& x);

Decimal Objective(const Vector& c, const Vector& x);

struct RowCheck {
  std::size_t row = 0;
  Decimal achieved;
  Decimal required;
  // Some j with min{a_ij, x_i, x_j} = b_i.
  std::optional<std::size_t> witness;
  // First j (ascending) with min{a_ij, x_i, x_j} > b_i.
  std::optional<std::size_t> violating;

  bool satisfied() const { return witness.has_value() && !violating; }
};

struct MembershipReport {
  bool feasible = false;
  std::vector<RowCheck> rows;
};

// Row-by-row check of the two-sided characterization: no term exceeds b_i,
// and some term attains it.
MembershipReport CheckMembership(const Instance& instance, const Vector& x);

// Cheaper yes/no version of CheckMembership.
bool IsFeasible(const Instance& instance, const Vector& x);

}  // namespace fre

#endif  // FRE_MODEL_HPP_
