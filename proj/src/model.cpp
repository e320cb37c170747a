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

#include "fre/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fre {
namespace {

using nlohmann::json;

bool InUnitInterval(const Decimal& v) {
  return !(v < Decimal::Zero()) && !(Decimal::One() < v);
}

void CheckUnitVector(const Vector& x, std::size_t n) {
  if (x.size() != n) {
    throw InputError("vector has " + std::to_string(x.size()) +
                     " entries, expected " + std::to_string(n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!InUnitInterval(x[j])) {
      throw InputError("x[" + std::to_string(j + 1) + "] = " +
                       x[j].ToString() + " is outside [0,1]");
    }
  }
}

}  // namespace

std::string_view SenseName(Sense sense) {
  return sense == Sense::kMinimize ? "min" : "max";
}

Instance::Instance(Matrix a, Vector b, Vector c, Sense sense)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), sense_(sense) {
  const std::size_t n = b_.size();
  if (n == 0) throw InputError("instance has no rows");
  if (a_.size() != n) {
    throw InputError("A has " + std::to_string(a_.size()) +
                     " rows but b has " + std::to_string(n) + " entries");
  }
  if (c_.size() != n) {
    throw InputError("c has " + std::to_string(c_.size()) +
                     " entries, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) {
      throw InputError("A is not square: row " + std::to_string(i + 1) +
                       " has " + std::to_string(a_[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!InUnitInterval(a_[i][j])) {
        throw InputError("A[" + std::to_string(i + 1) + "][" +
                         std::to_string(j + 1) + "] = " +
                         a_[i][j].ToString() + " is outside [0,1]");
      }
      precision_ = std::max(precision_, a_[i][j].Normalized().scale());
    }
    if (!InUnitInterval(b_[i])) {
      throw InputError("b[" + std::to_string(i + 1) + "] = " +
                       b_[i].ToString() + " is outside [0,1]");
    }
    precision_ = std::max(precision_, b_[i].Normalized().scale());
  }
}

std::pair<Matrix, Vector> Squarify(Matrix a, Vector b) {
  const std::size_t m = a.size();
  if (b.size() != m) {
    throw InputError("A has " + std::to_string(m) + " rows but b has " +
                     std::to_string(b.size()) + " entries");
  }
  if (m == 0) throw InputError("instance has no rows");
  const std::size_t n = a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("A is ragged");
  }
  if (n == 0) throw InputError("A has no columns");
  if (m > n) {
    for (auto& row : a) row.resize(m, Decimal::Zero());
  } else if (m < n) {
    a.resize(n, Vector(n, Decimal::Zero()));
    b.resize(n, Decimal::Zero());
  }
  return {std::move(a), std::move(b)};
}

Decimal DecimalFromJson(const json& value) {
  try {
    if (value.is_string()) return Decimal::Parse(value.get<std::string>());
    if (value.is_number_integer()) {
      return Decimal::FromInt(value.get<int64_t>());
    }
    if (value.is_number_float()) return Decimal::FromDouble(value.get<double>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::overflow_error& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a number or decimal string, got " + value.dump());
}

Vector VectorFromJson(const json& value) {
  if (!value.is_array()) throw InputError("expected an array");
  Vector out;
  out.reserve(value.size());
  for (const auto& v : value) out.push_back(DecimalFromJson(v));
  return out;
}

json VectorToJson(const Vector& v) {
  json out = json::array();
  for (const auto& d : v) out.push_back(d.ToString());
  return out;
}

Instance ParseInstance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance document must be an object");
  for (const char* key : {"A", "b", "c"}) {
    if (!doc.contains(key)) {
      throw InputError(std::string("instance document lacks \"") + key + "\"");
    }
  }
  const json& a_doc = doc.at("A");
  if (!a_doc.is_array()) throw InputError("\"A\" must be an array of rows");
  Matrix a;
  for (const auto& row : a_doc) a.push_back(VectorFromJson(row));
  Vector b = VectorFromJson(doc.at("b"));
  Vector c = VectorFromJson(doc.at("c"));

  Sense sense = Sense::kMinimize;
  if (doc.contains("sense")) {
    const json& s = doc.at("sense");
    if (s == "min" || s == "minimize") {
      sense = Sense::kMinimize;
    } else if (s == "max" || s == "maximize") {
      sense = Sense::kMaximize;
    } else {
      throw InputError("\"sense\" must be \"min\" or \"max\"");
    }
  }

  const std::size_t columns = a.empty() ? 0 : a.front().size();
  if (c.size() != columns) {
    throw InputError("c has " + std::to_string(c.size()) +
                     " entries but A has " + std::to_string(columns) +
                     " columns");
  }
  auto [sa, sb] = Squarify(std::move(a), std::move(b));
  c.resize(sb.size(), Decimal::Zero());
  return Instance(std::move(sa), std::move(sb), std::move(c), sense);
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

json InstanceToJson(const Instance& instance) {
  json a = json::array();
  for (const auto& row : instance.coefficients()) a.push_back(VectorToJson(row));
  return json{{"A", std::move(a)},
              {"b", VectorToJson(instance.rhs())},
              {"c", VectorToJson(instance.costs())},
              {"sense", std::string(SenseName(instance.sense()))}};
}

Decimal ComposeRow(const Instance& instance, std::size_t row, const Vector& x) {
  const std::size_t n = instance.size();
  if (row >= n) throw std::out_of_range("row index out of range");
  CheckUnitVector(x, n);
  Decimal best = Decimal::Zero();
  for (std::size_t j = 0; j < n; ++j) {
    best = Max(best, Min(instance.a(row, j), Min(x[row], x[j])));
  }
  return best;
}

Decimal Objective(const Vector& c, const Vector& x) {
  Decimal total;
  for (std::size_t j = 0; j < c.size() && j < x.size(); ++j) {
    total += c[j] * x[j];
  }
  return total;
}

MembershipReport CheckMembership(const Instance& instance, const Vector& x) {
  const std::size_t n = instance.size();
  CheckUnitVector(x, n);
  MembershipReport report;
  report.feasible = true;
  report.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RowCheck check;
    check.row = i;
    check.required = instance.rhs()[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Decimal& term = Min(instance.a(i, j), Min(x[i], x[j]));
      check.achieved = Max(check.achieved, term);
      if (term == check.required && !check.witness) check.witness = j;
      if (check.required < term && !check.violating) check.violating = j;
    }
    report.feasible = report.feasible && check.satisfied();
    report.rows.push_back(std::move(check));
  }
  return report;
}

bool IsFeasible(const Instance& instance, const Vector& x) {
  const std::size_t n = instance.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Decimal& bi = instance.rhs()[i];
    if (x[i] < bi) return false;
    bool attained = false;
    for (std::size_t j = 0; j < n; ++j) {
      const Decimal& term = Min(instance.a(i, j), Min(x[i], x[j]));
      if (bi < term) return false;
      attained = attained || term == bi;
    }
    if (!attained) return false;
  }
  return true;
}

}  // namespace fre
