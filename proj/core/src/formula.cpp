#include "cadorder/formula.hpp"

#include <algorithm>
#include <set>

#include "cadorder/errors.hpp"

namespace cadorder {

std::string_view symbol(Relation r) {
  switch (r) {
    case Relation::kEq: return "=";
    case Relation::kNe: return "!=";
    case Relation::kLt: return "<";
    case Relation::kLe: return "<=";
    case Relation::kGt: return ">";
    case Relation::kGe: return ">=";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
  if (text == "=") return Relation::kEq;
  if (text == "!=") return Relation::kNe;
  if (text == "<") return Relation::kLt;
  if (text == "<=") return Relation::kLe;
  if (text == ">") return Relation::kGt;
  if (text == ">=") return Relation::kGe;
  return std::nullopt;
}

Relation negated_side(Relation r) {
  switch (r) {
    case Relation::kLt: return Relation::kGt;
    case Relation::kLe: return Relation::kGe;
    case Relation::kGt: return Relation::kLt;
    case Relation::kGe: return Relation::kLe;
    default: return r;
  }
}

Constraint Constraint::normalized(Polynomial poly, Relation relation) {
  if (!poly.is_zero() && sgn(poly.leading_coefficient()) < 0) {
    return {-poly, negated_side(relation)};
  }
  return {std::move(poly), relation};
}

std::size_t Qff::ec_count() const {
  return static_cast<std::size_t>(std::count_if(
      constraints.begin(), constraints.end(), [](const Constraint& c) { return c.is_equational(); }));
}

const Constraint* Qff::first_ec() const {
  for (const auto& c : constraints) {
    if (c.is_equational()) return &c;
  }
  return nullptr;
}

const Constraint* Qff::second_ec() const {
  bool seen = false;
  for (const auto& c : constraints) {
    if (!c.is_equational()) continue;
    if (seen) return &c;
    seen = true;
  }
  return nullptr;
}

std::optional<VarIndex> Problem::find_variable(std::string_view name) const {
  for (VarIndex i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return i;
  }
  return std::nullopt;
}

VariableOrdering::VariableOrdering(std::vector<VarIndex> greatest_first)
    : order_(std::move(greatest_first)) {}

VariableOrdering VariableOrdering::identity(std::size_t n) {
  std::vector<VarIndex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return VariableOrdering(std::move(order));
}

VariableOrdering VariableOrdering::parse(std::string_view text,
                                         const std::vector<std::string>& names) {
  std::vector<VarIndex> order;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('>', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end()) {
      throw InputError("unknown variable '" + std::string(token) + "' in ordering '" +
                       std::string(text) + "'");
    }
    order.push_back(static_cast<VarIndex>(it - names.begin()));
    start = end + 1;
  }
  VariableOrdering result(std::move(order));
  if (!result.is_permutation_of(names.size())) {
    throw InputError("ordering '" + std::string(text) + "' is not a permutation of the variables");
  }
  return result;
}

bool VariableOrdering::is_permutation_of(std::size_t n) const {
  if (order_.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (VarIndex v : order_) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string VariableOrdering::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i > 0) out += '>';
    out += order_[i] < names.size() ? names[order_[i]] : "x" + std::to_string(order_[i]);
  }
  return out;
}

std::string system_type(const Problem& p) {
  std::string label;
  for (const auto& q : p.qffs) {
    std::size_t n = q.ec_count();
    if (n > 9) throw InputError("system type digits need at most 9 ECs per QFF");
    label += static_cast<char>('0' + n);
  }
  return label;
}

std::string sorted_system_type(const Problem& p) {
  std::string label = system_type(p);
  std::sort(label.begin(), label.end(), std::greater<>());
  return label;
}

PolynomialSet defining_polynomials(const Problem& p) {
  std::vector<Polynomial> polys;
  for (const auto& q : p.qffs) {
    for (const auto& c : q.constraints) {
      if (!c.poly.is_zero()) polys.push_back(sign_normalized(c.poly));
    }
  }
  return make_set(std::move(polys));
}

std::vector<Violation> validate(const Problem& p) {
  std::vector<Violation> out;
  if (p.variables.empty()) out.push_back({"no variables declared"});
  if (p.variables.size() > kMaxVariables) {
    out.push_back({"more than " + std::to_string(kMaxVariables) + " variables declared"});
  }
  std::set<std::string> names;
  for (const auto& name : p.variables) {
    if (name.empty()) out.push_back({"empty variable name"});
    if (!names.insert(name).second) out.push_back({"duplicate variable '" + name + "'"});
  }
  if (p.qffs.empty()) out.push_back({"no QFF"});
  for (std::size_t i = 0; i < p.qffs.size(); ++i) {
    const auto& q = p.qffs[i];
    const std::string where = "QFF " + std::to_string(i + 1);
    if (q.constraints.empty()) out.push_back({"empty QFF (" + where + ")"});
    for (std::size_t j = 0; j < q.constraints.size(); ++j) {
      const auto& c = q.constraints[j];
      const std::string at = where + ", constraint " + std::to_string(j + 1);
      if (c.poly.is_zero()) {
        out.push_back({"zero constraint polynomial (" + at + ")"});
        continue;
      }
      if (c.poly.variable_span() > p.variables.size()) {
        out.push_back({"undeclared variable (" + at + ")"});
      }
      if (sgn(c.poly.leading_coefficient()) < 0) {
        out.push_back({"constraint polynomial not sign-normalized (" + at + ")"});
      }
    }
  }
  return out;
}

}  // namespace cadorder
