// Constraints, quantifier-free formulae and problems.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder {

enum class Relation { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view symbol(Relation r);
std::optional<Relation> parse_relation(std::string_view text);

/// The relation that holds for -p when `r` holds for p.
Relation negated_side(Relation r);

struct Constraint {
  Polynomial poly;
  Relation relation = Relation::kEq;

  /// Builds `poly relation 0` with the polynomial sign-normalized, flipping
  /// the relation when the polynomial had to be negated.
  static Constraint normalized(Polynomial poly, Relation relation);

  [[nodiscard]] bool is_equational() const { return relation == Relation::kEq; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A conjunction of constraints. Order is significant: the first constraint
/// and the first two equational constraints play special roles.
struct Qff {
  std::vector<Constraint> constraints;

  [[nodiscard]] std::size_t ec_count() const;
  [[nodiscard]] const Constraint* first_ec() const;
  [[nodiscard]] const Constraint* second_ec() const;

  friend bool operator==(const Qff&, const Qff&) = default;
};

struct Problem {
  std::vector<std::string> variables;
  std::vector<Qff> qffs;

  [[nodiscard]] std::size_t num_variables() const { return variables.size(); }
  [[nodiscard]] std::optional<VarIndex> find_variable(std::string_view name) const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// A permutation of a problem's variables, greatest first.
class VariableOrdering {
 public:
  VariableOrdering() = default;
  explicit VariableOrdering(std::vector<VarIndex> greatest_first);

  /// Declaration order: variable 0 greatest.
  static VariableOrdering identity(std::size_t n);

  /// Parses "z>y>x"; throws InputError on unknown or repeated names.
  static VariableOrdering parse(std::string_view text, const std::vector<std::string>& names);

  [[nodiscard]] const std::vector<VarIndex>& order() const { return order_; }
  [[nodiscard]] std::size_t size() const { return order_.size(); }
  [[nodiscard]] VarIndex operator[](std::size_t i) const { return order_[i]; }

  [[nodiscard]] bool is_permutation_of(std::size_t n) const;

  /// "z>y>x"
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

  /// Lexicographic on the sequence of declaration indices.
  friend auto operator<=>(const VariableOrdering&, const VariableOrdering&) = default;

 private:
  std::vector<VarIndex> order_;
};

/// One digit per QFF giving its number of equational constraints.
std::string system_type(const Problem& p);

/// The digits of system_type sorted descending ("21" and "12" both give "21"),
/// for grouping when sequence order is irrelevant.
std::string sorted_system_type(const Problem& p);

/// All constraint polynomials, sign-normalized and deduplicated.
PolynomialSet defining_polynomials(const Problem& p);

struct Violation {
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every broken Problem invariant; empty when the problem is well formed.
std::vector<Violation> validate(const Problem& p);

}  // namespace cadorder
