// Small helpers shared by the unit tests.
#pragma once

#include <string>
#include <vector>

#include "cadorder/formula.hpp"
#include "cadorder/polynomial.hpp"
#include "cadorder/problem_io.hpp"

namespace testutil {

inline cadorder::Problem problem(const std::string& text) {
  return cadorder::parse_problem({text, "<test>"});
}

/// Parses `text` as a polynomial over `vars` (comma separated names).
inline cadorder::Polynomial poly(const std::string& text, const std::string& vars = "x, y, z") {
  auto p = problem("vars: " + vars + "\nqff: " + text + " > 0\n");
  const auto& c = p.qffs.at(0).constraints.at(0);
  // The parser sign-normalizes; undo that when the relation was flipped.
  return c.relation == cadorder::Relation::kGt ? c.poly : -c.poly;
}

inline std::vector<cadorder::Polynomial> polys(const std::vector<std::string>& texts,
                                               const std::string& vars = "x, y, z") {
  std::vector<cadorder::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(t, vars));
  return out;
}

inline cadorder::PolynomialSet set(const std::vector<std::string>& texts,
                                   const std::string& vars = "x, y, z") {
  return cadorder::make_set(polys(texts, vars));
}

inline std::string str(const cadorder::Polynomial& f, const std::string& vars = "x,y,z") {
  std::vector<std::string> names;
  std::string cur;
  for (char c : vars + ",") {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return cadorder::to_string(f, names);
}

}  // namespace testutil
