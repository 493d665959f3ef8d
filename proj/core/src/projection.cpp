#include "cadorder/projection.hpp"

#include <algorithm>
#include <optional>

#include "cadorder/algebra.hpp"
#include "cadorder/errors.hpp"

namespace cadorder {

namespace {

// Content w.r.t. var and the squarefree primitive part (absent when the
// polynomial does not contain var).
struct Prepared {
  Polynomial content;
  std::optional<Polynomial> part;
};

Prepared prepare(const Polynomial& f, VarIndex var) {
  if (f.is_zero()) throw AlgebraError("zero polynomial in projection input");
  if (!f.contains(var)) return {f, std::nullopt};
  auto [c, p] = content_primitive(f, var);
  return {std::move(c), squarefree_part(p)};
}

void add_coefficients(std::vector<Polynomial>& out, const Polynomial& f, VarIndex var) {
  for (auto& c : coefficients(f, var)) out.push_back(std::move(c));
}

void add_discriminant(std::vector<Polynomial>& out, const Polynomial& f, VarIndex var) {
  if (degree(f, var) >= 2) out.push_back(discriminant(f, var));
}

std::size_t remaining_variables(std::span<const Polynomial> polys, VarIndex var) {
  std::vector<bool> seen(kMaxVariables, false);
  for (const auto& f : polys) {
    for (VarIndex v : f.variables()) seen[v] = true;
  }
  seen[var] = false;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

std::vector<Polynomial> constraint_polys(const Qff& q) {
  std::vector<Polynomial> out;
  for (const auto& c : q.constraints) out.push_back(c.poly);
  return make_set(std::move(out));
}

}  // namespace

PolynomialSet normalize_projection(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (auto& f : polys) {
    if (f.is_constant()) continue;
    Polynomial g = squarefree_part(f);
    Integer c = integer_content(g);
    if (c != 1) g = divide_exact(g, c);
    out.push_back(sign_normalized(std::move(g)));
  }
  return make_set(std::move(out));
}

PolynomialSet normalize_raw(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (auto& f : polys) {
    if (f.is_constant()) continue;
    out.push_back(sign_normalized(std::move(f)));
  }
  return make_set(std::move(out));
}

std::vector<Polynomial> coprime_basis(std::vector<Polynomial> polys) {
  std::vector<Polynomial> basis = make_set(std::move(polys));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        Polynomial g = gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        std::vector<Polynomial> next;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (k != i && k != j) next.push_back(basis[k]);
        }
        for (Polynomial q : {divide_exact(basis[i], g), divide_exact(basis[j], g), g}) {
          if (!q.is_constant()) next.push_back(sign_normalized(std::move(q)));
        }
        basis = make_set(std::move(next));
        changed = true;
      }
    }
  }
  return basis;
}

ProjectionSet mccallum_project(std::span<const Polynomial> polys, VarIndex var) {
  std::vector<Polynomial> out;
  std::vector<Polynomial> parts;
  for (const auto& f : polys) {
    Prepared p = prepare(f, var);
    out.push_back(std::move(p.content));
    if (p.part) parts.push_back(std::move(*p.part));
  }
  std::vector<Polynomial> basis = coprime_basis(std::move(parts));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    add_coefficients(out, basis[i], var);
    add_discriminant(out, basis[i], var);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      out.push_back(resultant(basis[i], basis[j], var));
    }
  }
  return {normalize_projection(std::move(out)), var, remaining_variables(polys, var)};
}

ProjectionSet tti_project(const Problem& p, VarIndex var) {
  const bool any_ec = std::any_of(p.qffs.begin(), p.qffs.end(),
                                  [](const Qff& q) { return q.ec_count() > 0; });
  PolynomialSet all = defining_polynomials(p);
  if (!any_ec) return mccallum_project(all, var);

  std::vector<Polynomial> out;
  // Per QFF, the prepared polynomials that take part in cross-QFF resultants:
  // the first EC, or every constraint polynomial when the QFF has no EC.
  std::vector<std::vector<Prepared>> designated;
  for (const auto& q : p.qffs) {
    std::vector<Prepared> chosen;
    if (const Constraint* ec = q.first_ec()) {
      Prepared e = prepare(ec->poly, var);
      out.push_back(e.content);
      if (e.part) {
        add_coefficients(out, *e.part, var);
        add_discriminant(out, *e.part, var);
        for (const auto& g : constraint_polys(q)) {
          if (g == ec->poly) continue;
          Prepared pg = prepare(g, var);
          out.push_back(pg.content);
          if (pg.part && *pg.part != *e.part) out.push_back(resultant(*e.part, *pg.part, var));
        }
      }
      chosen.push_back(std::move(e));
    } else {
      auto polys = constraint_polys(q);
      for (auto& f : mccallum_project(polys, var).polys) out.push_back(std::move(f));
      for (const auto& g : polys) chosen.push_back(prepare(g, var));
    }
    designated.push_back(std::move(chosen));
  }
  for (std::size_t i = 0; i < designated.size(); ++i) {
    for (std::size_t j = i + 1; j < designated.size(); ++j) {
      for (const auto& f : designated[i]) {
        for (const auto& g : designated[j]) {
          if (f.part && g.part && *f.part != *g.part) {
            out.push_back(resultant(*f.part, *g.part, var));
          }
        }
      }
    }
  }
  return {normalize_projection(std::move(out)), var, remaining_variables(all, var)};
}

ProjectionCascade project_cascade(std::span<const Polynomial> polys,
                                  const VariableOrdering& ordering) {
  ProjectionCascade cascade;
  if (ordering.size() < 2) return cascade;
  std::vector<Polynomial> current(polys.begin(), polys.end());
  for (std::size_t i = 0; i + 1 < ordering.size(); ++i) {
    ProjectionSet s = mccallum_project(current, ordering[i]);
    s.level = ordering.size() - i - 1;
    current = s.polys;
    cascade.stages.push_back(std::move(s));
  }
  return cascade;
}

ProjectionCascade project_cascade(const Problem& p, const VariableOrdering& ordering,
                                  ProjectionKind kind) {
  if (!ordering.is_permutation_of(p.num_variables())) {
    throw InputError("ordering is not a permutation of the problem's variables");
  }
  if (kind == ProjectionKind::kFull) return project_cascade(defining_polynomials(p), ordering);
  ProjectionCascade cascade;
  if (ordering.size() < 2) return cascade;
  ProjectionSet first = tti_project(p, ordering[0]);
  first.level = ordering.size() - 1;
  std::vector<Polynomial> current = first.polys;
  cascade.stages.push_back(std::move(first));
  for (std::size_t i = 1; i + 1 < ordering.size(); ++i) {
    ProjectionSet s = mccallum_project(current, ordering[i]);
    s.level = ordering.size() - i - 1;
    current = s.polys;
    cascade.stages.push_back(std::move(s));
  }
  return cascade;
}

namespace {

void add_closure(std::vector<Polynomial>& out, std::span<const Polynomial> polys, VarIndex var) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    out.push_back(discriminant(polys[i], var));
    out.push_back(leading_coefficient(polys[i], var));
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i] != polys[j]) out.push_back(resultant(polys[i], polys[j], var));
    }
  }
}

}  // namespace

PolynomialSet newh_set(const Problem& p, VarIndex var) {
  std::vector<Polynomial> out;
  std::vector<Polynomial> firsts;
  for (const auto& q : p.qffs) {
    if (!q.constraints.empty()) firsts.push_back(q.constraints.front().poly);
  }
  add_closure(out, make_set(std::move(firsts)), var);
  for (const auto& q : p.qffs) {
    if (q.ec_count() == 0) {
      add_closure(out, constraint_polys(q), var);
    } else if (q.ec_count() >= 2) {
      const Polynomial& a = q.first_ec()->poly;
      const Polynomial& b = q.second_ec()->poly;
      if (a != b) out.push_back(resultant(a, b, var));
    }
  }
  return normalize_raw(std::move(out));
}

PolynomialSet newh_closure(const Problem& p, VarIndex var) {
  std::vector<Polynomial> out;
  add_closure(out, defining_polynomials(p), var);
  return normalize_raw(std::move(out));
}

PolynomialSet newh_omitted_set(const Problem& p, VarIndex var) {
  PolynomialSet all = newh_closure(p, var);
  PolynomialSet used = newh_set(p, var);
  PolynomialSet out;
  std::set_difference(all.begin(), all.end(), used.begin(), used.end(), std::back_inserter(out),
                      PolynomialLess{});
  return out;
}

}  // namespace cadorder
