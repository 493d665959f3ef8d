#include "cadorder/problem_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "cadorder/errors.hpp"

namespace cadorder {

namespace {

constexpr unsigned kMaxExponentLiteral = 4096;

enum class Tok { kIdent, kInt, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kComma,
                 kRel, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based within the line
};

struct LineError {
  std::size_t column;
  std::string message;
};

std::vector<Token> lex(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = offset + i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::kInt, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    auto two = line.substr(i, 2);
    if (two == "<=" || two == ">=" || two == "!=") {
      out.push_back({Tok::kRel, std::string(two), col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '=':
      case '<':
      case '>': kind = Tok::kRel; break;
      default:
        throw LineError{col, std::string("unexpected character '") + c + "'"};
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::kEnd, "", offset + line.size() + 1});
  return out;
}

// A polynomial with rational coefficients, held as num / den with den > 0
// and gcd(content(num), den) = 1.
struct Fraction {
  Polynomial num;
  Integer den = 1;

  void reduce() {
    Integer g = integer_content(num);
    if (g == 0) {
      den = 1;
      return;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
      num = divide_exact(num, g);
      den /= g;
    }
  }
};

Fraction add(const Fraction& a, const Fraction& b, int sign) {
  Fraction r;
  r.num = a.num * b.den;
  Polynomial rhs = b.num * a.den;
  if (sign > 0) {
    r.num += rhs;
  } else {
    r.num -= rhs;
  }
  r.den = a.den * b.den;
  r.reduce();
  return r;
}

Fraction multiply(const Fraction& a, const Fraction& b) {
  Fraction r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}

class ExpressionParser {
 public:
  ExpressionParser(const std::vector<Token>& toks, std::size_t pos,
                   const std::vector<std::string>& vars)
      : toks_(toks), pos_(pos), vars_(vars) {}

  std::size_t position() const { return pos_; }

  Fraction expression() {
    Fraction acc = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      int sign = next().kind == Tok::kPlus ? 1 : -1;
      acc = add(acc, term(), sign);
    }
    return acc;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    std::string found = t.kind == Tok::kEnd ? "end of line" : "'" + t.text + "'";
    throw LineError{t.column, what + ", found " + found};
  }

  Fraction term() {
    Fraction acc = unary();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token& op = next();
      const Token& at = peek();
      Fraction rhs = unary();
      if (op.kind == Tok::kStar) {
        acc = multiply(acc, rhs);
      } else {
        if (!rhs.num.is_constant()) throw LineError{at.column, "division by a non-constant"};
        if (rhs.num.is_zero()) throw LineError{at.column, "division by zero"};
        Integer n = rhs.num.constant_value();
        Fraction inv{Polynomial(Integer(rhs.den * sgn(n))), abs(n)};
        acc = multiply(acc, inv);
      }
    }
    return acc;
  }

  Fraction unary() {
    if (peek().kind == Tok::kMinus) {
      next();
      Fraction f = unary();
      f.num = -f.num;
      return f;
    }
    if (peek().kind == Tok::kPlus) {
      next();
      return unary();
    }
    return power();
  }

  Fraction power() {
    Fraction base = atom();
    if (peek().kind != Tok::kCaret) return base;
    next();
    const Token& e = peek();
    if (e.kind != Tok::kInt) fail(e, "expected a nonnegative integer exponent");
    next();
    if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponentLiteral) {
      throw LineError{e.column, "exponent too large"};
    }
    const auto k = static_cast<unsigned>(std::stoul(e.text));
    Fraction r{pow(base.num, k), 1};
    mpz_pow_ui(r.den.get_mpz_t(), base.den.get_mpz_t(), k);
    if (peek().kind == Tok::kCaret) fail(peek(), "chained exponent needs parentheses");
    return r;
  }

  Fraction atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt:
        next();
        return {Polynomial(Integer(t.text)), 1};
      case Tok::kIdent: {
        next();
        for (VarIndex i = 0; i < vars_.size(); ++i) {
          if (vars_[i] == t.text) return {Polynomial::variable(i), 1};
        }
        throw LineError{t.column, "undeclared variable '" + t.text + "'"};
      }
      case Tok::kLParen: {
        next();
        Fraction inner = expression();
        if (peek().kind != Tok::kRParen) fail(peek(), "expected ')'");
        next();
        return inner;
      }
      default:
        fail(t, "expected a number, variable or '('");
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  const std::vector<std::string>& vars_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> parse_vars(std::string_view body, std::size_t offset) {
  auto toks = lex(body, offset);
  std::vector<std::string> vars;
  std::size_t i = 0;
  while (true) {
    const Token& t = toks[i];
    if (t.kind != Tok::kIdent) {
      throw LineError{t.column, "expected a variable name" +
                                    (t.kind == Tok::kEnd ? std::string(", found end of line")
                                                         : ", found '" + t.text + "'")};
    }
    for (const auto& v : vars) {
      if (v == t.text) throw LineError{t.column, "duplicate variable '" + t.text + "'"};
    }
    vars.push_back(t.text);
    ++i;
    if (toks[i].kind == Tok::kEnd) break;
    if (toks[i].kind != Tok::kComma) {
      throw LineError{toks[i].column, "expected ',' between variable names, found '" +
                                          toks[i].text + "'"};
    }
    ++i;
  }
  return vars;
}

Qff parse_qff(std::string_view body, std::size_t offset, const std::vector<std::string>& vars) {
  auto toks = lex(body, offset);
  Qff qff;
  if (toks.front().kind == Tok::kEnd) throw LineError{toks.front().column, "empty QFF"};
  std::size_t pos = 0;
  while (true) {
    ExpressionParser lhs_parser(toks, pos, vars);
    Fraction lhs = lhs_parser.expression();
    pos = lhs_parser.position();
    const Token& rel = toks[pos];
    if (rel.kind != Tok::kRel) {
      std::string found = rel.kind == Tok::kEnd ? "end of line" : "'" + rel.text + "'";
      throw LineError{rel.column, "expected a relational operator, found " + found};
    }
    ++pos;
    ExpressionParser rhs_parser(toks, pos, vars);
    Fraction rhs = rhs_parser.expression();
    pos = rhs_parser.position();
    Fraction diff = add(lhs, rhs, -1);
    if (diff.num.is_zero()) throw LineError{rel.column, "constraint polynomial is zero"};
    qff.constraints.push_back(Constraint::normalized(diff.num, *parse_relation(rel.text)));
    const Token& sep = toks[pos];
    if (sep.kind == Tok::kEnd) break;
    if (sep.kind != Tok::kComma) {
      throw LineError{sep.column, "expected ',' or end of line, found '" + sep.text + "'"};
    }
    ++pos;
  }
  return qff;
}

}  // namespace

std::string Diagnostic::to_string() const {
  return origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {
std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += d.to_string();
  }
  return out;
}
}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Problem parse_problem(const ProblemSource& src) {
  Problem p;
  bool have_vars = false;
  std::vector<Diagnostic> errors;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::string_view text = src.text;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    last_line = line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;

    std::size_t lead = line.find_first_not_of(" \t");
    std::string_view content = line.substr(lead);
    std::size_t colon = content.find(':');
    std::string_view keyword = colon == std::string_view::npos ? content : trim(content.substr(0, colon));
    try {
      if (colon == std::string_view::npos || (keyword != "vars" && keyword != "qff")) {
        throw LineError{lead + 1, "expected 'vars:' or 'qff:'"};
      }
      std::string_view body = content.substr(colon + 1);
      std::size_t offset = lead + colon + 1;
      if (keyword == "vars") {
        if (have_vars) throw LineError{lead + 1, "duplicate 'vars:' line"};
        p.variables = parse_vars(body, offset);
        have_vars = true;
      } else {
        if (!have_vars) throw LineError{lead + 1, "'qff:' line before the 'vars:' line"};
        p.qffs.push_back(parse_qff(body, offset, p.variables));
      }
    } catch (const LineError& e) {
      errors.push_back({src.origin, line_no, e.column, e.message});
    } catch (const AlgebraError& e) {
      errors.push_back({src.origin, line_no, 1, e.what()});
    }
  }
  if (errors.empty()) {
    if (!have_vars) errors.push_back({src.origin, std::max<std::size_t>(last_line, 1), 1,
                                      "missing 'vars:' line"});
    else if (p.qffs.empty()) errors.push_back({src.origin, std::max<std::size_t>(last_line, 1), 1,
                                               "missing 'qff:' line"});
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  if (auto violations = validate(p); !violations.empty()) {
    std::vector<Diagnostic> ds;
    for (auto& v : violations) ds.push_back({src.origin, 1, 1, v.message});
    throw ParseError(std::move(ds));
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem({ss.str(), path});
}

std::string print_problem(const Problem& p) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    if (i > 0) out += ',';
    out += p.variables[i];
  }
  out += '\n';
  for (const auto& q : p.qffs) {
    out += "qff: ";
    for (std::size_t i = 0; i < q.constraints.size(); ++i) {
      if (i > 0) out += ", ";
      const auto& c = q.constraints[i];
      out += to_string(c.poly, p.variables);
      out += ' ';
      out += symbol(c.relation);
      out += " 0";
    }
    out += '\n';
  }
  return out;
}

}  // namespace cadorder
