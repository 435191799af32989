#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "perturb.hpp"

namespace dres {

// ---------------------------------------------------------------- rendering

inline std::string to_string(const Rat& q) { return q.get_str(); }

namespace detail {

inline std::string fe_body(const FieldElem& c);

/// " + body", " - body" or, first in a sum, "body" / "-body".
inline std::string signed_term(const FieldElem& c, const std::string& mono, bool first) {
  bool neg = false;
  std::string body;
  if (c.is_const()) {
    Rat a = c.rational();
    neg = sgn(a) < 0;
    if (neg) a = -a;
    body = (a == 1 && !mono.empty()) ? mono : a.get_str() + (mono.empty() ? "" : "*" + mono);
  } else {
    body = fe_body(c) + (mono.empty() ? "" : "*" + mono);
  }
  if (first) return neg ? "-" + body : body;
  return (neg ? " - " : " + ") + body;
}

inline std::string power_mono(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace detail

/// Polynomial in t, highest degree first.
inline std::string to_string(const QPoly& a, const std::string& var = "t") {
  if (a.is_zero()) return "0";
  std::string s;
  for (int k = a.degree(); k >= 0; --k) {
    const Rat& c = a.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    s += detail::signed_term(FieldElem(c), detail::power_mono(var, k), s.empty());
  }
  return s;
}

namespace detail {
inline std::string fe_body(const FieldElem& c) {
  if (c.is_const()) return c.rational().get_str();
  if (c.is_polynomial()) return "(" + to_string(c.numerator()) + ")";
  return "(" + to_string(c.numerator()) + ")/(" + to_string(c.denominator()) + ")";
}
}  // namespace detail

/// `5`, `-3/4`, `(t^2 + 1)`, `(t)/(t - 1)`.
inline std::string to_string(const FieldElem& c) { return detail::fe_body(c); }

/// `x1`, `x1'`, `x1''`, `u2^(3)`.
inline std::string to_string(const DerVar& v) {
  std::string s = (v.kind == VarKind::X ? "x" : "u") + std::to_string(v.index);
  if (v.order >= 3) return s + "^(" + std::to_string(v.order) + ")";
  return s + std::string(static_cast<std::size_t>(v.order), '\'');
}

/// `c0 + c1*d + c2*d^2`.
inline std::string to_string(const OrePoly& L) {
  std::string s;
  for (int k = 0; k <= L.degree(); ++k) {
    const FieldElem& c = L.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    s += detail::signed_term(c, detail::power_mono("d", k), s.empty());
  }
  return s.empty() ? "0" : s;
}

/// Polynomial in the perturbation constant p, lowest degree first.
inline std::string to_string(const PertPoly& a) {
  std::string s;
  for (int k = 0; k <= a.degree(); ++k) {
    const FieldElem& c = a.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    s += detail::signed_term(c, detail::power_mono("p", k), s.empty());
  }
  return s.empty() ? "0" : s;
}

/// Terms in decreasing R*, then the constant.
inline std::string to_string(const LinPoly& P) {
  std::string s;
  for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it)
    s += detail::signed_term(it->second, to_string(it->first), s.empty());
  if (!P.constant().is_zero() || s.empty()) s += detail::signed_term(P.constant(), "", s.empty());
  return s;
}

inline std::string to_string(const PertLinPoly& P) {
  std::string s;
  auto put = [&](const PertPoly& c, const std::string& mono) {
    if (c.degree() <= 0) {
      s += detail::signed_term(c.coeff(0), mono, s.empty());
      return;
    }
    std::string body = "(" + to_string(c) + ")" + (mono.empty() ? "" : "*" + mono);
    s += s.empty() ? body : " + " + body;
  };
  for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) put(it->second, to_string(it->first));
  if (!P.constant().is_zero() || s.empty()) put(P.constant(), "");
  return s;
}

template <typename R>
std::string to_string(const Matrix<R>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "[";
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ parsing

namespace detail {

enum class Tok { Int, Ident, Prime, Op, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int col;  // 1-based
};

inline std::vector<Token> lex(const std::string& s, int line, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    const int col = col0 + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (ch == '\'') {
      out.push_back({Tok::Prime, "'", col});
      ++i;
    } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^') {
      out.push_back({Tok::Op, std::string(1, ch), col});
      ++i;
    } else if (ch == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (ch == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else if (ch == ',') {
      out.push_back({Tok::Comma, ",", col});
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + ch + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", col0 + static_cast<int>(s.size())});
  return out;
}

/// Recursive-descent parser over an algebra of values V.  The algebra supplies
/// integer literals, identifiers and the arithmetic; it reports semantic
/// problems by throwing.
template <typename V>
struct Algebra {
  std::function<V(const Rat&)> number;
  // name, derivative order (-1 when none was written), column
  std::function<V(const std::string&, int, int)> ident;
  std::function<bool(const std::string&)> is_differential;
  std::function<V(const V&, const V&, int)> mul;
  std::function<V(const V&, const V&, int)> div;
  std::function<V(const V&, long, int)> pow;
};

template <typename V>
class Parser {
 public:
  Parser(std::vector<Token> toks, int line, const Algebra<V>& alg) : t_(std::move(toks)), line_(line), alg_(alg) {}

  V expression() {
    V v = term();
    while (peek().kind == Tok::Op && (peek().text == "+" || peek().text == "-")) {
      const bool minus = next().text == "-";
      V r = term();
      v = minus ? V(v - r) : V(v + r);
    }
    return v;
  }

  /// Comma-separated expressions up to End.
  std::vector<V> expression_list() {
    std::vector<V> out{expression()};
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(expression());
    }
    expect_end();
    return out;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, peek().col); }

  V term() {
    V v = unary();
    while (peek().kind == Tok::Op && (peek().text == "*" || peek().text == "/")) {
      const Token op = next();
      V r = unary();
      v = op.text == "*" ? alg_.mul(v, r, op.col) : alg_.div(v, r, op.col);
    }
    return v;
  }

  V unary() {
    if (peek().kind == Tok::Op && (peek().text == "-" || peek().text == "+")) {
      const bool minus = next().text == "-";
      V v = unary();
      return minus ? V(-v) : v;
    }
    return power();
  }

  V power() {
    V base = atom();
    if (peek().kind == Tok::Op && peek().text == "^") {
      const Token op = next();
      bool paren = false, neg = false;
      if (peek().kind == Tok::LParen) {
        next();
        paren = true;
      }
      if (peek().kind == Tok::Op && peek().text == "-") {
        next();
        neg = true;
      }
      if (peek().kind != Tok::Int) fail("expected an integer exponent");
      long e = std::stol(next().text);
      if (paren) {
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
      }
      return alg_.pow(base, neg ? -e : e, op.col);
    }
    return base;
  }

  V atom() {
    const Token tk = peek();
    if (tk.kind == Tok::Int) {
      next();
      return alg_.number(Rat(mpz_class(tk.text)));
    }
    if (tk.kind == Tok::LParen) {
      next();
      V v = expression();
      if (peek().kind != Tok::RParen) fail("expected ')'");
      next();
      return v;
    }
    if (tk.kind == Tok::Ident) {
      next();
      int order = -1;
      if (alg_.is_differential(tk.text)) {
        if (peek().kind == Tok::Prime) {
          order = 0;
          while (peek().kind == Tok::Prime) {
            next();
            ++order;
          }
        } else if (peek().kind == Tok::Op && peek().text == "^" && pos_ + 1 < t_.size() &&
                   t_[pos_ + 1].kind == Tok::LParen) {
          next();
          next();
          if (peek().kind != Tok::Int) fail("expected a derivative order");
          order = std::stoi(next().text);
          if (peek().kind != Tok::RParen) fail("expected ')'");
          next();
        }
      }
      return alg_.ident(tk.text, order, tk.col);
    }
    if (tk.kind == Tok::End) fail("unexpected end of input");
    fail("unexpected '" + tk.text + "'");
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  int line_;
  const Algebra<V>& alg_;
};

/// Split "u12" into ('u', 12); index 0 when the name does not have that form.
inline std::pair<char, int> split_var(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'u' && name[0] != 'x')) return {0, 0};
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return {0, 0};
  if (name[1] == '0') return {0, 0};
  return {name[0], std::stoi(name.substr(1))};
}

struct LinContext {
  FieldTag field = FieldTag::Q;
  int line = 1;
  std::set<int> params;  // empty: any parameter index accepted
  bool allow_x = false;
};

inline Algebra<LinPoly> lin_algebra(const LinContext& ctx) {
  Algebra<LinPoly> a;
  const int line = ctx.line;
  a.number = [](const Rat& q) { return LinPoly(FieldElem(q)); };
  a.is_differential = [](const std::string& s) { return split_var(s).first != 0; };
  a.ident = [ctx](const std::string& name, int order, int col) -> LinPoly {
    if (name == "t") {
      if (ctx.field != FieldTag::Qt) throw SemanticError("line " + std::to_string(ctx.line) + ", column " + std::to_string(col) + ": 't' requires field Q(t)");
      return LinPoly(FieldElem::t());
    }
    auto [kind, idx] = split_var(name);
    if (kind == 0) throw SyntaxError("unknown identifier '" + name + "'", ctx.line, col);
    const int k = std::max(order, 0);
    if (kind == 'x') {
      if (!ctx.allow_x) throw SemanticError("line " + std::to_string(ctx.line) + ": x variable '" + name + "' on a right-hand side");
      return LinPoly::term(xvar(idx, k), FieldElem(1));
    }
    if (!ctx.params.empty() && !ctx.params.count(idx))
      throw SemanticError("line " + std::to_string(ctx.line) + ": undeclared parameter '" + name + "'");
    return LinPoly::term(uvar(idx, k), FieldElem(1));
  };
  auto scalar = [](const LinPoly& v) { return v.terms().empty(); };
  a.mul = [scalar, line](const LinPoly& x, const LinPoly& y, int col) -> LinPoly {
    if (scalar(x)) return y.scaled(x.constant());
    if (scalar(y)) return x.scaled(y.constant());
    throw SemanticError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": nonlinear term");
  };
  a.div = [scalar, line](const LinPoly& x, const LinPoly& y, int col) -> LinPoly {
    if (!scalar(y)) throw SemanticError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": division by a variable");
    if (y.constant().is_zero()) throw SemanticError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": division by zero");
    return x.scaled(y.constant().inverse());
  };
  a.pow = [scalar, line](const LinPoly& x, long e, int col) -> LinPoly {
    if (!scalar(x)) {
      if (e == 1) return x;
      throw SemanticError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": nonlinear term");
    }
    FieldElem b = x.constant();
    if (e < 0) {
      if (b.is_zero()) throw SemanticError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": division by zero");
      b = b.inverse();
      e = -e;
    }
    FieldElem r(1);
    for (long k = 0; k < e; ++k) r *= b;
    return LinPoly(r);
  };
  return a;
}

inline OrePoly ore_pow(const OrePoly& x, long e) {
  OrePoly r = OrePoly::one();
  for (long k = 0; k < e; ++k) r = r * x;
  return r;
}

inline Algebra<OrePoly> ore_algebra(FieldTag field) {
  Algebra<OrePoly> a;
  a.number = [](const Rat& q) { return OrePoly(FieldElem(q)); };
  a.is_differential = [](const std::string&) { return false; };
  a.ident = [field](const std::string& name, int, int col) -> OrePoly {
    if (name == "d") return OrePoly::d();
    if (name == "t") {
      if (field != FieldTag::Qt) throw SemanticError("column " + std::to_string(col) + ": 't' requires field Q(t)");
      return OrePoly(FieldElem::t());
    }
    throw SyntaxError("unknown identifier '" + name + "'", 1, col);
  };
  a.mul = [](const OrePoly& x, const OrePoly& y, int) { return x * y; };
  a.div = [](const OrePoly& x, const OrePoly& y, int col) -> OrePoly {
    if (y.degree() != 0) throw SemanticError("column " + std::to_string(col) + ": division by an operator");
    return y.lead().inverse() * x;
  };
  a.pow = [](const OrePoly& x, long e, int col) -> OrePoly {
    if (e < 0) {
      if (x.degree() != 0) throw SemanticError("column " + std::to_string(col) + ": negative power of an operator");
      return ore_pow(OrePoly(x.lead().inverse()), -e);
    }
    return ore_pow(x, e);
  };
  return a;
}

}  // namespace detail

/// Parse a field element such as `(t^2 + 1)/(t - 1)` or `-3/4`.
inline FieldElem parse_field_elem(const std::string& s, FieldTag field = FieldTag::Qt) {
  detail::LinContext ctx;
  ctx.field = field;
  auto alg = detail::lin_algebra(ctx);
  detail::Parser<LinPoly> p(detail::lex(s, 1, 1), 1, alg);
  LinPoly v = p.expression();
  p.expect_end();
  if (!v.terms().empty()) throw SemanticError("expected a field element");
  return v.constant();
}

/// Parse an operator such as `1 + t*d + d^2`; products follow d*c = c*d + c'.
inline OrePoly parse_ore(const std::string& s, FieldTag field = FieldTag::Qt) {
  auto alg = detail::ore_algebra(field);
  detail::Parser<OrePoly> p(detail::lex(s, 1, 1), 1, alg);
  OrePoly v = p.expression();
  p.expect_end();
  return v;
}

/// Parse a linear differential polynomial in x and u variables.
inline LinPoly parse_linpoly(const std::string& s, FieldTag field = FieldTag::Qt) {
  detail::LinContext ctx;
  ctx.field = field;
  ctx.allow_x = true;
  auto alg = detail::lin_algebra(ctx);
  detail::Parser<LinPoly> p(detail::lex(s, 1, 1), 1, alg);
  LinPoly v = p.expression();
  p.expect_end();
  return v;
}

struct Document {
  DPPESystem sys;
  std::vector<std::string> params;
  std::optional<Perturbation> phi;
};

/// Parse a comma-separated perturbation list for a system with n equations.
inline Perturbation parse_perturbation(const std::string& s, FieldTag field, int n, int line = 1, int col0 = 1) {
  detail::LinContext ctx;
  ctx.field = field;
  ctx.line = line;
  for (int j = 1; j < n; ++j) ctx.params.insert(j);
  auto alg = detail::lin_algebra(ctx);
  detail::Parser<LinPoly> p(detail::lex(s, line, col0), line, alg);
  Perturbation P;
  P.phi = p.expression_list();
  if (static_cast<int>(P.phi.size()) != n)
    throw SemanticError("perturbation has " + std::to_string(P.phi.size()) + " entries, expected " + std::to_string(n));
  for (const auto& f : P.phi)
    if (!f.is_homogeneous()) throw SemanticError("perturbation entries must not have constant terms");
  return P;
}

/// Parse a .dppe document.
inline Document parse_document(const std::string& text) {
  struct Line {
    int no;
    std::string key;   // "field", "params", "phi" or the x variable name
    std::string body;
    int body_col;
  };
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = raw.find(':');
    const auto eq = raw.find('=');
    std::size_t sep = std::min(colon, eq);
    if (sep == std::string::npos) throw SyntaxError("expected 'key:' or 'x<i> ='", no, 1);
    std::string key = raw.substr(0, sep);
    const auto a = key.find_first_not_of(" \t");
    const auto b = key.find_last_not_of(" \t");
    key = a == std::string::npos ? "" : key.substr(a, b - a + 1);
    const bool is_eq = sep == eq;
    if (is_eq != (!key.empty() && key[0] == 'x'))
      throw SyntaxError(is_eq ? "left-hand side must be an x variable" : "unknown header '" + key + "'", no, static_cast<int>(a == std::string::npos ? 1 : a + 1));
    lines.push_back({no, key, raw.substr(sep + 1), static_cast<int>(sep) + 2});
  }

  Document doc;
  FieldTag field = FieldTag::Q;
  std::optional<Line> params_line, phi_line;
  bool seen_field = false;
  for (const auto& l : lines) {
    if (l.key == "field") {
      if (seen_field) throw SemanticError("line " + std::to_string(l.no) + ": duplicate field line");
      seen_field = true;
      std::string v;
      for (char c : l.body)
        if (!std::isspace(static_cast<unsigned char>(c))) v += c;
      if (v == "Q") field = FieldTag::Q;
      else if (v == "Q(t)") field = FieldTag::Qt;
      else throw SyntaxError("field must be Q or Q(t)", l.no, l.body_col);
    } else if (l.key == "params") {
      if (params_line) throw SemanticError("line " + std::to_string(l.no) + ": duplicate params line");
      params_line = l;
    } else if (l.key == "phi") {
      if (phi_line) throw SemanticError("line " + std::to_string(l.no) + ": duplicate phi line");
      phi_line = l;
    } else if (l.key[0] != 'x') {
      throw SyntaxError("unknown header '" + l.key + "'", l.no, 1);
    }
  }
  doc.sys.field = field;

  std::set<int> params;
  if (!params_line) throw SemanticError("missing params line");
  {
    auto toks = detail::lex(params_line->body, params_line->no, params_line->body_col);
    std::size_t i = 0;
    for (;;) {
      if (toks[i].kind != detail::Tok::Ident || detail::split_var(toks[i].text).first != 'u')
        throw SyntaxError("expected a parameter name u<j>", params_line->no, toks[i].col);
      const int j = detail::split_var(toks[i].text).second;
      if (!params.insert(j).second) throw SemanticError("line " + std::to_string(params_line->no) + ": duplicate parameter u" + std::to_string(j));
      doc.params.push_back(toks[i].text);
      ++i;
      if (toks[i].kind == detail::Tok::End) break;
      if (toks[i].kind != detail::Tok::Comma) throw SyntaxError("expected ','", params_line->no, toks[i].col);
      ++i;
    }
  }

  std::map<int, LinPoly> rhs;
  for (const auto& l : lines) {
    if (l.key[0] != 'x') continue;
    auto [kind, idx] = detail::split_var(l.key);
    if (kind != 'x') throw SyntaxError("left-hand side must be x<i>", l.no, 1);
    if (rhs.count(idx)) throw SemanticError("line " + std::to_string(l.no) + ": duplicate equation for " + l.key);
    detail::LinContext ctx;
    ctx.field = field;
    ctx.line = l.no;
    ctx.params = params;
    auto alg = detail::lin_algebra(ctx);
    detail::Parser<LinPoly> p(detail::lex(l.body, l.no, l.body_col), l.no, alg);
    LinPoly v = p.expression();
    p.expect_end();
    rhs.emplace(idx, std::move(v));
  }
  const int n = static_cast<int>(rhs.size());
  if (n < 2) throw SemanticError("need at least two equations");
  if (rhs.rbegin()->first != n) throw SemanticError("equations must define x1..x" + std::to_string(n));
  if (static_cast<int>(params.size()) != n - 1)
    throw SemanticError(std::to_string(params.size()) + " parameters declared for " + std::to_string(n) + " equations, expected " + std::to_string(n - 1));
  if (*params.rbegin() != n - 1) throw SemanticError("parameters must be u1..u" + std::to_string(n - 1));

  std::vector<LinPoly> P;
  for (auto& [i, v] : rhs) P.push_back(std::move(v));
  doc.sys = from_parametrization(field, P);
  std::set<int> used;
  bool any = false;
  for (const auto& h : doc.sys.H)
    for (const auto& [v, c] : h.terms()) {
      used.insert(v.index);
      any = true;
    }
  if (!any) throw SemanticError("every right-hand side is constant");
  for (int j : params)
    if (!used.count(j)) throw SemanticError("parameter u" + std::to_string(j) + " is unused");

  if (phi_line) doc.phi = parse_perturbation(phi_line->body, field, n, phi_line->no, phi_line->body_col);
  return doc;
}

/// Render a system back into the document format.
inline std::string render_document(const DPPESystem& sys, const std::optional<Perturbation>& phi = std::nullopt) {
  std::ostringstream os;
  os << "field: " << (sys.field == FieldTag::Qt ? "Q(t)" : "Q") << "\nparams: ";
  for (int j = 1; j < sys.n(); ++j) os << (j > 1 ? ", " : "") << "u" << j;
  os << "\n";
  for (int i = 1; i <= sys.n(); ++i) os << "x" << i << " = " << to_string(parametrization(sys, i)) << "\n";
  if (phi) {
    os << "phi: ";
    for (std::size_t i = 0; i < phi->phi.size(); ++i) os << (i ? ", " : "") << to_string(phi->phi[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace dres
