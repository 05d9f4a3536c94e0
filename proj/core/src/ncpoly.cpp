#include "cohana/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cohana/errors.hpp"

namespace cohana::qplane {

LaurentQ LaurentQ::scalar(cplx v) {
  LaurentQ out;
  if (v != cplx{0.0, 0.0}) out.c[0] = v;
  return out;
}

LaurentQ LaurentQ::qpow(int k, cplx v) {
  LaurentQ out;
  if (v != cplx{0.0, 0.0}) out.c[k] = v;
  return out;
}

cplx LaurentQ::eval(cplx q) const {
  cplx acc{0.0, 0.0};
  for (const auto& [k, v] : c) acc += v * std::pow(q, k);
  return acc;
}

void LaurentQ::cleanup() {
  for (auto it = c.begin(); it != c.end();)
    it = (it->second == cplx{0.0, 0.0}) ? c.erase(it) : std::next(it);
}

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out = a;
  for (const auto& [k, v] : b.c) out.c[k] += v;
  out.cleanup();
  return out;
}

LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return a + (-b); }

LaurentQ operator-(const LaurentQ& a) {
  LaurentQ out = a;
  for (auto& [k, v] : out.c) v = -v;
  return out;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) out.c[ka + kb] += va * vb;
  out.cleanup();
  return out;
}

LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw error(errc::invalid_input, "LaurentQ: division by zero");
  LaurentQ rem = a, quot;
  int bdeg = b.c.rbegin()->first;
  cplx blead = b.c.rbegin()->second;
  while (!rem.is_zero()) {
    int rdeg = rem.c.rbegin()->first;
    cplx factor = rem.c.rbegin()->second / blead;
    LaurentQ piece = LaurentQ::qpow(rdeg - bdeg, factor);
    quot = quot + piece;
    rem = rem - piece * b;
    // guard against a non-dividing pair: coefficients must shrink
    for (auto& [k, v] : rem.c)
      if (std::abs(v) < 1e-12) v = 0.0;
    rem.cleanup();
    if (!rem.is_zero() && rem.c.rbegin()->first >= rdeg)
      throw error(errc::invalid_input, "LaurentQ: exact division failed");
  }
  return quot;
}

char symbol_char(Symbol s) { return "xyabcd"[static_cast<int>(s)]; }

bool WordLess::operator()(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

NCPoly NCPoly::one() {
  NCPoly p;
  p.terms[Word{}] = LaurentQ::scalar(1.0);
  return p;
}

NCPoly NCPoly::symbol(Symbol s) {
  NCPoly p;
  p.terms[Word{s}] = LaurentQ::scalar(1.0);
  return p;
}

NCPoly NCPoly::scalar(LaurentQ v) {
  NCPoly p;
  if (!v.is_zero()) p.terms[Word{}] = std::move(v);
  return p;
}

void NCPoly::add_term(const Word& w, const LaurentQ& coeff) {
  auto it = terms.find(w);
  if (it == terms.end()) {
    if (!coeff.is_zero()) terms[w] = coeff;
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms.erase(it);
}

void NCPoly::cleanup() {
  for (auto it = terms.begin(); it != terms.end();) {
    it->second.cleanup();
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
}

NCPoly NCPoly::specialize_q(cplx qval) const {
  NCPoly out;
  for (const auto& [w, coeff] : terms) out.add_term(w, LaurentQ::scalar(coeff.eval(qval)));
  return out;
}

Eigen::MatrixXcd NCPoly::eval(const std::map<Symbol, Eigen::MatrixXcd>& subst, cplx qval) const {
  if (subst.empty()) throw error(errc::invalid_input, "NCPoly::eval: empty substitution");
  const long n = subst.begin()->second.rows();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [w, coeff] : terms) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(n, n);
    for (Symbol s : w) {
      auto it = subst.find(s);
      if (it == subst.end())
        throw error(errc::invalid_input, "NCPoly::eval: no matrix for symbol");
      prod = prod * it->second;
    }
    acc += coeff.eval(qval) * prod;
  }
  return acc;
}

NCPoly operator+(const NCPoly& p, const NCPoly& r) {
  NCPoly out = p;
  for (const auto& [w, coeff] : r.terms) out.add_term(w, coeff);
  return out;
}

NCPoly operator-(const NCPoly& p, const NCPoly& r) {
  NCPoly out = p;
  for (const auto& [w, coeff] : r.terms) out.add_term(w, -coeff);
  return out;
}

NCPoly operator*(const NCPoly& p, const NCPoly& r) {
  NCPoly out;
  for (const auto& [wp, cp] : p.terms)
    for (const auto& [wr, cr] : r.terms) {
      Word w = wp;
      w.insert(w.end(), wr.begin(), wr.end());
      out.add_term(w, cp * cr);
    }
  return out;
}

NCPoly operator*(const LaurentQ& s, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, coeff] : p.terms) out.add_term(w, s * coeff);
  return out;
}

namespace {

const RewriteRule* match_at(const std::vector<RewriteRule>& rules, const Word& w, std::size_t pos) {
  for (const auto& rule : rules)
    if (pos + 1 < w.size() && w[pos] == rule.lhs[0] && w[pos + 1] == rule.lhs[1]) return &rule;
  return nullptr;
}

NCPoly reduce_term_once(const Word& w, const LaurentQ& coeff, const RewriteRule& rule,
                        std::size_t pos) {
  NCPoly prefix;
  prefix.terms[Word(w.begin(), w.begin() + pos)] = coeff;
  NCPoly suffix;
  suffix.terms[Word(w.begin() + pos + 2, w.end())] = LaurentQ::scalar(1.0);
  return prefix * rule.rhs * suffix;
}

NCPoly normal_order_impl(const NCPoly& p, const std::vector<RewriteRule>& rules) {
  NCPoly done;
  NCPoly pending = p;
  while (!pending.is_zero()) {
    auto it = std::prev(pending.terms.end()); // largest word first
    Word w = it->first;
    LaurentQ coeff = it->second;
    pending.terms.erase(it);
    const RewriteRule* rule = nullptr;
    std::size_t pos = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if ((rule = match_at(rules, w, i))) {
        pos = i;
        break;
      }
    if (!rule) {
      done.add_term(w, coeff);
    } else {
      pending = pending + reduce_term_once(w, coeff, *rule, pos);
    }
  }
  done.cleanup();
  return done;
}

} // namespace

RelationSet::RelationSet(std::vector<RewriteRule> rules_) : rules(std::move(rules_)) {
  WordLess less;
  for (const auto& rule : rules) {
    if (rule.lhs.size() != 2)
      throw error(errc::invalid_input, "RelationSet: rules must rewrite 2-letter words");
    for (const auto& [w, coeff] : rule.rhs.terms)
      if (!less(w, rule.lhs))
        throw error(errc::invalid_input, "RelationSet: rule does not decrease the word order");
  }
  // exhaustive 3-letter overlap check
  std::vector<Symbol> alphabet;
  for (const auto& rule : rules)
    for (Symbol s : rule.lhs)
      if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) alphabet.push_back(s);
  for (Symbol s1 : alphabet)
    for (Symbol s2 : alphabet)
      for (Symbol s3 : alphabet) {
        Word w{s1, s2, s3};
        const RewriteRule* left = match_at(rules, w, 0);
        const RewriteRule* right = match_at(rules, w, 1);
        if (!left || !right) continue;
        NCPoly a = normal_order_impl(reduce_term_once(w, LaurentQ::scalar(1.0), *left, 0), rules);
        NCPoly b = normal_order_impl(reduce_term_once(w, LaurentQ::scalar(1.0), *right, 1), rules);
        NCPoly diff = a - b;
        diff.cleanup();
        if (!diff.is_zero())
          throw error(errc::invalid_input, "RelationSet: critical pair is not confluent");
      }
}

NCPoly normal_order(const NCPoly& p, const RelationSet& rel) {
  return normal_order_impl(p, rel.rules);
}

namespace {

RewriteRule scaled_swap(Symbol l1, Symbol l2, LaurentQ scale) {
  RewriteRule r;
  r.lhs = Word{l1, l2};
  NCPoly rhs;
  rhs.terms[Word{l2, l1}] = std::move(scale);
  r.rhs = rhs;
  return r;
}

std::vector<RewriteRule> mq2_core_rules() {
  using S = Symbol;
  std::vector<RewriteRule> rules;
  rules.push_back(scaled_swap(S::b, S::a, LaurentQ::qpow(-1))); // ab = q ba
  rules.push_back(scaled_swap(S::c, S::a, LaurentQ::qpow(-1))); // ac = q ca
  rules.push_back(scaled_swap(S::d, S::b, LaurentQ::qpow(-1))); // bd = q db
  rules.push_back(scaled_swap(S::d, S::c, LaurentQ::qpow(-1))); // cd = q dc
  rules.push_back(scaled_swap(S::c, S::b, LaurentQ::scalar(1.0)));
  RewriteRule da;
  da.lhs = Word{S::d, S::a};
  NCPoly rhs;
  rhs.terms[Word{S::a, S::d}] = LaurentQ::scalar(1.0);
  rhs.terms[Word{S::b, S::c}] = LaurentQ::qpow(-1) - LaurentQ::qpow(1); // -(q - q^{-1}) bc
  da.rhs = rhs;
  rules.push_back(da);
  return rules;
}

} // namespace

RelationSet manin_relations() {
  return RelationSet({scaled_swap(Symbol::y, Symbol::x, LaurentQ::qpow(-1))});
}

RelationSet mq2_relations() { return RelationSet(mq2_core_rules()); }

RelationSet mq2_full_relations() {
  using S = Symbol;
  std::vector<RewriteRule> rules = mq2_core_rules();
  rules.push_back(scaled_swap(S::y, S::x, LaurentQ::qpow(-1)));
  for (S mat : {S::a, S::b, S::c, S::d})
    for (S pl : {S::x, S::y}) rules.push_back(scaled_swap(mat, pl, LaurentQ::scalar(1.0)));
  return RelationSet(std::move(rules));
}

// ---------------------------------------------------------------- parsing --

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  explicit Lexer(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  char get() {
    char c = peek();
    if (pos < src.size()) ++pos;
    return c;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.' ||
            ((src[pos] == 'e' || src[pos] == 'E') && pos + 1 < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[pos + 1])) || src[pos + 1] == '+' ||
              src[pos + 1] == '-')) ||
            ((src[pos] == '+' || src[pos] == '-') && pos > start &&
             (src[pos - 1] == 'e' || src[pos - 1] == 'E'))))
      ++pos;
    if (pos == start) throw parse_error(start, "expected a number");
    return std::stod(src.substr(start, pos - start));
  }
  int integer() {
    skip_ws();
    bool neg = eat('-');
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) throw parse_error(start, "expected an integer exponent");
    int v = std::stoi(src.substr(start, pos - start));
    return neg ? -v : v;
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& s) : lex(s) {}

  NCPoly parse() {
    NCPoly p = expr();
    if (lex.peek() != '\0') throw parse_error(lex.pos, "unexpected trailing input");
    return p;
  }

  NCPoly expr() {
    bool neg = false;
    if (lex.eat('-'))
      neg = true;
    else
      lex.eat('+');
    NCPoly acc = term();
    if (neg) acc = LaurentQ::scalar(-1.0) * acc;
    while (true) {
      char c = lex.peek();
      if (c == '+') {
        lex.get();
        acc = acc + term();
      } else if (c == '-') {
        lex.get();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'i' ||
           c == 'q' || std::string("xyabcd").find(c) != std::string::npos;
  }

  NCPoly term() {
    NCPoly acc = factor();
    while (true) {
      char c = lex.peek();
      if (c == '*') {
        lex.get();
        acc = acc * factor();
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  NCPoly factor() {
    std::size_t where = lex.pos;
    NCPoly base = primary(where);
    if (lex.eat('^')) {
      // q may carry any integer power; everything else needs n >= 0
      if (base.terms.size() == 1 && base.terms.begin()->first.empty()) {
        int k = lex.integer();
        LaurentQ coeff = base.terms.begin()->second;
        LaurentQ powed = LaurentQ::scalar(1.0);
        if (k >= 0) {
          for (int i = 0; i < k; ++i) powed = powed * coeff;
        } else {
          if (coeff.c.size() != 1)
            throw parse_error(where, "negative power of a non-monomial scalar");
          auto [e, v] = *coeff.c.begin();
          LaurentQ inv = LaurentQ::qpow(-e, 1.0 / v);
          for (int i = 0; i < -k; ++i) powed = powed * inv;
        }
        return NCPoly::scalar(powed);
      }
      int n = lex.integer();
      if (n < 0) throw parse_error(where, "negative power of a symbol");
      NCPoly out = NCPoly::one();
      for (int i = 0; i < n; ++i) out = out * base;
      return out;
    }
    return base;
  }

  NCPoly primary(std::size_t where) {
    char c = lex.peek();
    where = lex.pos;
    if (c == '\0') throw parse_error(lex.pos, "unexpected end of input");
    if (c == '(') {
      lex.get();
      NCPoly p = expr();
      if (!lex.eat(')')) throw parse_error(lex.pos, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = lex.number();
      if (lex.peek() == 'i') {
        lex.get();
        return NCPoly::scalar(LaurentQ::scalar(cplx(0.0, v)));
      }
      return NCPoly::scalar(LaurentQ::scalar(cplx(v, 0.0)));
    }
    if (c == 'i') {
      lex.get();
      return NCPoly::scalar(LaurentQ::scalar(cplx(0.0, 1.0)));
    }
    if (c == 'q') {
      lex.get();
      return NCPoly::scalar(LaurentQ::qpow(1));
    }
    std::string letters = "xyabcd";
    auto idx = letters.find(c);
    if (idx != std::string::npos) {
      lex.get();
      return NCPoly::symbol(static_cast<Symbol>(idx));
    }
    throw parse_error(where, std::string("unknown symbol '") + c + "'");
  }
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

NCPoly parse_nc(const std::string& src) {
  Parser p(src);
  NCPoly out = p.parse();
  out.cleanup();
  return out;
}

namespace {

struct RationalParser {
  Lexer lex;

  explicit RationalParser(const std::string& s) : lex(s) {}

  using R = fn::RationalFn;

  static R divide(const R& a, const R& b) { return R(a.num * b.den, a.den * b.num); }

  R parse() {
    R out = expr();
    if (lex.peek() != '\0') throw parse_error(lex.pos, "unexpected trailing input");
    return out;
  }

  R expr() {
    bool neg = false;
    if (lex.eat('-'))
      neg = true;
    else
      lex.eat('+');
    R acc = term();
    if (neg) acc = R::from_poly(fn::Polynomial::constant(-1.0)) * acc;
    while (true) {
      char c = lex.peek();
      if (c == '+') {
        lex.get();
        acc = acc + term();
      } else if (c == '-') {
        lex.get();
        acc = acc + R::from_poly(fn::Polynomial::constant(-1.0)) * term();
      } else {
        break;
      }
    }
    return acc;
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'i' ||
           c == 'z';
  }

  R term() {
    R acc = factor();
    while (true) {
      char c = lex.peek();
      if (c == '*') {
        lex.get();
        acc = acc * factor();
      } else if (c == '/') {
        lex.get();
        acc = divide(acc, factor());
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  R factor() {
    R base = primary();
    if (lex.eat('^')) {
      int n = lex.integer();
      R out = R::from_poly(fn::Polynomial::constant(1.0));
      for (int i = 0; i < std::abs(n); ++i) out = out * base;
      if (n < 0) out = divide(R::from_poly(fn::Polynomial::constant(1.0)), out);
      return out;
    }
    return base;
  }

  R primary() {
    char c = lex.peek();
    std::size_t where = lex.pos;
    if (c == '\0') throw parse_error(lex.pos, "unexpected end of input");
    if (c == '(') {
      lex.get();
      R out = expr();
      if (!lex.eat(')')) throw parse_error(lex.pos, "expected ')'");
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = lex.number();
      if (lex.peek() == 'i') {
        lex.get();
        return R::from_poly(fn::Polynomial::constant(cplx(0.0, v)));
      }
      return R::from_poly(fn::Polynomial::constant(cplx(v, 0.0)));
    }
    if (c == 'i') {
      lex.get();
      return R::from_poly(fn::Polynomial::constant(cplx(0.0, 1.0)));
    }
    if (c == 'z') {
      lex.get();
      return R::from_poly(fn::Polynomial::monomial(1));
    }
    throw parse_error(where, std::string("unknown symbol '") + c + "'");
  }
};

} // namespace

fn::RationalFn parse_rational_z(const std::string& src) {
  RationalParser p(src);
  return p.parse();
}

std::string print_nc(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, coeff] : p.terms) {
    for (const auto& [k, v] : coeff.c) {
      if (!first) os << " + ";
      first = false;
      double im = v.imag();
      os << "(" << format_double(v.real()) << (im < 0.0 ? "-" : "+") << format_double(std::abs(im))
         << "i)";
      if (k != 0) os << "*q^" << k;
      for (Symbol s : w) os << "*" << symbol_char(s);
    }
  }
  return os.str();
}

} // namespace cohana::qplane
