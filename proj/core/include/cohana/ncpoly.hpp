#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cohana/functions.hpp"

namespace cohana::qplane {

using cplx = std::complex<double>;

// Laurent polynomial in the deformation parameter q.
struct LaurentQ {
  std::map<int, cplx> c; // exponent -> coefficient

  static LaurentQ scalar(cplx v);
  static LaurentQ qpow(int k, cplx v = 1.0);

  bool is_zero() const { return c.empty(); }
  cplx eval(cplx q) const;
  void cleanup();
};

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b);
LaurentQ operator-(const LaurentQ& a, const LaurentQ& b);
LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
LaurentQ operator-(const LaurentQ& a);
// exact division; throws if b does not divide a
LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b);

enum class Symbol : int { x = 0, y = 1, a = 2, b = 3, c = 4, d = 5 };
char symbol_char(Symbol s);

using Word = std::vector<Symbol>;

// degree-lexicographic order, precedence x < y < a < b < c < d
struct WordLess {
  bool operator()(const Word& u, const Word& v) const;
};

// Noncommutative polynomial: complex-Laurent-in-q coefficients on words.
struct NCPoly {
  std::map<Word, LaurentQ, WordLess> terms;

  static NCPoly zero() { return NCPoly{}; }
  static NCPoly one();
  static NCPoly symbol(Symbol s);
  static NCPoly scalar(LaurentQ v);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& w, const LaurentQ& coeff);
  void cleanup();

  NCPoly specialize_q(cplx qval) const;
  Eigen::MatrixXcd eval(const std::map<Symbol, Eigen::MatrixXcd>& subst, cplx qval) const;
};

NCPoly operator+(const NCPoly& p, const NCPoly& r);
NCPoly operator-(const NCPoly& p, const NCPoly& r);
NCPoly operator*(const NCPoly& p, const NCPoly& r);
NCPoly operator*(const LaurentQ& s, const NCPoly& p);

struct RewriteRule {
  Word lhs; // two letters
  NCPoly rhs;
};

// Ordered rewrite system. Construction verifies that every rule strictly
// decreases the word order (termination) and that all 3-letter overlaps are
// confluent.
struct RelationSet {
  std::vector<RewriteRule> rules;

  explicit RelationSet(std::vector<RewriteRule> rules_);
};

NCPoly normal_order(const NCPoly& p, const RelationSet& rel);

// xy = q yx as the rewrite yx -> q^{-1} xy
RelationSet manin_relations();
// quantum 2x2 matrix relations on {a,b,c,d}, normal order ascending
RelationSet mq2_relations();
// mq2 + Manin + the commutation of {x,y} with {a,b,c,d}
RelationSet mq2_full_relations();

NCPoly parse_nc(const std::string& src);
std::string print_nc(const NCPoly& p);

// Commutative rational expression over the single variable z, sharing the
// tokenizer above; grammar adds '/' and allows negative powers.
fn::RationalFn parse_rational_z(const std::string& src);

} // namespace cohana::qplane
