#include "cohana/qplane.hpp"

#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"

namespace cohana::qplane {

namespace {

// split a normal-ordered word into its {x,y} prefix and {a..d} tail
bool split_word(const Word& w, Word& plane, Word& matrix) {
  plane.clear();
  matrix.clear();
  bool seen_matrix = false;
  for (Symbol s : w) {
    if (s == Symbol::x || s == Symbol::y) {
      if (seen_matrix) return false;
      plane.push_back(s);
    } else {
      seen_matrix = true;
      matrix.push_back(s);
    }
  }
  return true;
}

// coefficient polynomials (in a..d) of the plane words of E, E normal-ordered
// with the Manin + commutation rules only
std::map<Word, NCPoly, WordLess> plane_coefficients(const NCPoly& e) {
  std::map<Word, NCPoly, WordLess> out;
  for (const auto& [w, coeff] : e.terms) {
    Word plane, matrix;
    if (!split_word(w, plane, matrix))
      throw error(errc::numerical, "verify_mq2: unexpected word shape after commutation");
    out[plane].add_term(matrix, coeff);
  }
  return out;
}

// scale so that the leading (largest) word has coefficient exactly 1
NCPoly monic(const NCPoly& p) {
  if (p.is_zero()) return p;
  const LaurentQ& lead = p.terms.rbegin()->second;
  NCPoly out;
  for (const auto& [w, coeff] : p.terms) out.add_term(w, divide_exact(coeff, lead));
  return out;
}

NCPoly rule_as_poly(const RewriteRule& r) {
  NCPoly p;
  p.add_term(r.lhs, LaurentQ::scalar(1.0));
  return p - r.rhs;
}

bool same_poly(const NCPoly& p, const NCPoly& r) {
  NCPoly d = p - r;
  d.cleanup();
  return d.is_zero();
}

} // namespace

Mq2Report verify_mq2() {
  using S = Symbol;
  Mq2Report report;

  NCPoly x = NCPoly::symbol(S::x), y = NCPoly::symbol(S::y);
  NCPoly a = NCPoly::symbol(S::a), b = NCPoly::symbol(S::b);
  NCPoly c = NCPoly::symbol(S::c), d = NCPoly::symbol(S::d);
  LaurentQ q = LaurentQ::qpow(1);

  // commutation of the plane variables with the matrix entries + Manin rule,
  // but no quantum-matrix relations: coefficients stay free in a..d
  std::vector<RewriteRule> comm;
  comm.push_back(RewriteRule{Word{S::y, S::x}, [] {
                               NCPoly p;
                               p.add_term(Word{S::x, S::y}, LaurentQ::qpow(-1));
                               return p;
                             }()});
  for (S mat : {S::a, S::b, S::c, S::d})
    for (S pl : {S::x, S::y}) {
      NCPoly rhs;
      rhs.add_term(Word{pl, mat}, LaurentQ::scalar(1.0));
      comm.push_back(RewriteRule{Word{mat, pl}, rhs});
    }
  RelationSet commutation(std::move(comm));

  auto plane_defect = [&](const NCPoly& xp, const NCPoly& yp) {
    return normal_order(xp * yp - q * (yp * xp), commutation);
  };

  NCPoly e1 = plane_defect(a * x + b * y, c * x + d * y);
  NCPoly e2 = plane_defect(a * x + c * y, b * x + d * y); // transpose matrix

  // forward: reduce the defects by the quantum-matrix relations
  RelationSet full = mq2_full_relations();
  NCPoly r1 = normal_order(e1, full);
  NCPoly r2 = normal_order(e2, full);
  report.forward_zero = r1.is_zero() && r2.is_zero();
  if (!report.forward_zero) {
    report.remainder_terms.push_back(print_nc(r1));
    report.remainder_terms.push_back(print_nc(r2));
  }

  // converse: the vanishing conditions of the unreduced coefficients
  auto c1 = plane_coefficients(e1);
  auto c2 = plane_coefficients(e2);
  Word xx{S::x, S::x}, xy{S::x, S::y}, yy{S::y, S::y};
  std::vector<NCPoly> relations;
  relations.push_back(monic(c1[xx])); // ca - q^{-1} ac
  relations.push_back(monic(c1[yy])); // db - q^{-1} bd
  relations.push_back(monic(c2[xx])); // ba - q^{-1} ab
  relations.push_back(monic(c2[yy])); // dc - q^{-1} cd
  // the two xy-conditions combine to bc = cb and the ad commutator
  NCPoly x1 = monic(c1[xy]);
  NCPoly x2 = monic(c2[xy]);
  NCPoly sym = x1 - x2; // multiple of (cb - bc)
  sym.cleanup();
  relations.push_back(monic(sym));
  // substitute cb -> bc inside x1
  RelationSet cb_rule(
      {RewriteRule{Word{S::c, S::b}, [] {
                     NCPoly p;
                     p.add_term(Word{S::b, S::c}, LaurentQ::scalar(1.0));
                     return p;
                   }()}});
  relations.push_back(monic(normal_order(x1, cb_rule)));

  for (const NCPoly& rel : relations) report.extracted_relations.push_back(print_nc(rel));

  // match against the canonical relation set
  RelationSet canon = mq2_relations();
  if (relations.size() == canon.rules.size()) {
    bool all = true;
    for (const auto& rule : canon.rules) {
      NCPoly target = rule_as_poly(rule);
      bool found = false;
      for (const NCPoly& rel : relations)
        if (same_poly(rel, target)) {
          found = true;
          break;
        }
      all = all && found;
    }
    report.converse_matches = all;
  }

  // q = 1: every relation collapses to a commutator
  bool classical = true;
  for (const NCPoly& rel : relations) {
    NCPoly at1 = rel.specialize_q(1.0);
    at1.cleanup();
    if (at1.terms.size() != 2) {
      classical = false;
      continue;
    }
    auto it = at1.terms.begin();
    Word w1 = it->first;
    LaurentQ v1 = it->second;
    ++it;
    Word w2 = it->first;
    LaurentQ v2 = it->second;
    Word w1r(w1.rbegin(), w1.rend());
    if (w1r != w2 || !((v1 + v2).is_zero())) classical = false;
  }
  report.commutative_limit = classical;

  return report;
}

ClockShift clock_shift(int n) {
  if (n < 2) throw error(errc::invalid_input, "clock_shift: n must be >= 2");
  ClockShift out;
  out.q = std::polar(1.0, 2.0 * std::numbers::pi / n);
  out.X = Eigen::MatrixXcd::Zero(n, n);
  out.Y = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    out.X(j, j) = std::pow(out.q, j);
    out.Y((j + 1) % n, j) = 1.0;
  }
  Eigen::MatrixXcd defect = out.X * out.Y - out.q * out.Y * out.X;
  out.residual = defect.cwiseAbs().maxCoeff();
  return out;
}

} // namespace cohana::qplane
