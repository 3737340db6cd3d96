#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vkg/rational.hpp"

namespace vkg {

inline constexpr int kMaxDim = 4;

/// Exponents of u_j = v^j / v^0 for j = 1..n (unused slots stay zero).
using Monomial = std::array<int, kMaxDim>;

/// Polynomial in u_1..u_n with exact rational coefficients (class P).
/// Terms are kept sorted by multi-degree with zero coefficients dropped.
class PPoly {
 public:
  PPoly() = default;
  explicit PPoly(int n) : n_(n) {}
  static PPoly constant(int n, const Rational& c);
  static PPoly variable(int n, int j);  // u_j, 1-based

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  PPoly& operator+=(const PPoly& o);
  PPoly& operator-=(const PPoly& o);
  PPoly operator-() const;
  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);
  friend PPoly operator*(const Rational& c, const PPoly& p);
  friend bool operator==(const PPoly& a, const PPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// v^0 d_{v^i} acting on the class: u_j -> delta_ij - u_i u_j.
  PPoly boost_derivation(int i) const;
  /// v^i d_{v^j} - v^j d_{v^i}: u_k -> u_i delta_jk - u_j delta_ik.
  PPoly rotation_derivation(int i, int j) const;

  /// Sum of absolute values of the coefficients.
  double l1_norm() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::map<Monomial, Rational> terms_;
};

double evaluate_ppoly(const PPoly& p, std::span<const double> v);
/// Same, with u = v / v^0 already computed.
double evaluate_ppoly_u(const PPoly& p, std::span<const double> u);

/// Q = p0 + t pt + sum_k x^k px[k] with P-class coefficients (class Q).
struct QPoly {
  PPoly p0;
  PPoly pt;
  std::vector<PPoly> px;

  QPoly() = default;
  explicit QPoly(int n) : p0(n), pt(n), px(n, PPoly(n)) {}
  static QPoly from_p(const PPoly& p);

  int dim() const { return p0.dim(); }
  bool is_zero() const;

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const PPoly& p, const QPoly& q);
  friend QPoly operator*(const Rational& c, const QPoly& q);
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.p0 == b.p0 && a.pt == b.pt && a.px == b.px;
  }

  double l1_norm() const;
  std::string str() const;
};

double evaluate_qpoly(const QPoly& q, double t, std::span<const double> x, std::span<const double> v);

/// Lifted generator applied to the coefficient: the result stays in class Q.
QPoly apply_lifted_generator(int id, const QPoly& q);

}  // namespace vkg
