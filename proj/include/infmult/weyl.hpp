#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infmult/clifford.hpp"
#include "infmult/matrix.hpp"
#include "infmult/scalar.hpp"

namespace infmult {

// The 2n commuting symbols z_1, zbar_1, ..., z_n, zbar_n are indexed 0..2n-1:
// z_j -> 2(j-1), zbar_j -> 2(j-1)+1, with j 1-based.
inline std::size_t zvar(std::size_t j) { return 2 * (j - 1); }
inline std::size_t zbar_var(std::size_t j) { return 2 * (j - 1) + 1; }
/// Index of the conjugate symbol.
inline std::size_t conj_var(std::size_t v) { return v ^ 1U; }
std::string var_name(std::size_t v);

/// Polynomial in z_1, zbar_1, ..., z_n, zbar_n with Scalar coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}
  static Polynomial constant(std::size_t n, const Scalar& c);
  static Polynomial variable(std::size_t n, std::size_t v);
  static Polynomial monomial(std::size_t n, const Exponents& e, const Scalar& c = Scalar(1));

  std::size_t dim() const { return n_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& e, const Scalar& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned k) const;
  /// Linear change of variables x_v -> sum_w m(v, w) x_w.
  Polynomial substitute(const ScalarMatrix& m) const;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::map<Exponents, Scalar> terms_;
};

/// Key of a normal-ordered term x^mono d^deriv (multiplications to the left).
struct WeylKey {
  std::vector<int> mono;
  std::vector<int> deriv;
  friend auto operator<=>(const WeylKey&, const WeylKey&) = default;
  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

/// Polynomial-coefficient differential operator in the 2n symbols, stored as a
/// canonical sorted sum of normal-ordered terms.
class WeylOp {
 public:
  explicit WeylOp(std::size_t n = 0) : n_(n) {}

  static WeylOp identity(std::size_t n) { return constant(n, Scalar(1)); }
  static WeylOp constant(std::size_t n, const Scalar& c);
  static WeylOp variable(std::size_t n, std::size_t v);
  static WeylOp derivative(std::size_t n, std::size_t v);
  static WeylOp term(std::size_t n, const Scalar& c, std::vector<int> mono, std::vector<int> deriv);

  std::size_t dim() const { return n_; }
  const std::map<WeylKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const WeylKey& k, const Scalar& c);
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(const Scalar& c, const WeylOp& op);
  friend bool operator==(const WeylOp&, const WeylOp&) = default;

  WeylOp pow(unsigned k) const;
  /// Apply to a polynomial (the brute-force meaning of the operator).
  Polynomial apply(const Polynomial& f) const;
  /// Common value of |mono| - |deriv| over all terms, if there is one.
  std::optional<int> homogeneity_degree() const;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::map<WeylKey, Scalar> terms_;
};

/// Normal-ordered product p o q.
WeylOp compose(const WeylOp& p, const WeylOp& q);
inline WeylOp operator*(const WeylOp& p, const WeylOp& q) { return compose(p, q); }

/// Linear substitution x -> forward * x on the 2n symbols together with its
/// exact inverse.
struct Substitution {
  std::size_t n = 0;
  ScalarMatrix forward;
  ScalarMatrix inverse;
  /// Row of zbar_i is the conjugate of the row of z_i with z <-> zbar swapped.
  bool reality = false;
  /// det(forward) == 1 exactly (the real Jacobian determinant).
  bool unimodular = false;

  static Substitution identity(std::size_t n);
  Substitution inverted() const;
  Polynomial apply(const Polynomial& f) const { return f.substitute(forward); }
};

/// Substitution induced on (z, zbar) by g via (a + b eps) . z = a z + b zbar.
/// With inverse_mode the substitution is that of g^-1, i.e. the one used by
/// (g.f)(z) = f(g^-1 z). Propagates group_inverse errors.
Substitution substitution_from_group(const REpsMatrix& g, bool inverse_mode);

/// Substitution such that conjugate_op(d, compose_substitutions(s, t)) equals
/// conjugate_op(conjugate_op(d, t), s).
Substitution compose_substitutions(const Substitution& s, const Substitution& t);

/// (g.D)(f) = g.(D(g^-1.f)) where s is the inverse-mode substitution of g:
/// coefficients are substituted forward and each derivative d_v becomes
/// sum_w inverse(w, v) d_w.
WeylOp conjugate_op(const WeylOp& d, const Substitution& s);

}  // namespace infmult
