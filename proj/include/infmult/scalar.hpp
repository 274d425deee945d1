#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace infmult {

using Rational = mpq_class;

/// Builds the canonical rational num/den. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p" or "-p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Exact element re + i*im of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational(0));
  GaussianRational(long re) : re_(re) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |x|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order used only for canonical sorting (re first, then im).
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Exponent sigma = r + s*lambda of a power factor (z z-bar)^sigma.
struct AffineExponent {
  Rational r{0};
  Rational s{0};

  AffineExponent() = default;
  AffineExponent(Rational r_, Rational s_ = Rational(0)) : r(std::move(r_)), s(std::move(s_)) {}
  AffineExponent(long v) : r(v) {}

  bool is_integer() const { return sgn(s) == 0 && r.get_den() == 1; }
  bool is_nonneg_integer() const { return is_integer() && sgn(r) >= 0; }
  /// Integer value; only meaningful when is_integer().
  long as_integer() const { return r.get_num().get_si(); }

  AffineExponent& operator+=(const AffineExponent& o) {
    r += o.r;
    s += o.s;
    return *this;
  }
  AffineExponent& operator-=(const AffineExponent& o) {
    r -= o.r;
    s -= o.s;
    return *this;
  }
  friend AffineExponent operator+(AffineExponent a, const AffineExponent& b) { return a += b; }
  friend AffineExponent operator-(AffineExponent a, const AffineExponent& b) { return a -= b; }

  friend bool operator==(const AffineExponent& a, const AffineExponent& b) {
    return a.r == b.r && a.s == b.s;
  }
  friend bool operator<(const AffineExponent& a, const AffineExponent& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.s < b.s;
  }

  std::string to_string() const;
};

/// Element of Q(i)[lambda, a_1, abar_1, ...][u, u^-1] with the relation u*ubar = 1.
///
/// Terms are kept in a std::map keyed by the exponent vector
/// (lambda, u, a_1, abar_1, a_2, abar_2, ...), trailing zeros trimmed, ordered
/// lexicographically with implicit zero padding. Zero coefficients are never
/// stored, so two equal scalars have identical term maps.
class Scalar {
 public:
  using Exponents = std::vector<int>;

  struct ExponentLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, GaussianRational, ExponentLess>;

  static constexpr std::size_t kLambdaSlot = 0;
  static constexpr std::size_t kUnitSlot = 1;

  Scalar() = default;
  Scalar(long c);
  Scalar(GaussianRational c);
  Scalar(const Rational& c) : Scalar(GaussianRational(c)) {}

  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar lambda();
  /// The formal unit u raised to `power` (negative powers represent ubar).
  static Scalar unit(int power = 1);
  /// Formal parameter a_k (k >= 1).
  static Scalar param(int k);
  /// Formal parameter abar_k, the conjugate of a_k.
  static Scalar param_conj(int k);
  static Scalar from_affine(const AffineExponent& e);
  static Scalar monomial(const Exponents& e, GaussianRational c = GaussianRational(1));

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Scalar conj() const;
  Scalar pow(unsigned k) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const GaussianRational& c);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const GaussianRational& c) { return a *= c; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Some constant c (no symbols at all), if this is one.
  std::optional<GaussianRational> constant_value() const;
  /// True when no symbol other than lambda occurs.
  bool only_lambda() const;
  /// True when `slot` (an exponent-vector index) occurs with nonzero exponent.
  bool uses_slot(std::size_t slot) const;
  /// True when some a_k / abar_k occurs.
  bool uses_params() const;
  bool uses_unit() const { return uses_slot(kUnitSlot); }

  /// Dense coefficients c_0..c_d in lambda. Throws std::invalid_argument if
  /// another symbol occurs.
  std::vector<GaussianRational> lambda_coefficients() const;
  /// Substitute lambda := value. Other symbols are kept.
  Scalar eval_lambda(const Rational& value) const;

  /// Canonical text form, e.g. "1 - 1/2*lambda" or "(1+2i)*u^-1*a1".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);
  TermMap terms_;
};

Scalar conjugate(const Scalar& x);

/// sigma (sigma - 1) ... (sigma - k + 1) / k! as a polynomial in lambda.
Scalar generalized_binomial(const AffineExponent& sigma, unsigned k);

/// Rank over the field Q(i)(lambda) of a matrix whose entries are polynomials in
/// lambda, by fraction-free (Bareiss) elimination with the first nonzero entry
/// in column order as pivot. Throws std::invalid_argument if an entry contains
/// u or a_k symbols.
std::size_t rank_over_function_field(const std::vector<std::vector<Scalar>>& m);

/// Classical binomial coefficient as a rational.
Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace infmult
