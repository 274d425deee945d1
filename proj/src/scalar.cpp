#include "infmult/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace infmult {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag + ")";
}

std::string AffineExponent::to_string() const {
  if (sgn(s) == 0) return r.get_str();
  std::string lam = s == 1 ? "lambda" : (s == -1 ? "-lambda" : s.get_str() + "*lambda");
  if (sgn(r) == 0) return lam;
  if (sgn(s) > 0) return r.get_str() + "+" + lam;
  return r.get_str() + lam;
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

void trim(Scalar::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::size_t param_slot(int k) { return 2 + 2 * static_cast<std::size_t>(k - 1); }

}  // namespace

bool Scalar::ExponentLess::operator()(const Exponents& a, const Exponents& b) const {
  std::size_t m = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

Scalar::Scalar(long c) {
  if (c != 0) terms_.emplace(Exponents{}, GaussianRational(c));
}

Scalar::Scalar(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

Scalar Scalar::monomial(const Exponents& e, GaussianRational c) {
  Scalar s;
  Exponents t = e;
  trim(t);
  if (!c.is_zero()) s.terms_.emplace(std::move(t), std::move(c));
  return s;
}

Scalar Scalar::lambda() { return monomial({1}); }

Scalar Scalar::unit(int power) { return monomial({0, power}); }

Scalar Scalar::param(int k) {
  if (k < 1) throw std::invalid_argument("parameter index must be >= 1");
  Exponents e(param_slot(k) + 1, 0);
  e[param_slot(k)] = 1;
  return monomial(e);
}

Scalar Scalar::param_conj(int k) {
  if (k < 1) throw std::invalid_argument("parameter index must be >= 1");
  Exponents e(param_slot(k) + 2, 0);
  e[param_slot(k) + 1] = 1;
  return monomial(e);
}

Scalar Scalar::from_affine(const AffineExponent& e) {
  Scalar s(GaussianRational(e.r));
  s += Scalar(GaussianRational(e.s)) * lambda();
  return s;
}

void Scalar::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Scalar::conj() const {
  Scalar out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    if (f.size() > kUnitSlot) f[kUnitSlot] = -f[kUnitSlot];
    for (std::size_t i = 2; i < f.size(); i += 2) {
      if (i + 1 >= f.size()) f.push_back(0);
      std::swap(f[i], f[i + 1]);
    }
    trim(f);
    out.terms_.emplace(std::move(f), c.conj());
  }
  return out;
}

Scalar conjugate(const Scalar& x) { return x.conj(); }

Scalar Scalar::pow(unsigned k) const {
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Scalar::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      trim(e);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar& Scalar::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

std::optional<GaussianRational> Scalar::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

bool Scalar::only_lambda() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.size() <= 1; });
}

bool Scalar::uses_slot(std::size_t slot) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [slot](const auto& t) { return slot < t.first.size() && t.first[slot] != 0; });
}

bool Scalar::uses_params() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.size() > 2; });
}

std::vector<GaussianRational> Scalar::lambda_coefficients() const {
  if (!only_lambda()) {
    throw std::invalid_argument("scalar contains symbols other than lambda: " + to_string());
  }
  std::vector<GaussianRational> out;
  for (const auto& [e, c] : terms_) {
    std::size_t d = e.empty() ? 0 : static_cast<std::size_t>(e[0]);
    if (out.size() <= d) out.resize(d + 1);
    out[d] = c;
  }
  return out;
}

Scalar Scalar::eval_lambda(const Rational& value) const {
  Scalar out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    GaussianRational coeff = c;
    if (!f.empty() && f[0] != 0) {
      Rational p;
      mpq_class base = value;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(f[0]));
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(f[0]));
      p = Rational(num, den);
      p.canonicalize();
      coeff *= GaussianRational(p);
      f[0] = 0;
    }
    trim(f);
    out.add_term(f, coeff);
  }
  return out;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (!first) os << (negative ? " - " : " + ");
    if (negative) {
      coeff = (-c).to_string();
      if (first) os << "-";
    }
    first = false;

    std::vector<std::string> factors;
    auto sym = [&](const std::string& name, int power) {
      if (power == 0) return;
      factors.push_back(power == 1 ? name : name + "^" + std::to_string(power));
    };
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == kLambdaSlot) {
        sym("lambda", e[i]);
      } else if (i == kUnitSlot) {
        sym("u", e[i]);
      } else {
        std::size_t k = (i - 2) / 2 + 1;
        sym(((i - 2) % 2 == 0 ? "a" : "abar") + std::to_string(k), e[i]);
      }
    }
    if (factors.empty()) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << coeff << "*";
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// generalized binomial

Scalar generalized_binomial(const AffineExponent& sigma, unsigned k) {
  Scalar out(1);
  for (unsigned i = 0; i < k; ++i) {
    out *= Scalar::from_affine(sigma - AffineExponent(static_cast<long>(i)));
  }
  return out * GaussianRational(Rational(1 / factorial(k)));
}

// ---------------------------------------------------------------------------
// rank over Q(i)(lambda)

namespace {

// Dense univariate polynomial in lambda, coefficient of lambda^k at index k.
using LambdaPoly = std::vector<GaussianRational>;

void strip(LambdaPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

LambdaPoly mul(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.empty() || b.empty()) return {};
  LambdaPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip(out);
  return out;
}

LambdaPoly sub(LambdaPoly a, const LambdaPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

// Exact division; throws std::logic_error when the remainder is nonzero.
LambdaPoly div_exact(LambdaPoly num, const LambdaPoly& den) {
  if (den.empty()) throw std::domain_error("division by zero polynomial");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  LambdaPoly q(num.size() - den.size() + 1);
  GaussianRational lead_inv = den.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    GaussianRational c = num[k + den.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  strip(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  strip(q);
  return q;
}

}  // namespace

std::size_t rank_over_function_field(const std::vector<std::vector<Scalar>>& m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m.front().size();
  std::vector<std::vector<LambdaPoly>> a(rows, std::vector<LambdaPoly>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m[r][c].lambda_coefficients();
      strip(a[r][c]);
    }
  }

  LambdaPoly prev{GaussianRational(1)};
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].empty()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        LambdaPoly t = sub(mul(a[rank][col], a[r][c]), mul(a[r][col], a[rank][c]));
        a[r][c] = div_exact(std::move(t), prev);
      }
      a[r][col].clear();
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace infmult
