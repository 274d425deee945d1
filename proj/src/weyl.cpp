#include "infmult/weyl.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace infmult {

std::string var_name(std::size_t v) {
  return (v % 2 ? "zb" : "z") + std::to_string(v / 2 + 1);
}

namespace {

// k!/(k-m)!
Rational falling(long k, long m) {
  Rational out(1);
  for (long i = 0; i < m; ++i) out *= Rational(k - i);
  return out;
}

Scalar rat(const Rational& q) { return Scalar(GaussianRational(q)); }

std::string monomial_text(const std::vector<int>& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

std::string coefficient_text(const Scalar& c) {
  std::string s = c.to_string();
  if (c.terms().size() > 1) s = "(" + s + ")";
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t n, const Scalar& c) {
  Polynomial p(n);
  p.add(Exponents(2 * n, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t v) {
  Exponents e(2 * n, 0);
  e.at(v) = 1;
  return monomial(n, e);
}

Polynomial Polynomial::monomial(std::size_t n, const Exponents& e, const Scalar& c) {
  if (e.size() != 2 * n) throw std::invalid_argument("monomial exponent length mismatch");
  Polynomial p(n);
  p.add(e, c);
  return p;
}

void Polynomial::add(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(n_, Scalar(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::substitute(const ScalarMatrix& m) const {
  const std::size_t vars = 2 * n_;
  if (m.rows() != vars || m.cols() != vars) throw std::invalid_argument("substitution size mismatch");
  std::vector<Polynomial> images;
  images.reserve(vars);
  for (std::size_t v = 0; v < vars; ++v) {
    Polynomial row(n_);
    for (std::size_t w = 0; w < vars; ++w) {
      if (!m(v, w).is_zero()) row += monomial(n_, [&] {
        Exponents e(vars, 0);
        e[w] = 1;
        return e;
      }(), m(v, w));
    }
    images.push_back(std::move(row));
  }
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(n_, c);
    for (std::size_t v = 0; v < vars; ++v) {
      if (e[v]) t = t * images[v].pow(static_cast<unsigned>(e[v]));
    }
    out += t;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono = monomial_text(e);
    out += coefficient_text(c);
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeylOp

WeylOp WeylOp::constant(std::size_t n, const Scalar& c) {
  return term(n, c, std::vector<int>(2 * n, 0), std::vector<int>(2 * n, 0));
}

WeylOp WeylOp::variable(std::size_t n, std::size_t v) {
  std::vector<int> mono(2 * n, 0);
  mono.at(v) = 1;
  return term(n, Scalar(1), std::move(mono), std::vector<int>(2 * n, 0));
}

WeylOp WeylOp::derivative(std::size_t n, std::size_t v) {
  std::vector<int> deriv(2 * n, 0);
  deriv.at(v) = 1;
  return term(n, Scalar(1), std::vector<int>(2 * n, 0), std::move(deriv));
}

WeylOp WeylOp::term(std::size_t n, const Scalar& c, std::vector<int> mono, std::vector<int> deriv) {
  if (mono.size() != 2 * n || deriv.size() != 2 * n) throw std::invalid_argument("Weyl term length mismatch");
  WeylOp op(n);
  op.add(WeylKey{std::move(mono), std::move(deriv)}, c);
  return op;
}

void WeylOp::add(const WeylKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("operator dimension mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("operator dimension mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

WeylOp operator*(const Scalar& c, const WeylOp& op) {
  WeylOp out(op.n_);
  for (const auto& [k, v] : op.terms_) out.add(k, c * v);
  return out;
}

WeylOp compose(const WeylOp& p, const WeylOp& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("operator dimension mismatch");
  const std::size_t vars = 2 * p.dim();
  WeylOp out(p.dim());
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [kq, cq] : q.terms()) {
      // x^A d^B o x^C d^E = sum_K prod_v C(B_v,K_v) C_v!/(C_v-K_v)! x^(A+C-K) d^(B-K+E)
      std::vector<int> bound(vars);
      for (std::size_t v = 0; v < vars; ++v) bound[v] = std::min(kp.deriv[v], kq.mono[v]);
      std::vector<int> k(vars, 0);
      while (true) {
        Rational weight(1);
        WeylKey key{std::vector<int>(vars), std::vector<int>(vars)};
        for (std::size_t v = 0; v < vars; ++v) {
          weight *= binomial(kp.deriv[v], k[v]) * falling(kq.mono[v], k[v]);
          key.mono[v] = kp.mono[v] + kq.mono[v] - k[v];
          key.deriv[v] = kp.deriv[v] - k[v] + kq.deriv[v];
        }
        out.add(key, cp * cq * rat(weight));
        std::size_t v = 0;
        while (v < vars && k[v] == bound[v]) k[v++] = 0;
        if (v == vars) break;
        ++k[v];
      }
    }
  }
  return out;
}

WeylOp WeylOp::pow(unsigned k) const {
  WeylOp out = identity(n_);
  for (unsigned i = 0; i < k; ++i) out = compose(out, *this);
  return out;
}

Polynomial WeylOp::apply(const Polynomial& f) const {
  if (f.dim() != n_) throw std::invalid_argument("operator/polynomial dimension mismatch");
  const std::size_t vars = 2 * n_;
  Polynomial out(n_);
  for (const auto& [key, c] : terms_) {
    for (const auto& [e, fc] : f.terms()) {
      Rational weight(1);
      Polynomial::Exponents r(vars);
      bool vanishes = false;
      for (std::size_t v = 0; v < vars && !vanishes; ++v) {
        if (key.deriv[v] > e[v]) {
          vanishes = true;
          break;
        }
        weight *= falling(e[v], key.deriv[v]);
        r[v] = e[v] - key.deriv[v] + key.mono[v];
      }
      if (!vanishes) out.add(r, c * fc * rat(weight));
    }
  }
  return out;
}

std::optional<int> WeylOp::homogeneity_degree() const {
  std::optional<int> deg;
  for (const auto& [key, c] : terms_) {
    int d = std::accumulate(key.mono.begin(), key.mono.end(), 0) -
            std::accumulate(key.deriv.begin(), key.deriv.end(), 0);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> parts;
    if (!(c == Scalar(1))) parts.push_back(coefficient_text(c));
    std::string mono = monomial_text(key.mono);
    if (!mono.empty()) parts.push_back(mono);
    for (std::size_t v = 0; v < key.deriv.size(); ++v) {
      for (int i = 0; i < key.deriv[v]; ++i) parts.push_back("d(" + var_name(v) + ")");
    }
    if (parts.empty()) parts.emplace_back("1");
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

Substitution Substitution::identity(std::size_t n) {
  return {n, ScalarMatrix::identity(2 * n), ScalarMatrix::identity(2 * n), true, true};
}

Substitution Substitution::inverted() const { return {n, inverse, forward, reality, unimodular}; }

namespace {

ScalarMatrix substitution_matrix(const REpsMatrix& g) {
  const std::size_t n = g.size();
  ScalarMatrix m(2 * n, 2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const REpsElement& e = g(i - 1, j - 1);
      m(zvar(i), zvar(j)) = e.a;
      m(zvar(i), zbar_var(j)) = e.b;
      m(zbar_var(i), zvar(j)) = e.b.conj();
      m(zbar_var(i), zbar_var(j)) = e.a.conj();
    }
  }
  return m;
}

bool rows_are_real(const ScalarMatrix& m) {
  for (std::size_t v = 0; v < m.rows(); v += 2) {
    for (std::size_t w = 0; w < m.cols(); ++w) {
      if (!(m(v + 1, conj_var(w)) == m(v, w).conj())) return false;
    }
  }
  return true;
}

}  // namespace

Substitution substitution_from_group(const REpsMatrix& g, bool inverse_mode) {
  REpsMatrix ginv = group_inverse(g);
  Substitution s;
  s.n = g.size();
  s.forward = substitution_matrix(inverse_mode ? ginv : g);
  s.inverse = substitution_matrix(inverse_mode ? g : ginv);
  if (!(s.forward * s.inverse == ScalarMatrix::identity(2 * s.n))) {
    throw std::logic_error("substitution_from_group: inverse mismatch");
  }
  s.reality = rows_are_real(s.forward);
  s.unimodular = determinant(s.forward) == Scalar(1);
  return s;
}

Substitution compose_substitutions(const Substitution& s, const Substitution& t) {
  if (s.n != t.n) throw std::invalid_argument("substitution dimension mismatch");
  return {s.n, t.forward * s.forward, s.inverse * t.inverse, s.reality && t.reality, s.unimodular && t.unimodular};
}

WeylOp conjugate_op(const WeylOp& d, const Substitution& s) {
  const std::size_t n = d.dim();
  if (s.n != n) throw std::invalid_argument("conjugate_op: dimension mismatch");
  const std::size_t vars = 2 * n;

  // Image of each derivative symbol d_v as a linear form in the d_w.
  std::vector<Polynomial> dimage;
  for (std::size_t v = 0; v < vars; ++v) {
    Polynomial form(n);
    for (std::size_t w = 0; w < vars; ++w) {
      if (s.inverse(w, v).is_zero()) continue;
      std::vector<int> e(vars, 0);
      e[w] = 1;
      form.add(e, s.inverse(w, v));
    }
    dimage.push_back(std::move(form));
  }

  WeylOp out(n);
  for (const auto& [key, c] : d.terms()) {
    Polynomial coeff = Polynomial::monomial(n, key.mono, c).substitute(s.forward);
    Polynomial derivs = Polynomial::constant(n, Scalar(1));
    for (std::size_t v = 0; v < vars; ++v) {
      if (key.deriv[v]) derivs = derivs * dimage[v].pow(static_cast<unsigned>(key.deriv[v]));
    }
    for (const auto& [em, cm] : coeff.terms()) {
      for (const auto& [ed, cd] : derivs.terms()) out.add(WeylKey{em, ed}, cm * cd);
    }
  }
  return out;
}

}  // namespace infmult
