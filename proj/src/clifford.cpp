#include "infmult/clifford.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace infmult {

REpsElement REpsElement::eps_power(const Scalar& c, unsigned k) {
  if (k % 2 == 0) return {c, Scalar()};
  return {Scalar(), c};
}

REpsElement reps_mul(const REpsElement& x, const REpsElement& y) {
  return {x.a * y.a + x.b * y.b.conj(), x.b * y.a.conj() + x.a * y.b};
}

ScalarPair reps_act(const REpsElement& x, const ScalarPair& v) {
  return {x.a * v.z + x.b * v.zbar, x.a.conj() * v.zbar + x.b.conj() * v.z};
}

// ---------------------------------------------------------------------------
// REpsMatrix

REpsMatrix REpsMatrix::identity(std::size_t n) {
  REpsMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = REpsElement::one();
  return m;
}

REpsMatrix operator*(const REpsMatrix& x, const REpsMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("REpsMatrix dimension mismatch");
  const std::size_t n = x.n_;
  REpsMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const REpsElement& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y(k, j).is_zero()) out(i, j) = out(i, j) + a * y(k, j);
      }
    }
  }
  return out;
}

REpsMatrix operator+(const REpsMatrix& x, const REpsMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("REpsMatrix dimension mismatch");
  REpsMatrix out(x.n_);
  for (std::size_t i = 0; i < x.data_.size(); ++i) out.data_[i] = x.data_[i] + y.data_[i];
  return out;
}

REpsMatrix operator-(const REpsMatrix& x, const REpsMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("REpsMatrix dimension mismatch");
  REpsMatrix out(x.n_);
  for (std::size_t i = 0; i < x.data_.size(); ++i) out.data_[i] = x.data_[i] - y.data_[i];
  return out;
}

std::vector<Scalar> REpsMatrix::apply(const std::vector<Scalar>& z) const {
  if (z.size() != n_) throw std::invalid_argument("vector length does not match matrix size");
  std::vector<Scalar> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const REpsElement& e = (*this)(i, j);
      if (e.is_zero() || z[j].is_zero()) continue;
      out[i] += reps_act(e, ScalarPair::of(z[j])).z;
    }
  }
  return out;
}

REpsMatrix HGenerator::matrix(std::size_t n) const {
  REpsMatrix m = REpsMatrix::identity(n);
  if (kind == Kind::phase) {
    for (std::size_t i = 0; i < n; ++i) m(i, i) = REpsElement(Scalar::unit(u_power));
    return m;
  }
  if (j < 1 || j >= n) throw std::invalid_argument("shift generator index out of range");
  for (std::size_t i = 0; i + j < n; ++i) m(i, i + j) = REpsElement::eps_power(a, j);
  return m;
}

REpsMatrix h_element(std::size_t n, const Scalar& phase, const std::vector<Scalar>& a) {
  if (a.size() + 1 > n) throw std::invalid_argument("too many superdiagonal parameters");
  REpsMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = REpsElement(phase);
    for (std::size_t k = 1; k <= a.size() && i + k < n; ++k) {
      m(i, i + k) = REpsElement::eps_power(a[k - 1], static_cast<unsigned>(k));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// iota

Scalar real_part(const Scalar& x) { return (x + x.conj()) * GaussianRational(make_rational(1, 2)); }

Scalar imag_part(const Scalar& x) {
  return (x - x.conj()) * GaussianRational(Rational(0), make_rational(-1, 2));
}

namespace {

ScalarMatrix iota_blocks(const REpsMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const REpsElement& e = m(r, c);
      if (e.is_zero()) continue;
      Scalar a1 = real_part(e.a), a2 = imag_part(e.a);
      Scalar b1 = real_part(e.b), b2 = imag_part(e.b);
      // (a + b eps)(x + iy) = a z + b zbar, written in the (x, y) basis.
      out(2 * r, 2 * c) = a1 + b1;
      out(2 * r, 2 * c + 1) = b2 - a2;
      out(2 * r + 1, 2 * c) = a2 + b2;
      out(2 * r + 1, 2 * c + 1) = a1 - b1;
    }
  }
  return out;
}

}  // namespace

ScalarMatrix iota(const REpsMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const REpsElement& e = m(r, c);
      for (const Scalar* s : {&e.a, &e.b}) {
        if (s->uses_slot(Scalar::kLambdaSlot) || s->uses_params()) {
          throw std::invalid_argument("iota: symbolic entry at (" + std::to_string(r) + "," + std::to_string(c) +
                                      "): " + s->to_string());
        }
        if (s->uses_unit() && (r != c || s == &e.b)) {
          throw std::invalid_argument("iota: formal unit outside a diagonal rotation block at (" +
                                      std::to_string(r) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return iota_blocks(m);
}

ScalarMatrix iota_formal(const REpsMatrix& m) { return iota_blocks(m); }

// ---------------------------------------------------------------------------
// verification of det = 1 and closure

CheckRecord h_det_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("h_det_check requires n >= 2");
  CheckRecord rec;
  rec.id = "algebra.det.n" + std::to_string(n);
  rec.statement = "det(iota(g)) = 1 for every generator of H (n = " + std::to_string(n) + ")";
  rec.paper_ref = "claim:det-iota-H";

  bool ok = true;
  nlohmann::json cases = nlohmann::json::array();
  auto record = [&](const std::string& name, const REpsMatrix& g) {
    Scalar det = determinant(iota_formal(g));
    bool good = det == Scalar(1);
    ok = ok && good;
    cases.push_back({{"element", name}, {"det", det.to_string()}, {"ok", good}});
  };

  record("h(u)", HGenerator::phase(1).matrix(n));
  for (unsigned j = 1; j < n; ++j) {
    record("h_" + std::to_string(j) + "(a1)", HGenerator::shift(j, Scalar::param(1)).matrix(n));
  }
  std::vector<Scalar> params;
  for (std::size_t k = 1; k < n; ++k) params.push_back(Scalar::param(static_cast<int>(k)));
  record("h^0(a1..a" + std::to_string(n - 1) + ")", h_element(n, Scalar(1), params));
  record("h(u) h_1(a1)", HGenerator::phase(1).matrix(n) * HGenerator::shift(1, Scalar::param(1)).matrix(n));

  rec.status = status_of(ok);
  rec.details = {{"cases", cases}};
  return rec;
}

bool has_h_shape(const REpsMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  const REpsElement& d = m(0, 0);
  if (!d.b.is_zero() || !(d.a * d.a.conj() == Scalar(1))) return false;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (!m(r, c).is_zero()) return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const REpsElement& first = m(0, k);
    if (k % 2 == 0 ? !first.b.is_zero() : !first.a.is_zero()) return false;
    for (std::size_t i = 1; i + k < n; ++i) {
      if (!(m(i, i + k) == first)) return false;
    }
  }
  return true;
}

namespace {

GaussianRational random_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

CheckRecord h_closure_check(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("h_closure_check requires n >= 2");
  CheckRecord rec;
  rec.id = "algebra.closure.n" + std::to_string(n);
  rec.statement = "H is closed under products: h^p(a) h^q(b) has Toeplitz form with diagonal u^(p+q)";
  rec.paper_ref = "claim:H-subgroup";

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> power(-3, 3);
  std::size_t failures = 0;
  nlohmann::json first_failure;
  for (std::size_t s = 0; s < samples; ++s) {
    int p = power(rng), q = power(rng);
    std::vector<Scalar> a, b;
    for (std::size_t k = 1; k < n; ++k) {
      a.emplace_back(random_gaussian(rng));
      b.emplace_back(random_gaussian(rng));
    }
    REpsMatrix prod = h_element(n, Scalar::unit(p), a) * h_element(n, Scalar::unit(q), b);
    bool good = has_h_shape(prod) && prod(0, 0) == REpsElement(Scalar::unit(p + q));
    if (!good) {
      if (failures == 0) first_failure = {{"sample", s}, {"p", p}, {"q", q}};
      ++failures;
    }
  }
  rec.status = status_of(failures == 0);
  rec.details = {{"samples", samples}, {"seed", seed}, {"failures", failures}};
  if (failures) rec.details["first_failure"] = first_failure;
  return rec;
}

CheckRecord clifford_relations_check() {
  CheckRecord rec;
  rec.id = "algebra.relations";
  rec.statement = "eps^2 = 1, i^2 = -1, i eps = -eps i";
  rec.paper_ref = "claim:clifford-relations";
  const REpsElement e = REpsElement::eps(), i = REpsElement::i(), one = REpsElement::one();
  const bool eps_sq = e * e == one;
  const bool i_sq = i * i == -one;
  const bool anti = i * e == -(e * i);
  rec.status = status_of(eps_sq && i_sq && anti);
  rec.details = {{"eps^2=1", eps_sq}, {"i^2=-1", i_sq}, {"i*eps=-eps*i", anti}};
  return rec;
}

CheckRecord iota_multiplicativity_check(std::size_t n, std::size_t samples, std::uint64_t seed) {
  CheckRecord rec;
  rec.id = "algebra.iota-mult.n" + std::to_string(n);
  rec.statement = "iota(g h) = iota(g) iota(h) on M_n(R_eps)";
  rec.paper_ref = "claim:iota-homomorphism";
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  auto random_matrix = [&] {
    REpsMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = {Scalar(random_gaussian(rng)), Scalar(random_gaussian(rng))};
    }
    return m;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const REpsMatrix g = random_matrix(), h = random_matrix();
    if (!(iota(g * h) == iota(g) * iota(h))) ++failures;
  }
  rec.status = status_of(failures == 0);
  rec.details = {{"n", n}, {"samples", samples}, {"seed", seed}, {"failures", failures}};
  return rec;
}

REpsMatrix group_inverse(const REpsMatrix& g) {
  const std::size_t n = g.size();
  REpsMatrix dinv(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (!g(r, c).is_zero()) throw std::invalid_argument("group_inverse: matrix is not upper triangular");
    }
    const REpsElement& d = g(r, r);
    if (!d.b.is_zero() || !(d.a * d.a.conj() == Scalar(1))) {
      throw std::invalid_argument("group_inverse: diagonal entry " + std::to_string(r) +
                                  " is not a unit-modulus complex scalar");
    }
    dinv(r, r) = REpsElement(d.a.conj());
  }
  // g = D (I + M) with M strictly upper triangular, so g^-1 = (sum_k (-M)^k) D^-1.
  REpsMatrix m = dinv * g - REpsMatrix::identity(n);
  REpsMatrix neg_m = REpsMatrix(n) - m;
  REpsMatrix sum = REpsMatrix::identity(n);
  REpsMatrix power = REpsMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * neg_m;
    sum = sum + power;
  }
  return sum * dinv;
}

// ---------------------------------------------------------------------------
// complexification

CplxPairElement cplx_mul(const CplxPairElement& x, const CplxPairElement& y) {
  return {x.a * y.a + x.b * y.d.conj(), x.c * y.c + x.d * y.b.conj(), x.a * y.b + x.b * y.c.conj(),
          x.c * y.d + x.d * y.a.conj()};
}

CplxPair cplx_act(const CplxPairElement& x, const CplxPair& v) {
  return {x.a * v.z + x.b * v.w.conj(), x.c * v.w + x.d * v.z.conj()};
}

std::vector<CplxPair> CplxPairMatrix::apply(const std::vector<CplxPair>& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match matrix size");
  std::vector<CplxPair> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      CplxPair t = cplx_act((*this)(i, j), v[j]);
      out[i].z += t.z;
      out[i].w += t.w;
    }
  }
  return out;
}

CplxPairMatrix hc_element(std::size_t n, const Scalar& t, const Scalar& s,
                          const std::vector<std::pair<Scalar, Scalar>>& A) {
  if (A.size() + 1 > n) throw std::invalid_argument("too many superdiagonal parameters");
  CplxPairMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = {t, s, Scalar(), Scalar()};
    for (std::size_t k = 1; k <= A.size() && i + k < n; ++k) {
      const auto& [ak, bk] = A[k - 1];
      m(i, i + k) = k % 2 ? CplxPairElement{Scalar(), Scalar(), ak, bk} : CplxPairElement{ak, bk, Scalar(), Scalar()};
    }
  }
  return m;
}

}  // namespace infmult
