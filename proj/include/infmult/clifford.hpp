#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infmult/check_record.hpp"
#include "infmult/matrix.hpp"
#include "infmult/scalar.hpp"

namespace infmult {

/// a + b*eps in R_eps = C + C eps, with (a+b eps)(c+d eps) = (ac + b conj(d)) + (b conj(c) + ad) eps.
struct REpsElement {
  Scalar a;
  Scalar b;

  REpsElement() = default;
  REpsElement(Scalar a_, Scalar b_ = Scalar()) : a(std::move(a_)), b(std::move(b_)) {}

  static REpsElement one() { return {Scalar(1)}; }
  static REpsElement eps() { return {Scalar(), Scalar(1)}; }
  static REpsElement i() { return {Scalar::i()}; }
  /// c * eps^k: eps^k is 1 for even k and eps for odd k.
  static REpsElement eps_power(const Scalar& c, unsigned k);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend REpsElement operator+(const REpsElement& x, const REpsElement& y) { return {x.a + y.a, x.b + y.b}; }
  friend REpsElement operator-(const REpsElement& x, const REpsElement& y) { return {x.a - y.a, x.b - y.b}; }
  REpsElement operator-() const { return {-a, -b}; }
  friend bool operator==(const REpsElement&, const REpsElement&) = default;
};

REpsElement reps_mul(const REpsElement& x, const REpsElement& y);
inline REpsElement operator*(const REpsElement& x, const REpsElement& y) { return reps_mul(x, y); }

/// A complex value together with its conjugate symbol.
struct ScalarPair {
  Scalar z;
  Scalar zbar;

  static ScalarPair of(const Scalar& z) { return {z, z.conj()}; }
  friend bool operator==(const ScalarPair&, const ScalarPair&) = default;
};

/// (a + b eps) . z = a z + b zbar. Requires v.zbar == conj(v.z).
ScalarPair reps_act(const REpsElement& x, const ScalarPair& v);

/// n x n matrix over R_eps.
class REpsMatrix {
 public:
  REpsMatrix() = default;
  explicit REpsMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static REpsMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  REpsElement& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const REpsElement& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend REpsMatrix operator*(const REpsMatrix& x, const REpsMatrix& y);
  friend REpsMatrix operator+(const REpsMatrix& x, const REpsMatrix& y);
  friend REpsMatrix operator-(const REpsMatrix& x, const REpsMatrix& y);
  friend bool operator==(const REpsMatrix&, const REpsMatrix&) = default;

  /// Left multiplication on C^n: (M z)_i = sum_j M_ij . z_j.
  std::vector<Scalar> apply(const std::vector<Scalar>& z) const;

 private:
  std::size_t n_ = 0;
  std::vector<REpsElement> data_;
};

/// Generator of H: phase u^power on the diagonal, or the shift h_j(a) = I + a eps^j E^j.
struct HGenerator {
  enum class Kind { phase, shift };
  Kind kind = Kind::phase;
  int u_power = 1;
  unsigned j = 0;
  Scalar a;

  static HGenerator phase(int power = 1) { return {Kind::phase, power, 0, Scalar()}; }
  static HGenerator shift(unsigned j, Scalar a) { return {Kind::shift, 0, j, std::move(a)}; }

  REpsMatrix matrix(std::size_t n) const;
};

/// h^theta(a): `phase` on the diagonal and a_k eps^k constant along the k-th superdiagonal.
REpsMatrix h_element(std::size_t n, const Scalar& phase, const std::vector<Scalar>& a);

/// Real part (x + conj x)/2 and imaginary part (x - conj x)/(2i), as scalars.
Scalar real_part(const Scalar& x);
Scalar imag_part(const Scalar& x);

/// Matrix of left multiplication on C^n = R^{2n}, basis (x1, y1, ..., xn, yn).
/// Entries may contain the formal unit u on the diagonal only; any other
/// symbol is rejected with std::invalid_argument.
ScalarMatrix iota(const REpsMatrix& m);

/// Same map with no restriction on symbols. Entries are real-valued scalars
/// written through real_part / imag_part.
ScalarMatrix iota_formal(const REpsMatrix& m);

/// det(iota(g)) == 1 for the phase generator, every shift generator with a
/// formal parameter, the general unipotent element and a mixed product.
CheckRecord h_det_check(std::size_t n);

/// Products of random elements h^theta(a) h^theta'(b) keep the Toeplitz shape
/// with diagonal u^(p+q) and the eps-parity pattern on each superdiagonal.
CheckRecord h_closure_check(std::size_t n, std::size_t samples, std::uint64_t seed = 1);

/// eps^2 = 1, i^2 = -1 and i eps = -eps i in R_eps, checked exactly.
CheckRecord clifford_relations_check();

/// iota(g h) == iota(g) iota(h) for random g, h in M_n(R_eps) with
/// Gaussian-rational entries.
CheckRecord iota_multiplicativity_check(std::size_t n, std::size_t samples, std::uint64_t seed = 1);

/// True when m has the shape of an element of H: equal unit-modulus diagonal,
/// zero below, each superdiagonal constant and of the form c eps^k.
bool has_h_shape(const REpsMatrix& m);

/// Inverse of g = D (I + N) with D a diagonal of unit-modulus complex scalars
/// and N strictly upper triangular, by the terminating Neumann series.
/// Throws std::invalid_argument for any other shape.
REpsMatrix group_inverse(const REpsMatrix& g);

/// (a,c) + (b,d) eps in the complexification (C + Cbar) + (C + Cbar) eps.
struct CplxPairElement {
  Scalar a, c, b, d;

  static CplxPairElement one() { return {Scalar(1), Scalar(1), Scalar(), Scalar()}; }
  static CplxPairElement eps() { return {Scalar(), Scalar(), Scalar(1), Scalar(1)}; }

  friend CplxPairElement operator+(const CplxPairElement& x, const CplxPairElement& y) {
    return {x.a + y.a, x.c + y.c, x.b + y.b, x.d + y.d};
  }
  friend bool operator==(const CplxPairElement&, const CplxPairElement&) = default;
};

CplxPairElement cplx_mul(const CplxPairElement& x, const CplxPairElement& y);
inline CplxPairElement operator*(const CplxPairElement& x, const CplxPairElement& y) { return cplx_mul(x, y); }

/// Point (z, w) of C + Cbar.
struct CplxPair {
  Scalar z;
  Scalar w;
  friend bool operator==(const CplxPair&, const CplxPair&) = default;
};

/// ((a,c) + (b,d) eps) . (z, w) = (a z + b conj(w), c w + d conj(z)).
CplxPair cplx_act(const CplxPairElement& x, const CplxPair& v);

/// n x n matrix over the complexified algebra, acting on (C + Cbar)^n.
class CplxPairMatrix {
 public:
  explicit CplxPairMatrix(std::size_t n) : n_(n), data_(n * n, CplxPairElement{}) {}

  std::size_t size() const { return n_; }
  CplxPairElement& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const CplxPairElement& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::vector<CplxPair> apply(const std::vector<CplxPair>& v) const;

 private:
  std::size_t n_;
  std::vector<CplxPairElement> data_;
};

/// h^a(A) in H_C: diagonal (t, s), superdiagonal k equal to A_k eps^k with A_k = (a_k, b_k).
CplxPairMatrix hc_element(std::size_t n, const Scalar& t, const Scalar& s, const std::vector<std::pair<Scalar, Scalar>>& A);

}  // namespace infmult
