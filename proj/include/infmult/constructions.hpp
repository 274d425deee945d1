#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infmult/check_record.hpp"
#include "infmult/distribution.hpp"
#include "infmult/weyl.hpp"

namespace infmult {

enum class FieldKind { D, Dbar, Dj, Dprime };

struct VectorFieldSpec {
  FieldKind kind = FieldKind::D;
  std::size_t j = 0;  // only for Dj
};

/// D    = zbar_{n-2} d/dzbar_{n-1} + z_{n-1} d/dz_n          (n >= 3)
/// Dbar = z_{n-2} d/dz_{n-1} + zbar_{n-1} d/dzbar_n          (n >= 3)
/// D_j  = zbar_{j-1} d/dzbar_j + z_j d/dz_{j+1}               (2 <= j <= n-1)
/// D'   = z_1 d/dz_2                                          (n == 2)
/// Throws std::invalid_argument on an invalid (spec, n).
WeylOp build_vector_field(const VectorFieldSpec& spec, std::size_t n);

enum class FamilyKind { T, Tbar, Tj, T2 };
std::string to_string(FamilyKind k);

struct FamilySpec {
  std::size_t n = 3;
  FamilyKind family = FamilyKind::T;
  std::size_t j = 0;  // only for Tj
  unsigned l = 0;
  /// nullopt keeps lambda formal. T2 always uses lambda = 2.
  std::optional<Rational> lambda;

  void validate() const;
  std::string label() const;
  FamilySpec with_order(unsigned order) const {
    FamilySpec s = *this;
    s.l = order;
    return s;
  }
};

/// The lambda value a family is built at, as an affine exponent (lambda itself if formal).
AffineExponent lambda_exponent(const FamilySpec& spec);

WeylOp family_operator(const FamilySpec& spec);
DistExpr family_base(const FamilySpec& spec);

/// op^l(base) in canonical form, carrying the factored form (op, l, base).
/// The Gamma normalization is not applied.
DistExpr build_family(const FamilySpec& spec);

/// Expected right-hand side of the conjugation identity for h_1(a), a = a1 formal:
///   h_1(a).D  = D + a (zbar_{n-2} - abar z_{n-1} + |a|^2 zbar_n) d/dz_{n-2} - a zbar_n d/dz_n
///   h_1(a).D' = D' + abar (z_1 - a zbar_2) d/dzbar_1 - a zbar_2 d/dz_2
WeylOp lemma_d_rhs(std::size_t n, FieldKind which);

CheckRecord verify_lemma_d(std::size_t n, FieldKind which);

struct InvarianceOptions {
  std::size_t composites = 20;
  std::uint64_t seed = 1;
  bool check_termwise = true;
};

/// h.T = T for every order 0..spec.l, every generator h(u), h_j(a1) and
/// `composites` random products of up to four generators with rational
/// parameters, through the factored route and (optionally) the termwise route.
/// Also checks zero U(1)-weight, even parity and degree -lambda.
CheckRecord verify_invariance(const FamilySpec& spec, const InvarianceOptions& opts = {});

/// independence_rank({family at l = 0..lmax}) == lmax + 1.
CheckRecord verify_independence(const FamilySpec& spec, unsigned lmax);

/// Every T_{lambda,j}^l, l <= lmax, has support descriptor X_j and the family has rank lmax + 1.
CheckRecord verify_support_filtration(std::size_t n, std::size_t j, unsigned lmax);

/// One record per condition of the main theorem: finite orbit count, and
/// infinite multiplicity (formal lambda for n >= 3, lambda = 2 for n = 2).
std::vector<CheckRecord> theorem_main_report(std::size_t n, unsigned lmax, std::size_t samples = 20,
                                             std::uint64_t seed = 1);

}  // namespace infmult
