#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "infmult/clifford.hpp"
#include "infmult/scalar.hpp"
#include "infmult/weyl.hpp"

namespace infmult {

/// Factor of a distribution term in one complex variable z_j.
///
/// A regular slot is z_j^hol zbar_j^antihol with hol - antihol an integer; when
/// the exponents are not both nonnegative integers this is the power factor
/// z^p zbar^q (z zbar)^sigma with sigma = min(hol, antihol). A delta slot is
/// d^alpha/dz^alpha d^beta/dzbar^beta delta(z_j, zbar_j), optionally multiplied
/// by z_j^hol zbar_j^antihol (nonnegative integers) until normalize() removes it.
struct VarSlot {
  bool delta = false;
  AffineExponent hol;
  AffineExponent antihol;
  int alpha = 0;
  int beta = 0;

  bool is_trivial() const { return !delta && hol == AffineExponent() && antihol == AffineExponent(); }
  /// True when the slot is an honest polynomial z^p zbar^q.
  bool is_polynomial() const { return !delta && hol.is_nonneg_integer() && antihol.is_nonneg_integer(); }
  /// sigma of the power factor, or nullopt for a polynomial or delta slot.
  std::optional<AffineExponent> power_exponent() const;

  friend bool operator==(const VarSlot&, const VarSlot&) = default;
  friend bool operator<(const VarSlot& a, const VarSlot& b);
};

struct DistTerm {
  Scalar coeff;
  std::vector<VarSlot> slots;  // slot j-1 describes z_j

  static DistTerm unit(std::size_t n, Scalar coeff = Scalar(1));

  std::size_t dim() const { return slots.size(); }
  /// Turns z_k into a delta variable with derivative orders (alpha, beta).
  DistTerm& delta(std::size_t k, int alpha = 0, int beta = 0);
  /// Multiplies by (z_j zbar_j)^sigma.
  DistTerm& power(std::size_t j, const AffineExponent& sigma);
  /// Multiplies by z_j^p zbar_j^q.
  DistTerm& monomial(std::size_t j, int p, int q);

  std::vector<std::size_t> delta_vars() const;
  std::string to_string() const;
};

struct FactoredForm;

/// Finite sum of distribution terms in n complex variables. Expressions
/// returned by normalize(), apply_weyl() and act_group() are canonical: terms
/// sorted by slot vector, merged, zero coefficients dropped, no monomial left
/// on a delta variable. Equality compares term lists only.
class DistExpr {
 public:
  explicit DistExpr(std::size_t n = 0) : n_(n) {}
  DistExpr(std::size_t n, std::vector<DistTerm> terms);

  std::size_t dim() const { return n_; }
  const std::vector<DistTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Optional (operator^power, base) description of this expression.
  const FactoredForm* factored() const { return factored_.get(); }
  DistExpr with_factored(const WeylOp& op, unsigned power, const DistExpr& base) const;
  DistExpr without_factored() const;

  DistExpr& operator+=(const DistExpr& o);
  DistExpr& operator-=(const DistExpr& o);
  friend DistExpr operator+(DistExpr a, const DistExpr& b) { return a += b; }
  friend DistExpr operator-(DistExpr a, const DistExpr& b) { return a -= b; }
  friend DistExpr operator*(const Scalar& c, const DistExpr& e);
  friend bool operator==(const DistExpr& a, const DistExpr& b);

  /// Deterministic text, one term per " + " in canonical order.
  std::string to_string() const;
  std::vector<std::string> term_strings() const;

 private:
  std::size_t n_;
  std::vector<DistTerm> terms_;
  std::shared_ptr<const FactoredForm> factored_;
};

struct FactoredForm {
  WeylOp op;
  unsigned power = 0;
  DistExpr base;
};

/// Expands op^power(base) and normalizes.
DistExpr expand(const FactoredForm& f);

class UnsupportedSubstitution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical form: eliminates monomials on delta variables with
/// z d^a dbar^b delta = -a d^(a-1) dbar^b delta (and the conjugate rule), then
/// sorts and merges.
DistExpr normalize(const DistExpr& e);

/// One rewrite step on slot k (1-based): removes one factor z_k (or zbar_k
/// when `conjugate_side`). Returns nullopt when the term is annihilated.
/// Throws std::invalid_argument if there is no such factor to remove.
std::optional<DistTerm> rewrite_once(const DistTerm& t, std::size_t k, bool conjugate_side);

/// Leibniz application of a polynomial-coefficient operator, then normalize.
/// If e carries the factored form (d, l, base) the result carries (d, l+1, base).
DistExpr apply_weyl(const WeylOp& d, const DistExpr& e);

enum class ActRoute {
  automatic,  ///< use the factored form when present
  termwise,   ///< always substitute term by term
};

/// Pullback T(g^-1 z) for the inverse-mode substitution s of a group element
/// g. Termwise, power factors are jet-expanded up to the largest total delta
/// derivative order; higher jets are annihilated by the delta block. Throws
/// UnsupportedSubstitution when a power-factor base is not of the form
/// c z_j + (delta variables) with c cbar = 1, or when delta variables mix with
/// others or their block is not unimodular.
DistExpr act_substitution(const Substitution& s, const DistExpr& e, ActRoute route = ActRoute::automatic);

/// (g.T)(phi) = T(g^-1 . phi).
DistExpr act_group(const REpsMatrix& g, const DistExpr& e, ActRoute route = ActRoute::automatic);

/// Common homogeneity degree, or nullopt if the terms disagree (or e is zero).
std::optional<AffineExponent> degree(const DistExpr& e);

enum class Parity { even, odd, mixed };
std::string to_string(Parity p);
Parity parity(const DistExpr& e);

/// U(1)-weight of every term: sum(p - q) - sum over delta vars of (alpha - beta).
std::vector<long> u1_weight(const DistExpr& e);

/// Rank over Q(i)(lambda) of the coefficient matrix of the family against all
/// distinct basis terms (slot vectors) occurring in it.
std::size_t independence_rank(const std::vector<DistExpr>& family);

struct SupportDescriptor {
  /// Variables (1-based) that carry a delta factor in every term.
  std::vector<std::size_t> delta_vars;
  /// Largest variable outside delta_vars carrying a monomial or power factor.
  std::optional<std::size_t> max_carrier;
  /// j with delta_vars == {j+1..n}, identifying the stratum closure X_j.
  std::optional<std::size_t> stratum;
  bool nonzero = false;

  friend bool operator==(const SupportDescriptor&, const SupportDescriptor&) = default;
};

SupportDescriptor formal_support(const DistExpr& e);

nlohmann::json to_json(const DistExpr& e);

}  // namespace infmult
