#include "infmult/distribution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "infmult/matrix.hpp"

namespace infmult {

namespace {

// k (k-1) ... (k-m+1) as a rational.
Rational falling(long k, long m) {
  Rational out(1);
  for (long i = 0; i < m; ++i) out *= Rational(k - i);
  return out;
}

// sigma (sigma-1) ... (sigma-m+1) as a polynomial in lambda.
Scalar falling(const AffineExponent& sigma, int m) {
  Scalar out(1);
  for (int i = 0; i < m; ++i) out *= Scalar::from_affine(sigma - AffineExponent(i));
  return out;
}

std::string power_text(const std::string& base, long e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string slot_text(const VarSlot& s, std::size_t j) {
  const std::string z = "z" + std::to_string(j);
  const std::string zb = "zb" + std::to_string(j);
  std::vector<std::string> parts;
  auto push_monomial = [&](long p, long q) {
    if (p > 0) parts.push_back(power_text(z, p));
    if (q > 0) parts.push_back(power_text(zb, q));
  };
  if (s.delta) {
    push_monomial(s.hol.as_integer(), s.antihol.as_integer());
    if (s.alpha > 0) parts.push_back(power_text("d" + z, s.alpha));
    if (s.beta > 0) parts.push_back(power_text("d" + zb, s.beta));
    parts.push_back("delta(" + z + ")");
  } else if (auto sigma = s.power_exponent()) {
    push_monomial((s.hol - *sigma).as_integer(), (s.antihol - *sigma).as_integer());
    parts.push_back("(" + z + "*" + zb + ")^(" + sigma->to_string() + ")");
  } else {
    push_monomial(s.hol.as_integer(), s.antihol.as_integer());
  }
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

bool slots_less(const std::vector<VarSlot>& a, const std::vector<VarSlot>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct SlotsLess {
  bool operator()(const std::vector<VarSlot>& a, const std::vector<VarSlot>& b) const { return slots_less(a, b); }
};

// Removes all monomial multipliers from delta slots. Returns false if the term vanishes.
bool reduce_delta_multipliers(DistTerm& t) {
  for (auto& s : t.slots) {
    if (!s.delta) continue;
    const long p = s.hol.as_integer();
    const long q = s.antihol.as_integer();
    if (p > s.alpha || q > s.beta) return false;
    Rational c = falling(s.alpha, p) * falling(s.beta, q);
    if ((p + q) % 2) c = -c;
    t.coeff *= GaussianRational(c);
    s.alpha -= static_cast<int>(p);
    s.beta -= static_cast<int>(q);
    s.hol = AffineExponent();
    s.antihol = AffineExponent();
  }
  return !t.coeff.is_zero();
}

void check_slot_exponents(const VarSlot& s) {
  if (s.delta) {
    if (!s.hol.is_nonneg_integer() || !s.antihol.is_nonneg_integer() || s.alpha < 0 || s.beta < 0) {
      throw std::invalid_argument("delta slot carries a non-polynomial multiplier");
    }
    return;
  }
  if (!(s.hol - s.antihol).is_integer()) {
    throw std::invalid_argument("power factor with non-integral holomorphic/antiholomorphic difference");
  }
}

// Term-wise building blocks of the substitution route.
using Jet = std::map<std::vector<int>, Scalar>;

void jet_add(Jet& j, const std::vector<int>& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = j.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) j.erase(it);
}

int delta_degree(const std::vector<int>& e, const std::vector<bool>& is_delta_sym) {
  int d = 0;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (is_delta_sym[v]) d += e[v];
  }
  return d;
}

Jet jet_mul(const Jet& a, const Jet& b, const std::vector<bool>& is_delta_sym, int cap) {
  Jet out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      if (delta_degree(e, is_delta_sym) > cap) continue;
      jet_add(out, e, ca * cb);
    }
  }
  return out;
}

Jet jet_from(const Polynomial& p) {
  Jet out;
  for (const auto& [e, c] : p.terms()) out.emplace(e, c);
  return out;
}

Polynomial row_polynomial(const ScalarMatrix& m, std::size_t n, std::size_t v, std::size_t skip) {
  Polynomial row(n);
  for (std::size_t w = 0; w < 2 * n; ++w) {
    if (w == skip || m(v, w).is_zero()) continue;
    std::vector<int> e(2 * n, 0);
    e[w] = 1;
    row.add(e, m(v, w));
  }
  return row;
}

Jet power_factor_jet(const Substitution& s, std::size_t j, const VarSlot& slot, const std::vector<bool>& is_delta_sym,
                     int cap) {
  const std::size_t n = s.n;
  const std::size_t zv = zvar(j);
  const std::size_t zbv = zbar_var(j);
  for (std::size_t row : {zv, zbv}) {
    for (std::size_t w = 0; w < 2 * n; ++w) {
      if (w == row || is_delta_sym[w] || s.forward(row, w).is_zero()) continue;
      throw UnsupportedSubstitution("power factor on z" + std::to_string(j) + " is substituted by an expression in " +
                                    var_name(w) + ", which is not a delta variable");
    }
  }
  const Scalar& c = s.forward(zv, zv);
  const Scalar& cb = s.forward(zbv, zbv);
  if (c.is_zero() || !(c * cb == Scalar(1))) {
    throw UnsupportedSubstitution("power factor on z" + std::to_string(j) +
                                  " acquires a leading coefficient that is not a unit");
  }
  const Polynomial w = row_polynomial(s.forward, n, zv, zv);
  const Polynomial wb = row_polynomial(s.forward, n, zbv, zbv);

  // (c z + w)^P (cb zb + wb)^Q = c^P cb^Q z^P zb^Q (1 + cb w / z)^P (1 + c wb / zb)^Q, and c cb = 1.
  const long d = (slot.hol - slot.antihol).as_integer();
  const Scalar prefactor = d >= 0 ? c.pow(static_cast<unsigned>(d)) : cb.pow(static_cast<unsigned>(-d));
  const Polynomial shifted = Polynomial::constant(n, cb) * w;
  const Polynomial shifted_bar = Polynomial::constant(n, c) * wb;

  std::vector<Polynomial> pw{Polynomial::constant(n, Scalar(1))};
  std::vector<Polynomial> pwb{Polynomial::constant(n, Scalar(1))};
  for (int k = 1; k <= cap; ++k) {
    pw.push_back(pw.back() * shifted);
    pwb.push_back(pwb.back() * shifted_bar);
  }
  Jet out;
  for (int k = 0; k <= cap; ++k) {
    const Scalar bk = generalized_binomial(slot.hol, static_cast<unsigned>(k));
    if (bk.is_zero()) continue;
    for (int m = 0; k + m <= cap; ++m) {
      const Scalar bm = generalized_binomial(slot.antihol, static_cast<unsigned>(m));
      if (bm.is_zero()) continue;
      const Polynomial prod = pw[k] * pwb[m];
      for (const auto& [e, coeff] : prod.terms()) {
        std::vector<int> shifted_e = e;
        shifted_e[zv] -= k;
        shifted_e[zbv] -= m;
        jet_add(out, shifted_e, prefactor * bk * bm * coeff);
      }
    }
  }
  return out;
}

std::vector<DistTerm> substitute_term(const Substitution& s, const DistTerm& t) {
  const std::size_t n = s.n;
  const std::size_t vars = 2 * n;
  std::vector<bool> is_delta_sym(vars, false);
  std::vector<std::size_t> delta_syms;
  int cap = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    const VarSlot& slot = t.slots[j - 1];
    if (!slot.delta) continue;
    is_delta_sym[zvar(j)] = is_delta_sym[zbar_var(j)] = true;
    delta_syms.push_back(zvar(j));
    delta_syms.push_back(zbar_var(j));
    cap += slot.alpha + slot.beta;
  }

  for (std::size_t v : delta_syms) {
    for (std::size_t w = 0; w < vars; ++w) {
      if (!is_delta_sym[w] && !s.forward(v, w).is_zero()) {
        throw UnsupportedSubstitution("delta variable " + var_name(v) + " is substituted by an expression in " +
                                      var_name(w));
      }
    }
  }
  if (!delta_syms.empty() && !(determinant(s.forward.submatrix(delta_syms, delta_syms)) == Scalar(1))) {
    throw UnsupportedSubstitution("delta block of the substitution is not unimodular");
  }

  Jet jet;
  jet.emplace(std::vector<int>(vars, 0), t.coeff);
  std::vector<bool> is_power(n + 1, false);
  for (std::size_t j = 1; j <= n; ++j) {
    const VarSlot& slot = t.slots[j - 1];
    if (slot.delta || slot.is_trivial()) continue;
    if (slot.is_polynomial()) {
      Polynomial image = Polynomial::constant(n, Scalar(1));
      const long p = slot.hol.as_integer();
      const long q = slot.antihol.as_integer();
      if (p > 0) image = image * row_polynomial(s.forward, n, zvar(j), vars).pow(static_cast<unsigned>(p));
      if (q > 0) image = image * row_polynomial(s.forward, n, zbar_var(j), vars).pow(static_cast<unsigned>(q));
      jet = jet_mul(jet, jet_from(image), is_delta_sym, cap);
    } else {
      is_power[j] = true;
      jet = jet_mul(jet, power_factor_jet(s, j, slot, is_delta_sym, cap), is_delta_sym, cap);
    }
  }

  // Derivatives of delta: (d_w F)(L z) = sum_v inverse(v, w) d_v [F(L z)].
  Polynomial dop = Polynomial::constant(n, Scalar(1));
  for (std::size_t j = 1; j <= n; ++j) {
    const VarSlot& slot = t.slots[j - 1];
    if (!slot.delta) continue;
    for (std::size_t w : {zvar(j), zbar_var(j)}) {
      const int order = w == zvar(j) ? slot.alpha : slot.beta;
      if (order == 0) continue;
      Polynomial image(n);
      for (std::size_t v : delta_syms) {
        if (s.inverse(v, w).is_zero()) continue;
        std::vector<int> e(vars, 0);
        e[v] = 1;
        image.add(e, s.inverse(v, w));
      }
      dop = dop * image.pow(static_cast<unsigned>(order));
    }
  }

  std::vector<DistTerm> out;
  for (const auto& [e, c] : jet) {
    for (const auto& [d, dc] : dop.terms()) {
      DistTerm r = DistTerm::unit(n, c * dc);
      for (std::size_t j = 1; j <= n; ++j) {
        const VarSlot& orig = t.slots[j - 1];
        VarSlot& slot = r.slots[j - 1];
        const int eh = e[zvar(j)];
        const int ea = e[zbar_var(j)];
        if (orig.delta) {
          slot.delta = true;
          slot.hol = AffineExponent(eh);
          slot.antihol = AffineExponent(ea);
          slot.alpha = d[zvar(j)];
          slot.beta = d[zbar_var(j)];
        } else if (is_power[j]) {
          slot.hol = orig.hol + AffineExponent(eh);
          slot.antihol = orig.antihol + AffineExponent(ea);
        } else {
          slot.hol = AffineExponent(eh);
          slot.antihol = AffineExponent(ea);
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VarSlot / DistTerm

std::optional<AffineExponent> VarSlot::power_exponent() const {
  if (delta || is_polynomial()) return std::nullopt;
  return (hol - antihol).r >= 0 ? antihol : hol;
}

bool operator<(const VarSlot& a, const VarSlot& b) {
  if (a.delta != b.delta) return !a.delta;
  if (!(a.hol == b.hol)) return a.hol < b.hol;
  if (!(a.antihol == b.antihol)) return a.antihol < b.antihol;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

DistTerm DistTerm::unit(std::size_t n, Scalar coeff) {
  DistTerm t;
  t.coeff = std::move(coeff);
  t.slots.assign(n, VarSlot{});
  return t;
}

DistTerm& DistTerm::delta(std::size_t k, int alpha, int beta) {
  VarSlot& s = slots.at(k - 1);
  if (!s.hol.is_nonneg_integer() || !s.antihol.is_nonneg_integer()) {
    throw std::invalid_argument("cannot place a delta on a variable carrying a power factor");
  }
  s.delta = true;
  s.alpha = alpha;
  s.beta = beta;
  return *this;
}

DistTerm& DistTerm::power(std::size_t j, const AffineExponent& sigma) {
  VarSlot& s = slots.at(j - 1);
  if (s.delta) throw std::invalid_argument("cannot place a power factor on a delta variable");
  s.hol += sigma;
  s.antihol += sigma;
  return *this;
}

DistTerm& DistTerm::monomial(std::size_t j, int p, int q) {
  VarSlot& s = slots.at(j - 1);
  s.hol += AffineExponent(p);
  s.antihol += AffineExponent(q);
  return *this;
}

std::vector<std::size_t> DistTerm::delta_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (slots[j].delta) out.push_back(j + 1);
  }
  return out;
}

std::string DistTerm::to_string() const {
  std::string out = "(" + coeff.to_string() + ")";
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (slots[j].is_trivial()) continue;
    out += "*" + slot_text(slots[j], j + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// DistExpr

DistExpr::DistExpr(std::size_t n, std::vector<DistTerm> terms) : n_(n), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.dim() != n_) throw std::invalid_argument("distribution term dimension mismatch");
    for (const auto& s : t.slots) check_slot_exponents(s);
  }
}

DistExpr DistExpr::with_factored(const WeylOp& op, unsigned power, const DistExpr& base) const {
  if (op.dim() != n_ || base.dim() != n_) throw std::invalid_argument("factored form dimension mismatch");
  DistExpr out = *this;
  out.factored_ = std::make_shared<const FactoredForm>(FactoredForm{op, power, base});
  return out;
}

DistExpr DistExpr::without_factored() const {
  DistExpr out = *this;
  out.factored_.reset();
  return out;
}

DistExpr& DistExpr::operator+=(const DistExpr& o) {
  if (o.n_ != n_) throw std::invalid_argument("distribution dimension mismatch");
  std::vector<DistTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = normalize(DistExpr(n_, std::move(all)));
  return *this;
}

DistExpr& DistExpr::operator-=(const DistExpr& o) { return *this += Scalar(-1) * o; }

DistExpr operator*(const Scalar& c, const DistExpr& e) {
  std::vector<DistTerm> terms = e.terms_;
  for (auto& t : terms) t.coeff = c * t.coeff;
  return normalize(DistExpr(e.n_, std::move(terms)));
}

bool operator==(const DistExpr& a, const DistExpr& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].slots == b.terms_[i].slots) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::vector<std::string> DistExpr::term_strings() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.to_string());
  return out;
}

std::string DistExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.to_string();
  }
  return out;
}

DistExpr expand(const FactoredForm& f) {
  DistExpr cur = normalize(f.base).without_factored();
  for (unsigned i = 0; i < f.power; ++i) cur = apply_weyl(f.op, cur).without_factored();
  return cur;
}

// ---------------------------------------------------------------------------
// Operations

DistExpr normalize(const DistExpr& e) {
  std::map<std::vector<VarSlot>, Scalar, SlotsLess> merged;
  for (DistTerm t : e.terms()) {
    if (!reduce_delta_multipliers(t)) continue;
    auto [it, inserted] = merged.try_emplace(t.slots, t.coeff);
    if (!inserted) {
      it->second += t.coeff;
    }
  }
  std::vector<DistTerm> out;
  for (auto& [slots, c] : merged) {
    if (c.is_zero()) continue;
    out.push_back(DistTerm{c, slots});
  }
  DistExpr result(e.dim(), std::move(out));
  if (e.factored()) {
    const FactoredForm& f = *e.factored();
    result = result.with_factored(f.op, f.power, f.base);
  }
  return result;
}

std::optional<DistTerm> rewrite_once(const DistTerm& t, std::size_t k, bool conjugate_side) {
  DistTerm r = t;
  VarSlot& s = r.slots.at(k - 1);
  if (!s.delta) throw std::invalid_argument("rewrite_once: z" + std::to_string(k) + " is not a delta variable");
  AffineExponent& mult = conjugate_side ? s.antihol : s.hol;
  int& order = conjugate_side ? s.beta : s.alpha;
  if (!mult.is_integer() || mult.as_integer() <= 0) {
    throw std::invalid_argument("rewrite_once: no multiplier to remove on z" + std::to_string(k));
  }
  if (order == 0) return std::nullopt;
  mult -= AffineExponent(1);
  r.coeff *= GaussianRational(-order);
  --order;
  return r;
}

DistExpr apply_weyl(const WeylOp& d, const DistExpr& e) {
  if (d.dim() != e.dim()) throw std::invalid_argument("apply_weyl: dimension mismatch");
  const std::size_t n = e.dim();
  const DistExpr src = normalize(e.without_factored());
  std::vector<DistTerm> out;
  for (const auto& [key, c] : d.terms()) {
    for (const DistTerm& t : src.terms()) {
      DistTerm r = t;
      r.coeff = c * t.coeff;
      bool vanished = false;
      for (std::size_t v = 0; v < 2 * n && !vanished; ++v) {
        const int b = key.deriv[v];
        if (b == 0) continue;
        VarSlot& s = r.slots[v / 2];
        const bool bar = v % 2 == 1;
        if (s.delta) {
          (bar ? s.beta : s.alpha) += b;
          continue;
        }
        AffineExponent& exp = bar ? s.antihol : s.hol;
        r.coeff *= falling(exp, b);
        exp -= AffineExponent(b);
        vanished = r.coeff.is_zero();
      }
      if (vanished) continue;
      for (std::size_t v = 0; v < 2 * n; ++v) {
        const int a = key.mono[v];
        if (a == 0) continue;
        VarSlot& s = r.slots[v / 2];
        (v % 2 ? s.antihol : s.hol) += AffineExponent(a);
      }
      out.push_back(std::move(r));
    }
  }
  DistExpr result = normalize(DistExpr(n, std::move(out)));
  if (const FactoredForm* f = e.factored(); f && f->op == d) {
    result = result.with_factored(d, f->power + 1, f->base);
  }
  return result;
}

DistExpr act_substitution(const Substitution& s, const DistExpr& e, ActRoute route) {
  if (s.n != e.dim()) throw std::invalid_argument("act_substitution: dimension mismatch");
  if (route == ActRoute::automatic && e.factored()) {
    const FactoredForm& f = *e.factored();
    const WeylOp op = conjugate_op(f.op, s);
    const DistExpr base = act_substitution(s, f.base, route).without_factored();
    DistExpr cur = base;
    for (unsigned i = 0; i < f.power; ++i) cur = apply_weyl(op, cur).without_factored();
    return cur.with_factored(op, f.power, base);
  }
  const DistExpr src = normalize(e.without_factored());
  std::vector<DistTerm> out;
  for (const DistTerm& t : src.terms()) {
    std::vector<DistTerm> part = substitute_term(s, t);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return normalize(DistExpr(e.dim(), std::move(out)));
}

DistExpr act_group(const REpsMatrix& g, const DistExpr& e, ActRoute route) {
  return act_substitution(substitution_from_group(g, true), e, route);
}

std::optional<AffineExponent> degree(const DistExpr& e) {
  std::optional<AffineExponent> common;
  for (const DistTerm& t : e.terms()) {
    AffineExponent d;
    for (const VarSlot& s : t.slots) {
      d += s.hol + s.antihol;
      if (s.delta) d -= AffineExponent(2 + s.alpha + s.beta);
    }
    if (!common) {
      common = d;
    } else if (!(*common == d)) {
      return std::nullopt;
    }
  }
  return common;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::mixed:
      return "mixed";
  }
  return "mixed";
}

Parity parity(const DistExpr& e) {
  std::optional<long> common;
  for (const DistTerm& t : e.terms()) {
    long p = 0;
    for (const VarSlot& s : t.slots) {
      p += (s.hol - s.antihol).as_integer();
      if (s.delta) p += s.alpha + s.beta;
    }
    p = ((p % 2) + 2) % 2;
    if (!common) {
      common = p;
    } else if (*common != p) {
      return Parity::mixed;
    }
  }
  return common.value_or(0) == 0 ? Parity::even : Parity::odd;
}

std::vector<long> u1_weight(const DistExpr& e) {
  std::vector<long> out;
  for (const DistTerm& t : e.terms()) {
    long w = 0;
    for (const VarSlot& s : t.slots) {
      w += (s.hol - s.antihol).as_integer();
      if (s.delta) w -= s.alpha - s.beta;
    }
    out.push_back(w);
  }
  return out;
}

std::size_t independence_rank(const std::vector<DistExpr>& family) {
  std::map<std::vector<VarSlot>, std::size_t, SlotsLess> columns;
  std::vector<DistExpr> normalized;
  for (const DistExpr& e : family) {
    normalized.push_back(normalize(e));
    for (const DistTerm& t : normalized.back().terms()) columns.try_emplace(t.slots, 0);
  }
  std::size_t idx = 0;
  for (auto& [slots, col] : columns) col = idx++;
  std::vector<std::vector<Scalar>> m;
  for (const DistExpr& e : normalized) {
    std::vector<Scalar> row(columns.size());
    for (const DistTerm& t : e.terms()) row[columns.at(t.slots)] = t.coeff;
    m.push_back(std::move(row));
  }
  if (columns.empty()) return 0;
  return rank_over_function_field(m);
}

SupportDescriptor formal_support(const DistExpr& e) {
  SupportDescriptor out;
  const DistExpr src = normalize(e);
  if (src.is_zero()) return out;
  out.nonzero = true;
  const std::size_t n = src.dim();
  std::set<std::size_t> common;
  for (std::size_t j = 1; j <= n; ++j) common.insert(j);
  for (const DistTerm& t : src.terms()) {
    std::set<std::size_t> mine;
    for (std::size_t j : t.delta_vars()) mine.insert(j);
    std::set<std::size_t> keep;
    std::set_intersection(common.begin(), common.end(), mine.begin(), mine.end(), std::inserter(keep, keep.begin()));
    common = std::move(keep);
  }
  out.delta_vars.assign(common.begin(), common.end());
  for (const DistTerm& t : src.terms()) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (common.count(j)) continue;
      const VarSlot& s = t.slots[j - 1];
      if (!s.delta && !s.is_trivial()) out.max_carrier = std::max(out.max_carrier.value_or(0), j);
    }
  }
  const std::size_t j = n - out.delta_vars.size();
  bool tail = true;
  for (std::size_t i = 0; i < out.delta_vars.size(); ++i) tail = tail && out.delta_vars[i] == j + 1 + i;
  if (tail) out.stratum = j;
  return out;
}

nlohmann::json to_json(const DistExpr& e) {
  nlohmann::json j;
  j["n"] = e.dim();
  j["text"] = e.to_string();
  j["terms"] = e.term_strings();
  if (auto d = degree(e)) j["degree"] = d->to_string();
  j["parity"] = to_string(parity(e));
  return j;
}

}  // namespace infmult
