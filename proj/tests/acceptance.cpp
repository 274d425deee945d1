#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infmult/clifford.hpp"
#include "infmult/constructions.hpp"
#include "infmult/distribution.hpp"
#include "infmult/orbits.hpp"

using namespace infmult;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::optional<double> limit_s;
  std::function<std::string()> body;  // empty string on success, otherwise the reason
};

std::string require_pass(const CheckRecord& r) {
  return r.passed() ? std::string() : r.id + " failed: " + r.details.dump();
}

std::string all_pass(const std::vector<CheckRecord>& records) {
  for (const CheckRecord& r : records) {
    if (auto why = require_pass(r); !why.empty()) return why;
  }
  return {};
}

const AffineExponent kMinusLambda(Rational(0), Rational(-1));

std::vector<FamilySpec> formal_families(unsigned l) {
  std::vector<FamilySpec> out;
  for (std::size_t n = 3; n <= 4; ++n) {
    out.push_back({n, FamilyKind::T, 0, l, std::nullopt});
    out.push_back({n, FamilyKind::Tbar, 0, l, std::nullopt});
  }
  out.push_back({4, FamilyKind::Tj, 2, l, std::nullopt});
  out.push_back({4, FamilyKind::Tj, 3, l, std::nullopt});
  out.push_back({3, FamilyKind::Tj, 2, l, std::nullopt});
  return out;
}

Rational pairing(int p, int q, int a, int b, int r, int s) {
  if (p + r != a || q + s != b) return 0;
  return ((a + b) % 2 == 0 ? 1 : -1) * factorial(a) * factorial(b);
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;

  cs.push_back({1, "eps^2 = 1, i^2 = -1, i eps = -eps i; iota multiplicative on 100 samples, n <= 4 (exact)", 5.0, [] {
                  std::vector<CheckRecord> rs{clifford_relations_check()};
                  for (std::size_t n = 1; n <= 4; ++n) rs.push_back(iota_multiplicativity_check(n, 100, n));
                  return all_pass(rs);
                }});

  cs.push_back({2, "det(iota(g)) = 1 symbolically for phase and shift generators, n in {2,3,4}", std::nullopt, [] {
                  std::vector<CheckRecord> rs;
                  for (std::size_t n = 2; n <= 4; ++n) rs.push_back(h_det_check(n));
                  return all_pass(rs);
                }});

  cs.push_back({3, "h_1(a).D - RHS = 0 for n in {3,4,5}; h_1(a).D' - RHS = 0 for n = 2 (exact)", 5.0, [] {
                  std::vector<CheckRecord> rs;
                  for (std::size_t n = 3; n <= 5; ++n) rs.push_back(verify_lemma_d(n, FieldKind::D));
                  rs.push_back(verify_lemma_d(2, FieldKind::Dprime));
                  return all_pass(rs);
                }});

  cs.push_back({4, "act_group(g, T) = T for T, Tbar (n in {3,4}) and T_j (n = 4, j in {2,3}), l <= 3, all generators",
                60.0, [] {
                  std::vector<CheckRecord> rs;
                  for (const FamilySpec& s : formal_families(3)) {
                    if (s.n == 3 && s.family == FamilyKind::Tj) continue;
                    rs.push_back(verify_invariance(s, {20, 1, true}));
                  }
                  return all_pass(rs);
                }});

  cs.push_back({5, "degree = -lambda and parity even for every built family member (exact)", std::nullopt, [] {
                  for (unsigned l = 0; l <= 4; ++l) {
                    for (const FamilySpec& s : formal_families(l)) {
                      const DistExpr e = build_family(s);
                      if (degree(e) != std::optional<AffineExponent>(kMinusLambda)) return s.label() + " has wrong degree";
                      if (parity(e) != Parity::even) return s.label() + " is not even";
                    }
                    const DistExpr t2 = build_family({2, FamilyKind::T2, 0, l, std::nullopt});
                    if (degree(t2) != std::optional<AffineExponent>(AffineExponent(-2))) return std::string("T2 degree");
                    if (parity(t2) != Parity::even) return std::string("T2 parity");
                  }
                  return std::string();
                }});

  cs.push_back({6, "rank{T^l}_{l=0..5} = 6 for n = 3 over Q(i)(lambda); rank = lmax + 1 for lmax <= 8", 60.0, [] {
                  std::vector<DistExpr> family;
                  for (unsigned l = 0; l <= 8; ++l) {
                    family.push_back(build_family({3, FamilyKind::T, 0, l, std::nullopt}));
                    const std::size_t r = independence_rank(family);
                    if (r != l + 1) return "rank " + std::to_string(r) + " at lmax " + std::to_string(l);
                  }
                  return std::string();
                }});

  cs.push_back({7, "n = 2, lambda = 2: T2^l invariant for l <= 5 and rank{T2^l} = 6", std::nullopt, [] {
                  const FamilySpec s{2, FamilyKind::T2, 0, 5, std::nullopt};
                  return all_pass({verify_invariance(s, {20, 1, true}), verify_independence(s, 5)});
                }});

  cs.push_back({8, "orbit census n in {2,3,4,5}: n strata, dims 2j-1, 50 witnesses per stratum, residual <= 1e-9", 30.0,
                [] {
                  for (std::size_t n = 2; n <= 5; ++n) {
                    const OrbitCensus c = enumerate_strata(n, 200, 7, 50);
                    if (!c.ok()) return "census failed at n = " + std::to_string(n) + ": " + c.to_json().dump();
                    if (c.strata_count() != n) return "wrong stratum count at n = " + std::to_string(n);
                    for (const auto& [j, d] : c.dimensions) {
                      if (d != 2 * j - 1) return "wrong dimension for stratum " + std::to_string(j);
                    }
                    for (const auto& [j, size] : c.bucket_sizes) {
                      if (size < 2) return "stratum " + std::to_string(j) + " too small for pair witnesses";
                    }
                    if (c.same_stratum_pairs != 50 * n || c.witness_failures != 0) {
                      return "witness pairs at n = " + std::to_string(n) + ": " + c.to_json().dump();
                    }
                    if (c.max_residual > 1e-9) return "residual " + std::to_string(c.max_residual);
                  }
                  return std::string();
                }});

  cs.push_back({9, "T_j families for (n,j) in {(4,2),(4,3),(3,2)}: support X_j and rank lmax + 1", std::nullopt, [] {
                  return all_pass({verify_support_filtration(4, 2, 4), verify_support_filtration(4, 3, 4),
                                   verify_support_filtration(3, 2, 4)});
                }});

  cs.push_back({10, "zeta invariant symbolically; 100 distinct zeta give 100 distinct H_C-orbit labels", std::nullopt, [] {
                   return all_pass({complex_orbit_check(3, default_zetas(100), 5, 1),
                                    complex_orbit_check(2, default_zetas(100), 5, 2)});
                 }});

  cs.push_back({11, "normalize agrees with the jet pairing on z^p zbar^q d^a dbar^b delta, p,q,a,b <= 4", std::nullopt, [] {
                   for (int p = 0; p <= 4; ++p) {
                     for (int q = 0; q <= 4; ++q) {
                       for (int a = 0; a <= 4; ++a) {
                         for (int b = 0; b <= 4; ++b) {
                           DistTerm t = DistTerm::unit(1);
                           t.delta(1, a, b).monomial(1, p, q);
                           const DistExpr e = normalize(DistExpr(1, {t}));
                           for (int r = 0; r <= 8; ++r) {
                             for (int s = 0; s <= 8; ++s) {
                               Scalar lhs;
                               for (const DistTerm& u : e.terms()) {
                                 const VarSlot& v = u.slots[0];
                                 if (!v.delta || !(v.hol == AffineExponent()) || !(v.antihol == AffineExponent())) {
                                   return std::string("normal form keeps a monomial on a delta variable");
                                 }
                                 lhs += u.coeff * GaussianRational(pairing(0, 0, v.alpha, v.beta, r, s));
                               }
                               if (!(lhs == Scalar(pairing(p, q, a, b, r, s)))) {
                                 return "mismatch at p,q,a,b = " + std::to_string(p) + "," + std::to_string(q) + "," +
                                        std::to_string(a) + "," + std::to_string(b);
                               }
                             }
                           }
                         }
                       }
                     }
                   }
                   return std::string();
                 }});
  return cs;
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && c.limit_s && secs >= *c.limit_s) why = "time limit exceeded";
    const bool ok = why.empty();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs);
    if (c.limit_s) std::printf(", limit %.0f s", *c.limit_s);
    std::printf(")");
    if (!ok) std::printf(" -- %s", why.c_str());
    std::printf("\n");
  }
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
