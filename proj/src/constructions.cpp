#include "infmult/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "infmult/clifford.hpp"
#include "infmult/orbits.hpp"

namespace infmult {

namespace {

std::vector<int> unit_vec(std::size_t n, std::size_t v) {
  std::vector<int> e(2 * n, 0);
  e.at(v) = 1;
  return e;
}

// c * x_mono * d/dx_deriv
WeylOp field_term(std::size_t n, const Scalar& c, std::size_t mono, std::size_t deriv) {
  return WeylOp::term(n, c, unit_vec(n, mono), unit_vec(n, deriv));
}

WeylOp vector_field_pair(std::size_t n, std::size_t j) {
  // zbar_{j-1} d/dzbar_j + z_j d/dz_{j+1}
  return field_term(n, Scalar(1), zbar_var(j - 1), zbar_var(j)) + field_term(n, Scalar(1), zvar(j), zvar(j + 1));
}

struct NamedElement {
  std::string name;
  REpsMatrix g;
};

std::vector<NamedElement> generators(std::size_t n) {
  std::vector<NamedElement> out;
  out.push_back({"h(u)", HGenerator::phase(1).matrix(n)});
  for (unsigned j = 1; j < n; ++j) {
    out.push_back({"h_" + std::to_string(j) + "(a1)", HGenerator::shift(j, Scalar::param(1)).matrix(n)});
  }
  return out;
}

GaussianRational random_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

std::vector<NamedElement> random_composites(std::size_t n, std::size_t count, std::uint64_t seed) {
  const std::vector<std::pair<std::string, GaussianRational>> phases = {
      {"i", GaussianRational::i()},
      {"-1", GaussianRational(-1)},
      {"(3+4i)/5", GaussianRational(make_rational(3, 5), make_rational(4, 5))},
      {"(5-12i)/13", GaussianRational(make_rational(5, 13), make_rational(-12, 13))},
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 4);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> pick_phase(0, phases.size() - 1);
  std::uniform_int_distribution<unsigned> pick_j(1, static_cast<unsigned>(n - 1));
  std::vector<NamedElement> out;
  for (std::size_t c = 0; c < count; ++c) {
    NamedElement e{"", REpsMatrix::identity(n)};
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
      if (!e.name.empty()) e.name += " ";
      if (kind(rng) == 0) {
        const auto& [label, value] = phases[pick_phase(rng)];
        e.name += "h(" + label + ")";
        e.g = e.g * h_element(n, Scalar(value), {});
      } else {
        const unsigned j = pick_j(rng);
        const GaussianRational a = random_gaussian(rng);
        e.name += "h_" + std::to_string(j) + "(" + a.to_string() + ")";
        e.g = e.g * HGenerator::shift(j, Scalar(a)).matrix(n);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::json residual_json(const DistExpr& got, const DistExpr& want) {
  return (got.without_factored() - want.without_factored()).term_strings();
}

}  // namespace

WeylOp build_vector_field(const VectorFieldSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case FieldKind::D:
      if (n < 3) throw std::invalid_argument("D requires n >= 3");
      return vector_field_pair(n, n - 1);
    case FieldKind::Dbar:
      if (n < 3) throw std::invalid_argument("Dbar requires n >= 3");
      return field_term(n, Scalar(1), zvar(n - 2), zvar(n - 1)) +
             field_term(n, Scalar(1), zbar_var(n - 1), zbar_var(n));
    case FieldKind::Dj:
      if (n < 3 || spec.j < 2 || spec.j > n - 1) throw std::invalid_argument("D_j requires n >= 3 and 2 <= j <= n-1");
      return vector_field_pair(n, spec.j);
    case FieldKind::Dprime:
      if (n != 2) throw std::invalid_argument("D' is defined for n = 2 only");
      return field_term(n, Scalar(1), zvar(1), zvar(2));
  }
  throw std::invalid_argument("unknown vector field");
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::T:
      return "T";
    case FamilyKind::Tbar:
      return "Tbar";
    case FamilyKind::Tj:
      return "Tj";
    case FamilyKind::T2:
      return "T2";
  }
  return "?";
}

void FamilySpec::validate() const {
  switch (family) {
    case FamilyKind::T:
    case FamilyKind::Tbar:
      if (n < 3) throw std::invalid_argument(to_string(family) + " requires n >= 3");
      break;
    case FamilyKind::Tj:
      if (n < 3 || j < 2 || j > n - 1) throw std::invalid_argument("Tj requires n >= 3 and 2 <= j <= n-1");
      break;
    case FamilyKind::T2:
      if (n != 2) throw std::invalid_argument("T2 requires n = 2");
      if (lambda && *lambda != 2) throw std::invalid_argument("T2 is defined at lambda = 2 only");
      break;
  }
}

std::string FamilySpec::label() const {
  std::string s = to_string(family);
  if (family == FamilyKind::Tj) s += std::to_string(j);
  s += ".n" + std::to_string(n);
  if (family == FamilyKind::T2) return s;
  s += lambda ? ".lambda=" + infmult::to_string(*lambda) : ".lambda=formal";
  return s;
}

AffineExponent lambda_exponent(const FamilySpec& spec) {
  if (spec.family == FamilyKind::T2) return AffineExponent(2);
  if (spec.lambda) return AffineExponent(*spec.lambda);
  return AffineExponent(Rational(0), Rational(1));
}

WeylOp family_operator(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case FamilyKind::T:
      return build_vector_field({FieldKind::D}, spec.n);
    case FamilyKind::Tbar:
      return build_vector_field({FieldKind::Dbar}, spec.n);
    case FamilyKind::Tj:
      return build_vector_field({FieldKind::Dj, spec.j}, spec.n);
    case FamilyKind::T2:
      return build_vector_field({FieldKind::Dprime}, spec.n);
  }
  throw std::invalid_argument("unknown family");
}

DistExpr family_base(const FamilySpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const AffineExponent lam = lambda_exponent(spec);
  const Rational half = make_rational(1, 2);
  DistTerm t = DistTerm::unit(n);
  switch (spec.family) {
    case FamilyKind::T:
    case FamilyKind::Tbar:
      // |z_{n-1}|^(2-lambda) delta(z_n)
      t.power(n - 1, AffineExponent(Rational(1) - half * lam.r, -half * lam.s)).delta(n);
      break;
    case FamilyKind::Tj: {
      // |z_j|^(2(n-j)-lambda) prod_{k>j} delta(z_k)
      const Rational r = Rational(static_cast<long>(n - spec.j)) - half * lam.r;
      t.power(spec.j, AffineExponent(r, -half * lam.s));
      for (std::size_t k = spec.j + 1; k <= n; ++k) t.delta(k);
      break;
    }
    case FamilyKind::T2:
      t.delta(2);
      break;
  }
  return normalize(DistExpr(n, {t}));
}

DistExpr build_family(const FamilySpec& spec) {
  const WeylOp op = family_operator(spec);
  const DistExpr base = family_base(spec);
  DistExpr cur = base.with_factored(op, 0, base);
  for (unsigned i = 0; i < spec.l; ++i) cur = apply_weyl(op, cur);
  return cur;
}

WeylOp lemma_d_rhs(std::size_t n, FieldKind which) {
  const Scalar a = Scalar::param(1);
  const Scalar ab = Scalar::param_conj(1);
  if (which == FieldKind::D) {
    if (n < 3) throw std::invalid_argument("lemma_d_rhs(D) requires n >= 3");
    const WeylOp D = build_vector_field({FieldKind::D}, n);
    // a (zbar_{n-2} - abar z_{n-1} + |a|^2 zbar_n) d/dz_{n-2} - a zbar_n d/dz_n
    return D + field_term(n, a, zbar_var(n - 2), zvar(n - 2)) - field_term(n, a * ab, zvar(n - 1), zvar(n - 2)) +
           field_term(n, a * a * ab, zbar_var(n), zvar(n - 2)) - field_term(n, a, zbar_var(n), zvar(n));
  }
  if (which == FieldKind::Dprime) {
    if (n != 2) throw std::invalid_argument("lemma_d_rhs(D') requires n = 2");
    const WeylOp Dp = build_vector_field({FieldKind::Dprime}, n);
    // abar (z_1 - a zbar_2) d/dzbar_1 - a zbar_2 d/dz_2
    return Dp + field_term(n, ab, zvar(1), zbar_var(1)) - field_term(n, ab * a, zbar_var(2), zbar_var(1)) -
           field_term(n, a, zbar_var(2), zvar(2));
  }
  throw std::invalid_argument("lemma_d_rhs: only D and D' have a closed form");
}

CheckRecord verify_lemma_d(std::size_t n, FieldKind which) {
  CheckRecord rec;
  const bool prime = which == FieldKind::Dprime;
  rec.id = std::string("lemma-d.") + (prime ? "Dprime" : "D") + ".n" + std::to_string(n);
  rec.statement = prime ? "h_1(a).D' = D' + abar(z1 - a zb2) d/dzb1 - a zb2 d/dz2"
                        : "h_1(a).D = D + a(zb_{n-2} - abar z_{n-1} + |a|^2 zb_n) d/dz_{n-2} - a zb_n d/dz_n";
  rec.paper_ref = prime ? "claim:conjugated-field-n2" : "claim:conjugated-field";
  const WeylOp field = build_vector_field({which}, n);
  const Substitution s = substitution_from_group(HGenerator::shift(1, Scalar::param(1)).matrix(n), true);
  const WeylOp lhs = conjugate_op(field, s);
  const WeylOp rhs = lemma_d_rhs(n, which);
  const WeylOp diff = lhs - rhs;
  rec.status = status_of(diff.is_zero());
  rec.details = {{"n", n}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"difference", diff.to_string()}};
  return rec;
}

CheckRecord verify_invariance(const FamilySpec& spec, const InvarianceOptions& opts) {
  spec.validate();
  CheckRecord rec;
  rec.id = "invariance." + spec.label() + ".l" + std::to_string(spec.l);
  rec.statement = "g.T = T for all orders 0.." + std::to_string(spec.l) + " and all generators of H (" +
                  spec.label() + "); zero U(1)-weight, even, degree -lambda";
  rec.paper_ref = spec.family == FamilyKind::T2 ? "claim:H-invariance-n2" : "claim:H-invariance";

  const std::size_t n = spec.n;
  const AffineExponent want_degree = AffineExponent() - lambda_exponent(spec);
  const auto gens = generators(n);
  const auto composites = random_composites(n, opts.composites, opts.seed);

  bool ok = true;
  std::size_t actions = 0;
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json gradings = nlohmann::json::array();
  auto fail = [&](nlohmann::json f) {
    ok = false;
    if (failures.size() < 5) failures.push_back(std::move(f));
  };
  auto check_element = [&](const NamedElement& g, const DistExpr& T, unsigned order) {
    const Substitution s = substitution_from_group(g.g, true);
    std::vector<ActRoute> routes{ActRoute::automatic};
    if (opts.check_termwise) routes.push_back(ActRoute::termwise);
    for (ActRoute route : routes) {
      ++actions;
      const std::string route_name = route == ActRoute::automatic ? "factored" : "termwise";
      try {
        const DistExpr image = act_substitution(s, T, route);
        if (!(image == T)) {
          fail({{"element", g.name}, {"l", order}, {"route", route_name}, {"residual", residual_json(image, T)}});
        }
      } catch (const UnsupportedSubstitution& e) {
        fail({{"element", g.name}, {"l", order}, {"route", route_name}, {"error", e.what()}});
      }
    }
  };

  const WeylOp op = family_operator(spec);
  const DistExpr base = family_base(spec);
  DistExpr T = base.with_factored(op, 0, base);
  for (unsigned order = 0; order <= spec.l; ++order) {
    if (order > 0) T = apply_weyl(op, T);
    const auto weights = u1_weight(T);
    const bool weight_zero = std::all_of(weights.begin(), weights.end(), [](long w) { return w == 0; });
    const bool even = parity(T) == Parity::even;
    const auto deg = degree(T);
    const bool deg_ok = deg && *deg == want_degree;
    gradings.push_back({{"l", order},
                        {"terms", T.terms().size()},
                        {"u1_weight_zero", weight_zero},
                        {"parity", to_string(parity(T))},
                        {"degree", deg ? deg->to_string() : "inhomogeneous"}});
    if (!weight_zero || !even || !deg_ok || T.is_zero()) fail({{"l", order}, {"grading", gradings.back()}});
    for (const auto& g : gens) check_element(g, T, order);
  }
  for (const auto& g : composites) check_element(g, T, spec.l);

  rec.status = status_of(ok);
  rec.details = {{"family", spec.label()},
                 {"l_max", spec.l},
                 {"generators", gens.size()},
                 {"composites", composites.size()},
                 {"seed", opts.seed},
                 {"actions_checked", actions},
                 {"termwise_route", opts.check_termwise},
                 {"gradings", gradings},
                 {"normalization", "unnormalized: the 1/Gamma factor in lambda is omitted"}};
  if (!failures.empty()) rec.details["failures"] = failures;
  return rec;
}

CheckRecord verify_independence(const FamilySpec& spec, unsigned lmax) {
  spec.validate();
  CheckRecord rec;
  rec.id = "independence." + spec.label() + ".lmax" + std::to_string(lmax);
  rec.statement = "{" + to_string(spec.family) + "^l : l = 0.." + std::to_string(lmax) +
                  "} is linearly independent over Q(i)(lambda)";
  rec.paper_ref = spec.family == FamilyKind::T2 ? "claim:independence-n2" : "claim:independence";
  const WeylOp op = family_operator(spec);
  DistExpr cur = family_base(spec);
  std::vector<DistExpr> family{cur};
  for (unsigned l = 1; l <= lmax; ++l) {
    cur = apply_weyl(op, cur);
    family.push_back(cur);
  }
  const std::size_t rank = independence_rank(family);
  rec.status = status_of(rank == lmax + 1);
  rec.details = {{"family", spec.label()}, {"lmax", lmax}, {"rank", rank}, {"expected", lmax + 1}};
  return rec;
}

CheckRecord verify_support_filtration(std::size_t n, std::size_t j, unsigned lmax) {
  FamilySpec spec{n, FamilyKind::Tj, j, 0, std::nullopt};
  spec.validate();
  CheckRecord rec;
  rec.id = "support.n" + std::to_string(n) + ".j" + std::to_string(j) + ".lmax" + std::to_string(lmax);
  rec.statement = "T_{lambda," + std::to_string(j) + "}^l is supported on X_" + std::to_string(j) +
                  " for l = 0.." + std::to_string(lmax) + " and the family is independent";
  rec.paper_ref = "claim:support-filtration";

  std::vector<std::size_t> want;
  for (std::size_t k = j + 1; k <= n; ++k) want.push_back(k);
  const WeylOp op = family_operator(spec);
  DistExpr cur = family_base(spec);
  std::vector<DistExpr> family;
  bool support_ok = true;
  nlohmann::json supports = nlohmann::json::array();
  for (unsigned l = 0; l <= lmax; ++l) {
    if (l > 0) cur = apply_weyl(op, cur);
    family.push_back(cur);
    const SupportDescriptor d = formal_support(cur);
    const bool good = d.nonzero && d.delta_vars == want && d.stratum == j;
    support_ok = support_ok && good;
    supports.push_back({{"l", l},
                        {"delta_vars", d.delta_vars},
                        {"max_carrier", d.max_carrier ? nlohmann::json(*d.max_carrier) : nlohmann::json()},
                        {"stratum", d.stratum ? nlohmann::json(*d.stratum) : nlohmann::json()},
                        {"ok", good}});
  }
  const std::size_t rank = independence_rank(family);
  rec.status = status_of(support_ok && rank == lmax + 1);
  rec.details = {{"supports", supports},
                 {"rank", rank},
                 {"expected_rank", lmax + 1},
                 {"lambda_exclusion", "lambda in 2N + " + std::to_string(2 + 2 * n - 2 * j) + ", N = 0,1,2,..."},
                 {"lambda_exclusion_verified", false}};
  return rec;
}

std::vector<CheckRecord> theorem_main_report(std::size_t n, unsigned lmax, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("theorem_main_report requires n >= 2");
  std::vector<CheckRecord> out;

  CheckRecord c1 = orbit_census_check(n, samples, seed);
  c1.id = "theorem.condition-1.n" + std::to_string(n);
  c1.statement = "#(H\\G/Q) = n is finite";
  c1.paper_ref = "claim:main-theorem-condition-1";
  out.push_back(std::move(c1));

  CheckRecord c2;
  const bool small = n == 2;
  c2.id = std::string("theorem.condition-") + (small ? "2" : "2prime") + ".n" + std::to_string(n);
  c2.statement = small ? "dim Hom_G(C^inf(G/Q, chi_2), C^inf(G/H)) is infinite"
                       : "dim Hom_G(C^inf(G/Q, chi_lambda), C^inf(G/H)) is infinite for every lambda";
  c2.paper_ref = small ? "claim:main-theorem-condition-2" : "claim:main-theorem-condition-2prime";
  FamilySpec spec{n, small ? FamilyKind::T2 : FamilyKind::T, 0, std::min(lmax, 3U), std::nullopt};
  const CheckRecord inv = verify_invariance(spec, {4, seed, false});
  const CheckRecord ind = verify_independence(spec, lmax);
  c2.status = status_of(inv.passed() && ind.passed());
  c2.details = {{"invariance", inv.id},
                {"invariance_status", to_string(inv.status)},
                {"independence", ind.id},
                {"independence_status", to_string(ind.status)},
                {"rank", ind.details["rank"]},
                {"lambda", small ? "2" : "formal"}};
  if (small) {
    c2.details["note"] = "for lambda != 2 the invariant space is bounded by 2; that bound is not verified here";
  }
  out.push_back(std::move(c2));
  return out;
}

}  // namespace infmult
