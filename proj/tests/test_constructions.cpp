#include <doctest.h>

#include "infmult/constructions.hpp"

using namespace infmult;

namespace {

WeylOp field_term(std::size_t n, std::size_t coeff_var, std::size_t deriv_var) {
  std::vector<int> mono(2 * n, 0), deriv(2 * n, 0);
  mono[coeff_var] = 1;
  deriv[deriv_var] = 1;
  return WeylOp::term(n, Scalar(1), mono, deriv);
}

const AffineExponent kMinusLambda(Rational(0), Rational(-1));

std::vector<FamilySpec> all_families(unsigned l) {
  std::vector<FamilySpec> out;
  for (std::size_t n = 3; n <= 4; ++n) {
    out.push_back({n, FamilyKind::T, 0, l, std::nullopt});
    out.push_back({n, FamilyKind::Tbar, 0, l, std::nullopt});
    for (std::size_t j = 2; j + 1 <= n; ++j) out.push_back({n, FamilyKind::Tj, j, l, std::nullopt});
  }
  out.push_back({2, FamilyKind::T2, 0, l, std::nullopt});
  return out;
}

}  // namespace

TEST_CASE("vector fields") {
  CHECK(build_vector_field({FieldKind::D}, 3) == field_term(3, zbar_var(1), zbar_var(2)) + field_term(3, zvar(2), zvar(3)));
  CHECK(build_vector_field({FieldKind::Dbar}, 3) == field_term(3, zvar(1), zvar(2)) + field_term(3, zbar_var(2), zbar_var(3)));
  CHECK(build_vector_field({FieldKind::Dprime}, 2) == field_term(2, zvar(1), zvar(2)));
  CHECK(build_vector_field({FieldKind::Dj, 2}, 4) == field_term(4, zbar_var(1), zbar_var(2)) + field_term(4, zvar(2), zvar(3)));
  CHECK(build_vector_field({FieldKind::Dj, 3}, 4) == build_vector_field({FieldKind::D}, 4));

  CHECK_THROWS_AS(build_vector_field({FieldKind::D}, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_vector_field({FieldKind::Dprime}, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_vector_field({FieldKind::Dj, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_vector_field({FieldKind::Dj, 4}, 4), std::invalid_argument);
}

TEST_CASE("family specs validate") {
  CHECK_NOTHROW(FamilySpec{3, FamilyKind::T, 0, 2, std::nullopt}.validate());
  CHECK_THROWS_AS((FamilySpec{2, FamilyKind::T, 0, 2, std::nullopt}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilySpec{3, FamilyKind::T2, 0, 2, std::nullopt}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilySpec{4, FamilyKind::Tj, 4, 2, std::nullopt}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilySpec{4, FamilyKind::Tj, 1, 2, std::nullopt}.validate()), std::invalid_argument);
  CHECK(FamilySpec{4, FamilyKind::Tj, 2, 1, std::nullopt}.label() != FamilySpec{4, FamilyKind::Tj, 3, 1, std::nullopt}.label());
}

TEST_CASE("family bases") {
  const AffineExponent sigma(Rational(1), make_rational(-1, 2));
  DistTerm t = DistTerm::unit(3);
  t.power(2, sigma).delta(3);
  CHECK(build_family({3, FamilyKind::T, 0, 0, std::nullopt}) == DistExpr(3, {t}));
  CHECK(build_family({3, FamilyKind::Tbar, 0, 0, std::nullopt}) == DistExpr(3, {t}));

  DistTerm tj = DistTerm::unit(4);
  tj.power(2, AffineExponent(Rational(2), make_rational(-1, 2))).delta(3).delta(4);
  CHECK(build_family({4, FamilyKind::Tj, 2, 0, std::nullopt}) == DistExpr(4, {tj}));

  DistTerm t2 = DistTerm::unit(2);
  t2.delta(2);
  CHECK(build_family({2, FamilyKind::T2, 0, 0, std::nullopt}) == DistExpr(2, {t2}));
}

TEST_CASE("T2 is (z1 d/dz2)^l delta(z2)") {
  for (unsigned l = 0; l <= 5; ++l) {
    DistTerm t = DistTerm::unit(2);
    t.monomial(1, static_cast<int>(l), 0).delta(2, static_cast<int>(l), 0);
    CHECK(build_family({2, FamilyKind::T2, 0, l, std::nullopt}) == DistExpr(2, {t}));
  }
}

TEST_CASE("specialized lambda") {
  const FamilySpec formal{3, FamilyKind::T, 0, 2, std::nullopt};
  const FamilySpec at3{3, FamilyKind::T, 0, 2, Rational(3)};
  CHECK(lambda_exponent(at3) == AffineExponent(Rational(3)));
  CHECK(degree(build_family(at3)) == AffineExponent(-3));
  const DistExpr e = build_family(formal);
  CHECK_FALSE(e == build_family(at3));
}

TEST_CASE("Tj(2), n = 4, l = 1 equals apply_weyl(D_2, base)") {
  const FamilySpec s{4, FamilyKind::Tj, 2, 1, std::nullopt};
  CHECK(build_family(s) == apply_weyl(build_vector_field({FieldKind::Dj, 2}, 4), family_base(s)));
}

TEST_CASE("factored-form consistency: build_family(l) = apply_weyl(op, build_family(l - 1))") {
  for (const FamilySpec& spec : all_families(0)) {
    DistExpr prev = build_family(spec);
    for (unsigned l = 1; l <= 4; ++l) {
      const DistExpr next = build_family(spec.with_order(l));
      CHECK(next == apply_weyl(family_operator(spec), prev));
      REQUIRE(next.factored() != nullptr);
      CHECK(expand(*next.factored()) == next);
      prev = next;
    }
  }
}

TEST_CASE("all families have degree -lambda and even parity") {
  for (unsigned l = 0; l <= 4; ++l) {
    for (const FamilySpec& spec : all_families(l)) {
      const DistExpr e = build_family(spec);
      CHECK_FALSE(e.is_zero());
      CHECK(parity(e) == Parity::even);
      if (spec.family == FamilyKind::T2) {
        CHECK(degree(e) == AffineExponent(-2));
      } else {
        CHECK(degree(e) == kMinusLambda);
      }
    }
  }
}

TEST_CASE("lemma D verification") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const CheckRecord r = verify_lemma_d(n, FieldKind::D);
    CHECK(r.passed());
    CHECK(r.id == "lemma-d.D.n" + std::to_string(n));
  }
  CHECK(verify_lemma_d(2, FieldKind::Dprime).passed());
}

TEST_CASE("invariance verification") {
  for (unsigned l = 0; l <= 3; ++l) CHECK(verify_invariance({3, FamilyKind::T, 0, l, std::nullopt}, {5, 1, true}).passed());
  CHECK(verify_invariance({3, FamilyKind::Tbar, 0, 3, std::nullopt}, {5, 2, true}).passed());
  CHECK(verify_invariance({2, FamilyKind::T2, 0, 4, std::nullopt}, {5, 3, true}).passed());
  CHECK(verify_invariance({4, FamilyKind::Tj, 2, 2, std::nullopt}, {5, 4, true}).passed());
  const CheckRecord r = verify_invariance({4, FamilyKind::Tj, 3, 2, std::nullopt}, {5, 5, true});
  CHECK(r.passed());
  CHECK(r.id == "invariance." + FamilySpec{4, FamilyKind::Tj, 3, 2, std::nullopt}.label() + ".l2");
}

TEST_CASE("independence verification") {
  CHECK(verify_independence({3, FamilyKind::T, 0, 0, std::nullopt}, 5).passed());
  CHECK(verify_independence({2, FamilyKind::T2, 0, 0, std::nullopt}, 5).passed());
  const DistExpr t0 = build_family({3, FamilyKind::T, 0, 0, std::nullopt});
  CHECK(independence_rank({t0, Scalar(2) * t0}) == 1);
}

TEST_CASE("support filtration") {
  const CheckRecord a = verify_support_filtration(4, 2, 3);
  CHECK(a.passed());
  CHECK(verify_support_filtration(3, 2, 3).passed());
  CHECK(verify_support_filtration(4, 3, 2).passed());
  const SupportDescriptor d = formal_support(build_family({4, FamilyKind::Tj, 3, 0, std::nullopt}));
  CHECK(d.delta_vars == std::vector<std::size_t>{4});
  CHECK(d.stratum == std::optional<std::size_t>(3));
  CHECK(build_family({4, FamilyKind::Tj, 3, 0, std::nullopt}).terms().size() == 1);
}

TEST_CASE("main theorem report") {
  for (std::size_t n : {2u, 3u}) {
    const auto records = theorem_main_report(n, 3, 10, 1);
    REQUIRE(records.size() == 2);
    for (const CheckRecord& r : records) {
      INFO(r.id);
      CHECK(r.passed());
    }
    CHECK(records[1].id == (n == 2 ? "theorem.condition-2.n2" : "theorem.condition-2prime.n3"));
  }
}
