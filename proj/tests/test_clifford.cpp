#include <doctest.h>

#include <random>

#include "infmult/clifford.hpp"
#include "infmult/matrix.hpp"

using namespace infmult;

namespace {

GaussianRational gq(long re, long im = 0, long den = 1) { return {make_rational(re, den), make_rational(im, den)}; }

GaussianRational random_gq(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

REpsElement random_element(std::mt19937_64& rng) { return {Scalar(random_gq(rng)), Scalar(random_gq(rng))}; }

// Real 2x2 matrix of z -> a z + b zbar computed from the images of 1 and i.
ScalarMatrix block_oracle(const GaussianRational& a, const GaussianRational& b) {
  auto image = [&](const GaussianRational& z) { return a * z + b * z.conj(); };
  const GaussianRational e1 = image(GaussianRational(1)), e2 = image(GaussianRational::i());
  ScalarMatrix m(2, 2);
  m(0, 0) = Scalar(e1.re());
  m(1, 0) = Scalar(e1.im());
  m(0, 1) = Scalar(e2.re());
  m(1, 1) = Scalar(e2.im());
  return m;
}

}  // namespace

TEST_CASE("R_eps relations") {
  const REpsElement e = REpsElement::eps(), i = REpsElement::i(), one = REpsElement::one();
  CHECK(e * e == one);
  CHECK(i * i == -one);
  CHECK(i * e == -(e * i));
  CHECK(clifford_relations_check().passed());
}

TEST_CASE("reps_mul worked example") {
  const REpsElement x{Scalar(1), Scalar(2)};
  const REpsElement y{Scalar::i(), Scalar()};
  CHECK(x * y == REpsElement(Scalar::i(), Scalar(gq(0, -2))));
}

TEST_CASE("reps_mul is associative and matches composition of the actions") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 100; ++s) {
    const REpsElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK((x * y) * z == x * (y * z));
    const ScalarPair v = ScalarPair::of(Scalar(random_gq(rng)));
    CHECK(reps_act(x * y, v) == reps_act(x, reps_act(y, v)));
  }
}

TEST_CASE("reps_act examples") {
  const ScalarPair z = ScalarPair::of(Scalar::param(1));
  CHECK(reps_act(REpsElement::one(), z) == z);
  CHECK(reps_act(REpsElement::eps(), ScalarPair::of(Scalar(gq(2, 3)))).z == Scalar(gq(2, -3)));
  CHECK(reps_act(REpsElement::i(), z).z == Scalar::i() * Scalar::param(1));
}

TEST_CASE("iota examples") {
  REpsMatrix i1(1), e1(1);
  i1(0, 0) = REpsElement::i();
  e1(0, 0) = REpsElement::eps();
  ScalarMatrix want_i(2, 2), want_e(2, 2);
  want_i(0, 1) = Scalar(-1);
  want_i(1, 0) = Scalar(1);
  want_e(0, 0) = Scalar(1);
  want_e(1, 1) = Scalar(-1);
  CHECK(iota(i1) == want_i);
  CHECK(iota(e1) == want_e);
}

TEST_CASE("iota blocks agree with the real-linear-map oracle") {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 50; ++s) {
    const GaussianRational a = random_gq(rng), b = random_gq(rng);
    REpsMatrix m(1);
    m(0, 0) = {Scalar(a), Scalar(b)};
    CHECK(iota(m) == block_oracle(a, b));
  }
}

TEST_CASE("iota is multiplicative on random samples, n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CheckRecord r = iota_multiplicativity_check(n, 25, 100 + n);
    CHECK(r.passed());
  }
}

TEST_CASE("iota of 1, i, eps, i eps is linearly independent (R_eps ~ M_2(R))") {
  std::vector<std::vector<Scalar>> rows;
  for (const REpsElement& x : {REpsElement::one(), REpsElement::i(), REpsElement::eps(), REpsElement::i() * REpsElement::eps()}) {
    REpsMatrix m(1);
    m(0, 0) = x;
    const ScalarMatrix im = iota(m);
    rows.push_back({im(0, 0), im(0, 1), im(1, 0), im(1, 1)});
  }
  CHECK(rank_over_function_field(rows) == 4);
}

TEST_CASE("iota is injective on sampled differences") {
  std::mt19937_64 rng(21);
  for (int s = 0; s < 30; ++s) {
    REpsMatrix x(2), y(2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        x(r, c) = random_element(rng);
        y(r, c) = random_element(rng);
      }
    }
    if (x == y) continue;
    CHECK_FALSE(iota(x) == iota(y));
  }
}

TEST_CASE("iota rejects symbols outside the sanctioned pattern") {
  REpsMatrix m(2);
  m(0, 1) = REpsElement(Scalar::param(1));
  CHECK_THROWS_AS(iota(m), std::invalid_argument);
  REpsMatrix l(1);
  l(0, 0) = REpsElement(Scalar::lambda());
  CHECK_THROWS_AS(iota(l), std::invalid_argument);
  REpsMatrix off(2);
  off(0, 1) = REpsElement(Scalar::unit());
  CHECK_THROWS_AS(iota(off), std::invalid_argument);
  CHECK_NOTHROW(iota(HGenerator::phase(2).matrix(3)));
}

TEST_CASE("det(iota(g)) = 1 for generators") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const CheckRecord r = h_det_check(n);
    CHECK(r.passed());
    INFO(r.details.dump());
  }
  CHECK(determinant(iota_formal(HGenerator::shift(1, Scalar::param(1)).matrix(2))) == Scalar(1));
}

TEST_CASE("det is not identically 1 off H (control)") {
  REpsMatrix m = REpsMatrix::identity(2);
  m(0, 0) = REpsElement(Scalar(2));
  CHECK_FALSE(determinant(iota(m)) == Scalar(1));
}

TEST_CASE("closure of H") {
  CHECK(h_closure_check(3, 50, 4).passed());
  CHECK(h_closure_check(4, 50, 5).passed());
  const Scalar a = Scalar::param(1), b = Scalar::param(2);
  const REpsMatrix p = HGenerator::shift(1, a).matrix(3) * HGenerator::shift(1, b).matrix(3);
  CHECK(has_h_shape(p));
  CHECK(p(0, 2) == REpsElement(a * b.conj()));
  CHECK(p(0, 1) == REpsElement(Scalar(), a + b));
  const REpsMatrix q = HGenerator::shift(1, a).matrix(4) * HGenerator::shift(2, b).matrix(4);
  CHECK(has_h_shape(q));
  CHECK(q(0, 3) == REpsElement(Scalar(), a * b.conj()));
  CHECK(HGenerator::phase(1).matrix(3) * HGenerator::phase(2).matrix(3) == HGenerator::phase(3).matrix(3));
  REpsMatrix lower = REpsMatrix::identity(2);
  lower(1, 0) = REpsElement(Scalar(1));
  CHECK_FALSE(has_h_shape(lower));
}

TEST_CASE("group inverse") {
  CHECK(group_inverse(REpsMatrix::identity(3)) == REpsMatrix::identity(3));
  const Scalar a = Scalar::param(1);
  REpsMatrix want2 = REpsMatrix::identity(2);
  want2(0, 1) = REpsElement(Scalar(), -a);
  CHECK(group_inverse(HGenerator::shift(1, a).matrix(2)) == want2);
  REpsMatrix want3 = REpsMatrix::identity(3);
  want3(0, 1) = want3(1, 2) = REpsElement(Scalar(), -a);
  want3(0, 2) = REpsElement(a * a.conj());
  CHECK(group_inverse(HGenerator::shift(1, a).matrix(3)) == want3);

  std::vector<Scalar> params{Scalar::param(1), Scalar::param(2), Scalar::param(3)};
  const REpsMatrix g = h_element(4, Scalar::unit(1), params);
  CHECK(g * group_inverse(g) == REpsMatrix::identity(4));
  CHECK(group_inverse(g) * g == REpsMatrix::identity(4));

  REpsMatrix bad = REpsMatrix::identity(2);
  bad(1, 0) = REpsElement(Scalar(1));
  CHECK_THROWS_AS(group_inverse(bad), std::invalid_argument);
  REpsMatrix scaled = REpsMatrix::identity(2);
  scaled(0, 0) = REpsElement(Scalar(2));
  CHECK_THROWS_AS(group_inverse(scaled), std::invalid_argument);
}

TEST_CASE("complexified algebra") {
  const CplxPairElement one = CplxPairElement::one(), eps = CplxPairElement::eps();
  const CplxPairElement x{Scalar(gq(1, 1)), Scalar(gq(2)), Scalar(gq(0, 3)), Scalar(gq(-1))};
  CHECK(one * x == x);
  CHECK(eps * eps == one);
  const CplxPairElement p{Scalar(2), Scalar(3), Scalar(), Scalar()};
  const CplxPairElement q{Scalar(5), Scalar(7), Scalar(), Scalar()};
  CHECK(p * q == CplxPairElement{Scalar(10), Scalar(21), Scalar(), Scalar()});

  const CplxPair v{Scalar::param(1), Scalar::param(2)};
  CHECK(cplx_act(one, v) == v);
  CHECK(cplx_act(eps, v) == CplxPair{Scalar::param_conj(2), Scalar::param_conj(1)});
  CHECK(cplx_act(p, v) == CplxPair{Scalar(2) * Scalar::param(1), Scalar(3) * Scalar::param(2)});
}

TEST_CASE("complexified action is a representation") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 100; ++s) {
    const CplxPairElement x{Scalar(random_gq(rng)), Scalar(random_gq(rng)), Scalar(random_gq(rng)),
                            Scalar(random_gq(rng))};
    const CplxPairElement y{Scalar(random_gq(rng)), Scalar(random_gq(rng)), Scalar(random_gq(rng)),
                            Scalar(random_gq(rng))};
    const CplxPair v{Scalar(random_gq(rng)), Scalar(random_gq(rng))};
    CHECK(cplx_act(x * y, v) == cplx_act(x, cplx_act(y, v)));
  }
}
