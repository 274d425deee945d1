#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "infmult/orbits.hpp"

using namespace infmult;

namespace {

GaussianRational gq(long re, long im = 0, long den = 1) { return {make_rational(re, den), make_rational(im, den)}; }

GaussianRational random_gq(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

ProjPoint point(std::vector<GaussianRational> c) { return ProjPoint{std::move(c)}; }

ProjPoint random_point_in_stratum(std::size_t n, std::size_t j, std::mt19937_64& rng) {
  ProjPoint p;
  p.coords.assign(n, GaussianRational());
  for (std::size_t k = 0; k < j; ++k) p.coords[k] = random_gq(rng);
  while (p.coords[j - 1] == GaussianRational()) p.coords[j - 1] = random_gq(rng);
  return p;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Tangent vectors listed by hand: v, i v, and c eps^k E^k v for c in {1, i}.
std::size_t tangent_rank_oracle(const ProjPoint& p) {
  const std::size_t n = p.dim();
  auto real_row = [](const std::vector<GaussianRational>& v) {
    std::vector<Rational> row;
    for (const auto& x : v) {
      row.push_back(x.re());
      row.push_back(x.im());
    }
    return row;
  };
  std::vector<std::vector<Rational>> rows;
  rows.push_back(real_row(p.coords));
  std::vector<GaussianRational> iv;
  for (const auto& x : p.coords) iv.push_back(GaussianRational::i() * x);
  rows.push_back(real_row(iv));
  for (std::size_t k = 1; k < n; ++k) {
    for (const GaussianRational& c : {GaussianRational(1), GaussianRational::i()}) {
      std::vector<GaussianRational> w(n);
      for (std::size_t m = 0; m + k < n; ++m) {
        const GaussianRational src = k % 2 == 1 ? p.coords[m + k].conj() : p.coords[m + k];
        w[m] = c * src;
      }
      rows.push_back(real_row(w));
    }
  }
  return rational_rank(rows) - 1;
}

std::vector<GaussianRational> apply_h(const REpsMatrix& h, const ProjPoint& p) {
  std::vector<Scalar> v;
  for (const auto& x : p.coords) v.push_back(Scalar(x));
  std::vector<GaussianRational> out;
  for (const Scalar& s : h.apply(v)) {
    auto c = s.constant_value();
    REQUIRE(c.has_value());
    out.push_back(*c);
  }
  return out;
}

const std::vector<GaussianRational> kUnitPhases{gq(1), gq(0, 1), gq(-1), gq(3, 4, 5), gq(5, -12, 13), gq(-8, 15, 17)};

}  // namespace

TEST_CASE("stratum examples") {
  CHECK(stratum_of(point({gq(1), gq(0), gq(0)})) == Stratum{1});
  CHECK(stratum_of(point({gq(5, 1), gq(2), gq(0)})) == Stratum{2});
  CHECK(stratum_of(point({gq(0), gq(0), gq(0, 1)})) == Stratum{3});
  CHECK(Stratum{3}.dimension() == 5);
  CHECK_THROWS_AS(stratum_of(point({gq(0), gq(0)})), std::invalid_argument);
}

TEST_CASE("orbit dimension examples") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(orbit_dimension(ProjPoint::basis(n, 1)) == 1);
    CHECK(orbit_dimension(ProjPoint::basis(n, n)) == 2 * n - 1);
  }
  CHECK(orbit_dimension(point({gq(1), gq(1), gq(0)})) == 3);
  CHECK_THROWS_AS(orbit_dimension(point({gq(0), gq(0), gq(0)})), std::invalid_argument);
}

TEST_CASE("orbit dimension agrees with the hand-listed tangent vectors and with 2j - 1") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (int s = 0; s < 10; ++s) {
        const ProjPoint p = random_point_in_stratum(n, j, rng);
        const std::size_t d = orbit_dimension(p);
        CHECK(d == tangent_rank_oracle(p));
        CHECK(d == 2 * j - 1);
      }
    }
  }
}

TEST_CASE("strata are H-invariant") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::size_t> dim(2, 5), phase(0, kUnitPhases.size() - 1);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = dim(rng);
    std::uniform_int_distribution<std::size_t> strat(1, n);
    const ProjPoint p = random_point_in_stratum(n, strat(rng), rng);
    REpsMatrix h = REpsMatrix::identity(n);
    std::uniform_int_distribution<int> word(1, 4);
    const int len = word(rng);
    for (int w = 0; w < len; ++w) {
      std::vector<Scalar> a;
      for (std::size_t k = 1; k < n; ++k) a.push_back(Scalar(random_gq(rng)));
      h = h * h_element(n, Scalar(kUnitPhases[phase(rng)]), a);
    }
    const ProjPoint q = point(apply_h(h, p));
    CHECK(stratum_of(q) == stratum_of(p));
  }
}

TEST_CASE("transitivity witness examples") {
  const ProjPoint p = point({gq(2, 1), gq(1, -3), gq(0)});
  const auto same = transitivity_witness(p, p);
  REQUIRE(same.has_value());
  CHECK(same->residual == doctest::Approx(0.0));

  const auto rot = transitivity_witness(point({gq(0), gq(1)}), point({gq(0), gq(0, 1)}));
  REQUIRE(rot.has_value());
  CHECK(rot->residual < 1e-9);
  CHECK(std::abs(rot->theta - M_PI / 2) < 1e-12);
  CHECK(rot->exact);

  CHECK_FALSE(transitivity_witness(point({gq(1), gq(0)}), point({gq(1), gq(1)})).has_value());
}

TEST_CASE("transitivity witnesses reach the target") {
  std::mt19937_64 rng(47);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (int s = 0; s < 10; ++s) {
        const ProjPoint p = random_point_in_stratum(n, j, rng), q = random_point_in_stratum(n, j, rng);
        const auto w = transitivity_witness(p, q);
        REQUIRE(w.has_value());
        CHECK(w->residual <= 1e-9);
        const auto image = apply_witness(*w, p);
        double err = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> target(q.coords[k].re().get_d(), q.coords[k].im().get_d());
          err = std::max(err, std::abs(image[k] - target));
        }
        CHECK(err <= 1e-9);
      }
    }
  }
}

TEST_CASE("orbit census") {
  const OrbitCensus c2 = enumerate_strata(2, 100, 7);
  CHECK(c2.ok());
  CHECK(c2.strata_count() == 2);
  CHECK(c2.dimensions == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}});

  const OrbitCensus c5 = enumerate_strata(5, 200, 7);
  CHECK(c5.ok());
  CHECK(c5.strata_count() == 5);
  CHECK(c5.dimensions == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 5}, {4, 7}, {5, 9}});
  CHECK(c5.max_residual <= 1e-9);
  CHECK(c5.cross_stratum_false_witnesses == 0);

  const OrbitCensus basis_only = enumerate_strata(4, 0, 1);
  CHECK(basis_only.strata_count() == 4);
  CHECK(orbit_census_check(3, 50, 3).passed());
  CHECK(enumerate_strata(3, 60, 11).to_json() == enumerate_strata(3, 60, 11).to_json());
}

TEST_CASE("zeta invariant examples") {
  CplxProjPoint p;
  p.coords = {{gq(1), gq(2)}, {gq(3, 1), gq(0)}, {gq(1), gq(0)}};
  CHECK(zeta_invariant(p) == gq(3, 1));
  CHECK(zeta_invariant(p.scaled(gq(2, -1))) == gq(3, 1));
  CplxProjPoint off = p;
  off.coords[2].second = gq(1);
  CHECK_FALSE(zeta_invariant(off).has_value());
  CplxProjPoint zero_last = p;
  zero_last.coords[2].first = gq(0);
  CHECK_FALSE(zeta_invariant(zero_last).has_value());
}

TEST_CASE("zeta is preserved by sampled H_C elements") {
  std::mt19937_64 rng(53);
  for (std::size_t n = 2; n <= 4; ++n) {
    CplxProjPoint p;
    for (std::size_t k = 0; k < n; ++k) p.coords.push_back({random_gq(rng), random_gq(rng)});
    p.coords[n - 1] = {gq(2, 1), gq(0)};
    p.coords[n - 2].first = gq(1, 3) * gq(2, 1);
    REQUIRE(zeta_invariant(p) == gq(1, 3));
    for (int s = 0; s < 50; ++s) {
      GaussianRational t = random_gq(rng), sc = random_gq(rng);
      if (t == GaussianRational()) t = gq(1);
      if (sc == GaussianRational()) sc = gq(1);
      std::vector<std::pair<Scalar, Scalar>> A;
      for (std::size_t k = 1; k < n; ++k) A.push_back({Scalar(random_gq(rng)), Scalar(random_gq(rng))});
      const CplxProjPoint q = act(hc_element(n, Scalar(t), Scalar(sc), A), p);
      CHECK(zeta_invariant(q) == gq(1, 3));
    }
  }
}

TEST_CASE("complex orbit check") {
  const std::vector<GaussianRational> five{gq(0), gq(1), gq(0, 1), gq(2), gq(3, 1)};
  const CheckRecord r = complex_orbit_check(3, five, 10, 1);
  CHECK(r.passed());
  const auto zetas = default_zetas(100);
  CHECK(std::set<GaussianRational>(zetas.begin(), zetas.end()).size() == 100);
  CHECK(complex_orbit_check(4, zetas, 3, 2).passed());
  CHECK_FALSE(complex_orbit_check(3, {gq(1), gq(1)}, 3, 1).passed());
}
