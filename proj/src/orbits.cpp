#include "infmult/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace infmult {

namespace {

using cd = std::complex<double>;

cd to_complex(const GaussianRational& g) { return {g.re().get_d(), g.im().get_d()}; }

// eps^k acts as conjugation for odd k.
cd eps_act(unsigned k, const cd& z) { return k % 2 ? std::conj(z) : z; }
GaussianRational eps_act(unsigned k, const GaussianRational& z) { return k % 2 ? z.conj() : z; }

GaussianRational random_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

GaussianRational random_nonzero_gaussian(std::mt19937_64& rng) {
  GaussianRational g;
  do {
    g = random_gaussian(rng);
  } while (g.is_zero());
  return g;
}

ProjPoint random_point_in_stratum(std::size_t n, std::size_t j, std::mt19937_64& rng) {
  ProjPoint p;
  p.coords.assign(n, GaussianRational());
  for (std::size_t k = 1; k < j; ++k) p.coords[k - 1] = random_gaussian(rng);
  p.coords[j - 1] = random_nonzero_gaussian(rng);
  return p;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(num), rd = sqrt(den);
  return Rational(rn, rd);
}

}  // namespace

void ProjPoint::validate() const {
  if (coords.empty() || std::all_of(coords.begin(), coords.end(), [](const auto& c) { return c.is_zero(); })) {
    throw std::invalid_argument("projective point must have a nonzero coordinate");
  }
}

ProjPoint ProjPoint::basis(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw std::invalid_argument("basis index out of range");
  ProjPoint p;
  p.coords.assign(n, GaussianRational());
  p.coords[j - 1] = GaussianRational(1);
  return p;
}

Stratum stratum_of(const ProjPoint& p) {
  p.validate();
  std::size_t j = p.dim();
  while (p.coords[j - 1].is_zero()) --j;
  return {j};
}

std::size_t orbit_dimension(const ProjPoint& p) {
  p.validate();
  const std::size_t n = p.dim();
  const auto& v = p.coords;
  std::vector<std::vector<GaussianRational>> vectors;
  vectors.push_back(v);
  std::vector<GaussianRational> iv(n);
  for (std::size_t m = 0; m < n; ++m) iv[m] = GaussianRational::i() * v[m];
  vectors.push_back(iv);
  for (unsigned k = 1; k < n; ++k) {
    for (const GaussianRational& c : {GaussianRational(1), GaussianRational::i()}) {
      std::vector<GaussianRational> x(n);
      for (std::size_t m = 0; m + k < n; ++m) x[m] = c * eps_act(k, v[m + k]);
      vectors.push_back(x);
    }
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& x : vectors) {
    std::vector<Scalar> row;
    for (const auto& c : x) {
      row.emplace_back(c.re());
      row.emplace_back(c.im());
    }
    rows.push_back(std::move(row));
  }
  return rank_over_function_field(rows) - 1;
}

std::optional<TransitivityWitness> transitivity_witness(const ProjPoint& p, const ProjPoint& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("points of different dimension");
  const std::size_t j = stratum_of(p).j;
  if (stratum_of(q).j != j) return std::nullopt;
  const std::size_t n = p.dim();

  TransitivityWitness w;
  w.a.assign(n - 1, cd(0.0, 0.0));
  const GaussianRational ratio = q.coords[j - 1] / p.coords[j - 1];
  if (auto r = rational_sqrt(ratio.norm())) {
    // Exact route: phase = ratio / r is a Gaussian-rational unit.
    const GaussianRational phase = ratio / GaussianRational(*r);
    std::vector<GaussianRational> a(n - 1);
    for (std::size_t m = j - 1; m >= 1; --m) {
      const unsigned k = static_cast<unsigned>(j - m);
      GaussianRational rhs = q.coords[m - 1] / GaussianRational(*r) - phase * p.coords[m - 1];
      for (unsigned kk = 1; kk < k; ++kk) rhs -= a[kk - 1] * eps_act(kk, p.coords[m - 1 + kk]);
      a[k - 1] = rhs / eps_act(k, p.coords[j - 1]);
    }
    bool exact_ok = true;
    for (std::size_t m = 1; m <= n; ++m) {
      GaussianRational image = phase * p.coords[m - 1];
      for (unsigned k = 1; m + k <= n; ++k) image += a[k - 1] * eps_act(k, p.coords[m - 1 + k]);
      exact_ok = exact_ok && GaussianRational(*r) * image == q.coords[m - 1];
    }
    if (exact_ok) {
      w.exact = true;
      w.exact_phase = phase;
      w.exact_a = a;
      w.r = r->get_d();
      w.theta = std::arg(to_complex(phase));
      for (std::size_t k = 0; k + 1 < n; ++k) w.a[k] = to_complex(a[k]);
    }
  }
  if (!w.exact) {
    const cd ratio_f = to_complex(q.coords[j - 1]) / to_complex(p.coords[j - 1]);
    w.r = std::abs(ratio_f);
    const cd phase = ratio_f / w.r;
    w.theta = std::arg(phase);
    for (std::size_t m = j - 1; m >= 1; --m) {
      const unsigned k = static_cast<unsigned>(j - m);
      cd rhs = to_complex(q.coords[m - 1]) / w.r - phase * to_complex(p.coords[m - 1]);
      for (unsigned kk = 1; kk < k; ++kk) rhs -= w.a[kk - 1] * eps_act(kk, to_complex(p.coords[m - 1 + kk]));
      w.a[k - 1] = rhs / eps_act(k, to_complex(p.coords[j - 1]));
    }
  }
  const auto image = apply_witness(w, p);
  double residual = 0.0;
  for (std::size_t m = 0; m < n; ++m) residual += std::norm(image[m] - to_complex(q.coords[m]));
  w.residual = std::sqrt(residual);
  return w;
}

std::vector<cd> apply_witness(const TransitivityWitness& w, const ProjPoint& p) {
  const std::size_t n = p.dim();
  const cd phase = std::polar(1.0, w.theta);
  std::vector<cd> out(n);
  for (std::size_t m = 1; m <= n; ++m) {
    cd image = phase * to_complex(p.coords[m - 1]);
    for (unsigned k = 1; m + k <= n; ++k) image += w.a[k - 1] * eps_act(k, to_complex(p.coords[m - 1 + k]));
    out[m - 1] = w.r * image;
  }
  return out;
}

bool OrbitCensus::ok() const {
  if (strata_count() != n) return false;
  for (const auto& [j, d] : dimensions) {
    if (d != 2 * j - 1) return false;
  }
  return dimension_mismatches == 0 && witness_failures == 0 && cross_stratum_false_witnesses == 0 &&
         max_residual <= 1e-9;
}

nlohmann::json OrbitCensus::to_json() const {
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& [j, count] : bucket_sizes) {
    strata.push_back({{"j", j}, {"points", count}, {"dimension", dimensions.count(j) ? dimensions.at(j) : 0}});
  }
  return {{"n", n},
          {"samples", samples},
          {"seed", seed},
          {"strata", strata},
          {"strata_count", strata_count()},
          {"dimension_mismatches", dimension_mismatches},
          {"same_stratum_pairs", same_stratum_pairs},
          {"witness_failures", witness_failures},
          {"exact_witnesses", exact_witnesses},
          {"cross_stratum_pairs", cross_stratum_pairs},
          {"cross_stratum_false_witnesses", cross_stratum_false_witnesses},
          {"max_residual", max_residual}};
}

OrbitCensus enumerate_strata(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t pairs_per_stratum) {
  if (n < 2) throw std::invalid_argument("enumerate_strata requires n >= 2");
  OrbitCensus census;
  census.n = n;
  census.samples = samples;
  census.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_stratum(1, n);

  std::map<std::size_t, std::vector<ProjPoint>> buckets;
  for (std::size_t j = 1; j <= n; ++j) buckets[j].push_back(ProjPoint::basis(n, j));
  for (std::size_t s = 0; s < samples; ++s) {
    ProjPoint p = random_point_in_stratum(n, pick_stratum(rng), rng);
    buckets[stratum_of(p).j].push_back(std::move(p));
  }

  for (const auto& [j, points] : buckets) {
    census.bucket_sizes[j] = points.size();
    for (const ProjPoint& p : points) {
      const std::size_t d = orbit_dimension(p);
      if (d != 2 * j - 1) ++census.dimension_mismatches;
      census.dimensions.try_emplace(j, d);
    }
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (std::size_t t = 0; t < pairs_per_stratum; ++t) {
      const ProjPoint& p = points[pick(rng)];
      const ProjPoint& q = points[pick(rng)];
      ++census.same_stratum_pairs;
      auto w = transitivity_witness(p, q);
      if (!w || w->residual > 1e-9) {
        ++census.witness_failures;
      } else {
        census.max_residual = std::max(census.max_residual, w->residual);
        if (w->exact) ++census.exact_witnesses;
      }
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (j == k) continue;
      ++census.cross_stratum_pairs;
      if (transitivity_witness(buckets[j].back(), buckets[k].front())) ++census.cross_stratum_false_witnesses;
    }
  }
  return census;
}

CheckRecord orbit_census_check(std::size_t n, std::size_t samples, std::uint64_t seed) {
  CheckRecord rec;
  rec.id = "orbits.census.n" + std::to_string(n);
  rec.statement = "H has exactly n orbits on RP^(2n-1), the j-th of dimension 2j-1, each acted on transitively";
  rec.paper_ref = "claim:finite-orbits";
  const OrbitCensus census = enumerate_strata(n, samples, seed);
  rec.status = status_of(census.ok());
  rec.details = census.to_json();
  return rec;
}

// ---------------------------------------------------------------------------
// complexified orbits

void CplxProjPoint::validate() const {
  if (coords.empty() || std::all_of(coords.begin(), coords.end(), [](const auto& c) {
        return c.first.is_zero() && c.second.is_zero();
      })) {
    throw std::invalid_argument("complex projective point must have a nonzero coordinate");
  }
}

CplxProjPoint CplxProjPoint::scaled(const GaussianRational& c) const {
  CplxProjPoint out = *this;
  for (auto& [z, w] : out.coords) {
    z = c * z;
    w = c.conj() * w;
  }
  return out;
}

std::optional<GaussianRational> zeta_invariant(const CplxProjPoint& p) {
  p.validate();
  const std::size_t n = p.dim();
  if (n < 2) return std::nullopt;
  const auto& [zn, wn] = p.coords[n - 1];
  if (!wn.is_zero() || zn.is_zero()) return std::nullopt;
  return p.coords[n - 2].first / zn;
}

CplxProjPoint act(const CplxPairMatrix& h, const CplxProjPoint& p) {
  std::vector<CplxPair> v;
  for (const auto& [z, w] : p.coords) v.push_back({Scalar(z), Scalar(w)});
  const auto image = h.apply(v);
  CplxProjPoint out;
  for (const auto& c : image) {
    auto z = c.z.constant_value();
    auto w = c.w.constant_value();
    if (!z || !w) throw std::invalid_argument("act: element of H_C must have Gaussian-rational entries");
    out.coords.emplace_back(*z, *w);
  }
  return out;
}

std::vector<GaussianRational> default_zetas(std::size_t count) {
  std::vector<GaussianRational> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.emplace_back(make_rational(static_cast<long>(k), 7), make_rational(static_cast<long>(k % 5) - 2, 3));
  }
  return out;
}

CheckRecord complex_orbit_check(std::size_t n, const std::vector<GaussianRational>& zetas, std::size_t samples,
                                std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("complex_orbit_check requires n >= 2");
  CheckRecord rec;
  rec.id = "complex-orbits.zeta.n" + std::to_string(n);
  rec.statement = "zeta = z_{n-1}/z_n is constant on H_C-orbits in the locus w_n = 0, so distinct zeta give distinct orbits";
  rec.paper_ref = "claim:complex-orbits-infinite";

  // Symbolic: generic point of Y^zeta and generic element of H_C (all entries formal).
  int next = 1;
  auto fresh = [&] { return Scalar::param(next++); };
  const Scalar zeta = fresh();
  std::vector<CplxPair> point(n);
  for (std::size_t k = 0; k + 2 < n; ++k) point[k] = {fresh(), fresh()};
  const Scalar zn = fresh();
  point[n - 2] = {zeta * zn, fresh()};
  point[n - 1] = {zn, Scalar()};
  const Scalar t = fresh(), s = fresh();
  std::vector<std::pair<Scalar, Scalar>> A;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar a = fresh();
    A.emplace_back(a, fresh());
  }
  const auto image = hc_element(n, t, s, A).apply(point);
  const bool locus_kept = image[n - 1].w.is_zero();
  const bool zeta_kept = (image[n - 2].z - zeta * image[n - 1].z).is_zero();
  const bool symbolic_ok = locus_kept && zeta_kept;

  // Sampled: rational points and rational elements.
  std::mt19937_64 rng(seed);
  std::size_t images_checked = 0, image_failures = 0, scaling_failures = 0;
  std::set<std::pair<Rational, Rational>> labels;
  std::size_t label_mismatch = 0;
  for (const GaussianRational& z : zetas) {
    CplxProjPoint p;
    for (std::size_t k = 0; k + 2 < n; ++k) p.coords.emplace_back(random_gaussian(rng), random_gaussian(rng));
    const GaussianRational zlast = random_nonzero_gaussian(rng);
    p.coords.emplace_back(z * zlast, random_gaussian(rng));
    p.coords.emplace_back(zlast, GaussianRational());
    const auto label = zeta_invariant(p);
    if (!label || !(*label == z)) ++label_mismatch;
    if (label) labels.emplace(label->re(), label->im());
    if (!(zeta_invariant(p.scaled(random_nonzero_gaussian(rng))) == label)) ++scaling_failures;
    for (std::size_t i = 0; i < samples; ++i) {
      std::vector<std::pair<Scalar, Scalar>> coeffs;
      for (std::size_t k = 1; k < n; ++k) coeffs.emplace_back(Scalar(random_gaussian(rng)), Scalar(random_gaussian(rng)));
      const auto h = hc_element(n, Scalar(random_nonzero_gaussian(rng)), Scalar(random_nonzero_gaussian(rng)), coeffs);
      ++images_checked;
      if (!(zeta_invariant(act(h, p)) == label)) ++image_failures;
    }
  }
  const bool distinct = labels.size() == zetas.size();
  rec.status = status_of(symbolic_ok && image_failures == 0 && scaling_failures == 0 && label_mismatch == 0 && distinct);
  rec.details = {{"symbolic_locus_kept", locus_kept},
                 {"symbolic_zeta_kept", zeta_kept},
                 {"zeta_values", zetas.size()},
                 {"distinct_labels", labels.size()},
                 {"label_mismatches", label_mismatch},
                 {"images_checked", images_checked},
                 {"image_failures", image_failures},
                 {"scaling_failures", scaling_failures},
                 {"seed", seed}};
  return rec;
}

}  // namespace infmult
