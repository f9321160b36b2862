#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "qgevrey/json_io.hpp"

using namespace qgevrey;
using nlohmann::json;

TEST_SUITE("json_io") {

TEST_CASE("LogComplex round trip, including canonical zero") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> mag(-900.0, 900.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    const LogComplex a = lc_make(mag(rng), ang(rng));
    const LogComplex b = lc_from_json(lc_to_json(a));
    CHECK(a.log_mag == b.log_mag);
    CHECK(a.phase == b.phase);
  }
  const json z = lc_to_json(lc_zero());
  CHECK(z.at("log_mag").is_string());
  CHECK(lc_is_zero(lc_from_json(z)));
}

TEST_CASE("series round trip preserves every field") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> mag(-500.0, 500.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  FormalSeries u(17, 2);
  for (int p = 0; p < 17; ++p)
    for (int d = 0; d < 2; ++d)
      u.set(p, (p + d) % 5 == 0 ? lc_zero() : lc_make(mag(rng), ang(rng)), d);
  const FormalSeries v = series_from_json(series_to_json(u));
  REQUIRE(v.order() == u.order());
  REQUIRE(v.dim() == u.dim());
  for (int p = 0; p < 17; ++p)
    for (int d = 0; d < 2; ++d) {
      CHECK(u.at(p, d).log_mag == v.at(p, d).log_mag);
      CHECK(u.at(p, d).phase == v.at(p, d).phase);
    }
}

TEST_CASE("sequence round trip") {
  const PositiveSequence seq = make_q_factorial_inv(QBase(2.0), 40);
  const json j = sequence_to_json(seq, 2.0);
  const PositiveSequence back = sequence_from_json(j);
  CHECK(back.name() == seq.name());
  CHECK(sequence_q_from_json(j) == 2.0);
  REQUIRE(back.size() == seq.size());
  for (int p = 0; p < seq.size(); ++p) CHECK(back.log_at(p) == seq.log_at(p));
}

TEST_CASE("config round trip is the identity") {
  Config c;
  c.tol = 1e-9;
  c.residual_cap = 0.7;
  c.prefix = 200;
  const Config back = config_from_json(config_to_json(c));
  CHECK(back.tol == c.tol);
  CHECK(back.residual_cap == c.residual_cap);
  CHECK(back.tol_s == c.tol_s);
  CHECK(back.delta == c.delta);
  CHECK(back.alpha_cap == c.alpha_cap);
  CHECK(back.logA_cap == c.logA_cap);
  CHECK(back.sector_half_opening == c.sector_half_opening);
  CHECK(back.prefix == c.prefix);
}

TEST_CASE("config rejects non-positive tolerances") {
  json j = config_to_json(Config{});
  j["tol"] = -1.0;
  CHECK_THROWS_AS((void)config_from_json(j), std::invalid_argument);
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS(lc_from_json(json{{"log_mag", "+inf"}, {"phase", 0.0}}));
  json bad_series = json{{"dim", 1}, {"order", 3}, {"coeffs", json::array()}};
  CHECK_THROWS_AS((void)series_from_json(bad_series), std::invalid_argument);
  CHECK_THROWS_AS((void)samples_from_csv("abs_z,arg_z,re,im\nnot,a,number,row\n"),
                  std::invalid_argument);
}

TEST_CASE("sector CSV round trip of the sample geometry") {
  SectorialFunction f;
  f.gamma = std::numbers::pi;
  f.q = 2.0;
  f.s = 1.0;
  for (int i = 1; i <= 3; ++i) {
    SamplePoint sp;
    sp.z = SurfacePoint{std::log(0.01 * i), std::numbers::pi + 0.1 * i};
    sp.value = lc_from_real(1.0 + 0.1 * i);
    sp.quad.nodes = 10 * i;
    f.samples.push_back(sp);
  }
  const std::vector<SamplePoint> back = samples_from_csv(sectorial_to_csv(f));
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(back[i].z.log_mag == doctest::Approx(f.samples[i].z.log_mag).epsilon(1e-12));
    CHECK(back[i].z.arg == doctest::Approx(f.samples[i].z.arg).epsilon(1e-12));
    CHECK(std::exp(back[i].value.log_mag) ==
          doctest::Approx(std::exp(f.samples[i].value.log_mag)).epsilon(1e-12));
  }
}

}  // TEST_SUITE
