#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinchain/config.hpp"
#include "spinchain/errors.hpp"

using namespace spinchain;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("derive_b0 matches the closed form 2 lambda J pi^2 / L_eff^2") {
  const double b0 = derive_b0(1.0, 1.0, 500.0);
  const double expected = 2.0 * kPi * kPi / (500.0 * 500.0);
  CHECK(b0 == doctest::Approx(expected).epsilon(1e-14));
  CHECK(b0 == doctest::Approx(7.895683520871486e-05).epsilon(1e-12));
  // two significant digits: 7.9e-5
  CHECK(std::abs(b0 * 1e5 - 7.9) < 0.05);
}

TEST_CASE("derive_b0 is linear in lambda down to the zero-field limit") {
  const double unit = derive_b0(1.0, 1.0, 500.0);
  CHECK(derive_b0(1e-12, 1.0, 500.0) == doctest::Approx(1e-12 * unit).epsilon(1e-12));
}

TEST_CASE("lambda_from_b0 inverts the field relation") {
  const double lambda = lambda_from_b0(6.33, 1.0, 500.0);
  CHECK(lambda == doctest::Approx(80170.38655699977).epsilon(1e-12));
  // round trip
  CHECK(derive_b0(lambda, 1.0, 500.0) == doctest::Approx(6.33).epsilon(1e-14));
}

TEST_CASE("non-positive field parameters are rejected") {
  CHECK_THROWS_AS(derive_b0(0.0, 1.0, 500.0), ConfigError);
  CHECK_THROWS_AS(derive_b0(1.0, -1.0, 500.0), ConfigError);
  CHECK_THROWS_AS(derive_b0(1.0, 1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(lambda_from_b0(-6.33, 1.0, 500.0), ConfigError);
}

TEST_CASE("default half-length stops short of the field singularity") {
  CHECK(default_half_length(500.0) == 249);
  CHECK(default_half_length(8.0) == 3);
  CHECK(default_half_length(7.0) == 3);  // ceil(3.5) - 1

  const ChainConfig c = ChainConfig::with_lambda(1.0, 500.0);
  CHECK(c.n_half == 249);
  CHECK(c.site_count() == 499);
  CHECK(c.b0 == doctest::Approx(7.895683520871486e-05).epsilon(1e-12));
}

TEST_CASE("config invariants") {
  CHECK_THROWS_AS(ChainConfig::with_lambda(1.0, 500.0, 1.0, 250), ConfigError);
  CHECK_THROWS_AS(ChainConfig::with_lambda(1.0, 500.0, 1.0, 0), ConfigError);
  CHECK_THROWS_AS(ChainConfig::with_lambda(1.0, 1.5), ConfigError);  // l_eff <= 2

  // inconsistent simultaneous specification
  ChainConfig bad = ChainConfig::with_lambda(1.0, 500.0);
  bad.b0 *= 1.0 + 1e-6;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  // a consistent pair passes
  ChainConfig good = ChainConfig::with_lambda(1.0, 500.0);
  CHECK_NOTHROW(good.validate());
}

TEST_CASE("with_b0 derives lambda") {
  const ChainConfig c = ChainConfig::with_b0(6.33, 500.0);
  CHECK(c.lambda == doctest::Approx(80170.38655699977).epsilon(1e-12));
  CHECK(c.b0 == 6.33);
}

TEST_CASE("revival time is 2 pi / B0") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 500.0);
  CHECK(c.revival_time() == doctest::Approx(2.0 * kPi / c.b0).epsilon(1e-15));
  CHECK(c.revival_time() == doctest::Approx(7.957747154594767e4).epsilon(1e-12));
}

TEST_CASE("fingerprint distinguishes configs and is stable") {
  const ChainConfig a = ChainConfig::with_lambda(1.0, 500.0);
  const ChainConfig b = ChainConfig::with_lambda(1.0, 500.0);
  const ChainConfig c = ChainConfig::with_lambda(1.05, 500.0);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("potential kind names round-trip") {
  for (const auto kind :
       {PotentialKind::Tangent, PotentialKind::Parabolic, PotentialKind::Zero}) {
    CHECK(potential_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(potential_from_string("cosine"), ConfigError);
}
