#include "spinchain/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "spinchain/errors.hpp"

namespace spinchain {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

const char* to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Tangent:
      return "tangent";
    case PotentialKind::Parabolic:
      return "parabolic";
    case PotentialKind::Zero:
      return "zero";
  }
  return "?";
}

PotentialKind potential_from_string(const std::string& name) {
  if (name == "tangent") return PotentialKind::Tangent;
  if (name == "parabolic") return PotentialKind::Parabolic;
  if (name == "zero") return PotentialKind::Zero;
  throw ConfigError("unknown potential kind: " + name);
}

double derive_b0(double lambda, double j, double l_eff) {
  require_positive(lambda, "lambda");
  require_positive(j, "j_coupling");
  require_positive(l_eff, "l_eff");
  const double eta = 1.0 / l_eff;
  return 2.0 * lambda * j * kPi * kPi * eta * eta;
}

double lambda_from_b0(double b0, double j, double l_eff) {
  require_positive(b0, "b0");
  require_positive(j, "j_coupling");
  require_positive(l_eff, "l_eff");
  return b0 * l_eff * l_eff / (2.0 * j * kPi * kPi);
}

int default_half_length(double l_eff) {
  return static_cast<int>(std::ceil(l_eff / 2.0)) - 1;
}

ChainConfig ChainConfig::with_lambda(double lambda, double l_eff, double j,
                                     std::optional<int> n_half, PotentialKind kind) {
  ChainConfig c;
  c.j_coupling = j;
  c.lambda = lambda;
  c.l_eff = l_eff;
  c.b0 = derive_b0(lambda, j, l_eff);
  c.n_half = n_half.value_or(default_half_length(l_eff));
  c.potential = kind;
  c.validate();
  return c;
}

ChainConfig ChainConfig::with_b0(double b0, double l_eff, double j,
                                 std::optional<int> n_half, PotentialKind kind) {
  ChainConfig c;
  c.j_coupling = j;
  c.b0 = b0;
  c.l_eff = l_eff;
  c.lambda = lambda_from_b0(b0, j, l_eff);
  c.n_half = n_half.value_or(default_half_length(l_eff));
  c.potential = kind;
  c.validate();
  return c;
}

double ChainConfig::revival_time() const { return 2.0 * kPi / b0; }

void ChainConfig::validate() const {
  require_positive(j_coupling, "j_coupling");
  require_positive(lambda, "lambda");
  require_positive(b0, "b0");
  if (!(l_eff > 2.0)) {
    throw ConfigError("l_eff must exceed 2");
  }
  if (n_half < 1) {
    throw ConfigError("n_half must be at least 1");
  }
  const int n_max = default_half_length(l_eff);
  if (n_half > n_max) {
    std::ostringstream msg;
    msg << "n_half = " << n_half << " reaches the tangent-field singularity; "
        << "the largest admissible half-length for l_eff = " << l_eff << " is " << n_max;
    throw ConfigError(msg.str());
  }
  const double expected = derive_b0(lambda, j_coupling, l_eff);
  if (std::abs(b0 - expected) > 1e-12 * expected) {
    std::ostringstream msg;
    msg << "inconsistent field specification: b0 = " << b0 << " but 2 lambda J pi^2 eta^2 = "
        << expected;
    throw ConfigError(msg.str());
  }
}

std::string ChainConfig::fingerprint() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "j=%.17g;lambda=%.17g;b0=%.17g;l_eff=%.17g;n=%d;pot=%s",
                j_coupling, lambda, b0, l_eff, n_half, to_string(potential));
  // FNV-1a over the canonical parameter string.
  std::uint64_t h = 1469598103934665603ull;
  for (const char* p = buf; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 1099511628211ull;
  }
  char out[32];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace spinchain
