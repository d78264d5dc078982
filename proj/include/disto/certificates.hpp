#pragma once

// Certificate verification and the distortion ratio series
// |f^n| <= tokens(n), ratio = tokens/power, with its running-minimum
// envelope (the liminf surrogate: never extrapolated past the window).

#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "disto/bigint.hpp"
#include "disto/oracle.hpp"

namespace disto {

struct UnverifiedCertificate : std::runtime_error {
  explicit UnverifiedCertificate(const std::string& what) : std::runtime_error(what) {}
};

// True iff the word evaluates to exactly the element named by target_key.
// False is an answer, not an error.
template <GroupOracle O>
bool verify_certificate(const O& oracle, const Certificate& cert) {
  return oracle.canonical_key(eval_word(oracle, cert.word)) == cert.target_key;
}

struct DistortionRow {
  BigInt power;
  std::size_t tokens = 0;
  double ratio = 0.0;
  double envelope = 0.0;
};

// cert_gen(index) produces the certificate for the index-th power in the
// family; every certificate is re-verified against the oracle before its
// ratio is admitted to the series.
template <GroupOracle O>
std::vector<DistortionRow> distortion_series(const O& oracle,
                                             const std::function<Certificate(int)>& cert_gen,
                                             const std::vector<int>& indices) {
  std::vector<DistortionRow> rows;
  double env = std::numeric_limits<double>::infinity();
  for (int n : indices) {
    Certificate cert = cert_gen(n);
    if (!verify_certificate(oracle, cert))
      throw UnverifiedCertificate("distortion_series: certificate at index " +
                                  std::to_string(n) + " does not verify");
    DistortionRow row;
    row.power = cert.power;
    row.tokens = cert.tokens;
    row.ratio = static_cast<double>(cert.tokens) / to_double(cert.power);
    env = std::min(env, row.ratio);
    row.envelope = env;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace disto
