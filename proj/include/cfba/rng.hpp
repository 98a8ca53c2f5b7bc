// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace cfba {

// Every random quantity is drawn from a substream keyed by
// (master seed, trial, domain, unit ids). Workers derive their own streams,
// so results are identical for any thread count or schedule.
enum class Stream : std::uint64_t {
  scenario = 1,
  paths = 2,
  fading = 3,
  noise = 4,
  patterns = 5,
  assignment = 6,
  codebook = 7,
  mobility = 8,
  data_fading = 9,
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> ids);

std::mt19937_64 make_stream(std::uint64_t master,
                            std::initializer_list<std::uint64_t> ids);

// Per-trial handle passed to everything that draws randomness.
struct TrialRng {
  std::uint64_t master = 0;
  std::uint64_t trial = 0;

  std::mt19937_64 stream(Stream s, std::uint64_t a = 0,
                         std::uint64_t b = 0) const;
};

double draw_unit_normal(std::mt19937_64& rng);

// Circularly symmetric complex Gaussian CN(0, var). Always consumes the
// same number of engine draws, even for var = 0.
std::complex<double> draw_cn(std::mt19937_64& rng, double var);

}  // namespace cfba
