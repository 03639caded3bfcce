// Copyright 2026 The mixdetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXDETECT_RNG_HPP_
#define MIXDETECT_RNG_HPP_

#include <array>
#include <cmath>
#include <cstdint>

namespace mixdetect {

namespace detail {

// Philox 4x32-10 counter-based block cipher (Salmon et al. round constants).
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

}  // namespace detail

// Seed-domain tags. Each consumer of randomness XORs the user seed with its
// own tag, so e.g. widening a power grid never perturbs calibration draws.
namespace seed_domain {
inline constexpr std::uint64_t kSpacingCalibration = 0x53504143494e4701ull;
inline constexpr std::uint64_t kContaminationCalibration = 0x434f4e54414d4902ull;
inline constexpr std::uint64_t kVarianceCalibration = 0x56415249414e4303ull;
inline constexpr std::uint64_t kBaselineCalibration = 0x424153454c494e04ull;
inline constexpr std::uint64_t kPowerReplicates = 0x504f574552313005ull;
}  // namespace seed_domain

// One logical stream of a counter-based generator. Streams are identified by
// (seed, stream) and are independent of each other and of evaluation order;
// a stream must be owned by exactly one task at a time.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_{stream} {}

  std::uint64_t next_u64() {
    if (pos_ > 2) refill();
    const std::uint64_t lo = buf_[pos_];
    const std::uint64_t hi = buf_[pos_ + 1];
    pos_ += 2;
    return lo | (hi << 32);
  }

  // Uniform on the open interval (0,1), 53-bit resolution.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the Marsaglia polar method.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Standard Laplace (density exp(-|x|)/2) via inverse cdf.
  double laplace() {
    const double u = uniform();
    return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
  }

 private:
  void refill() {
    buf_ = detail::philox4x32(
        {static_cast<std::uint32_t>(block_),
         static_cast<std::uint32_t>(block_ >> 32),
         static_cast<std::uint32_t>(stream_),
         static_cast<std::uint32_t>(stream_ >> 32)},
        key_);
    ++block_;
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mixdetect

#endif  // MIXDETECT_RNG_HPP_
