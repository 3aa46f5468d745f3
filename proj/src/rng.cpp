// SPDX-License-Identifier: Apache-2.0
//
// irsnoma — secrecy-performance analysis of an IRS-assisted NOMA downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rng.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnoma {

namespace {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomStream::RandomStream(uint64_t master_seed, uint64_t stream_index) {
  uint64_t sm = master_seed + 0x9E3779B97F4A7C15ULL * (stream_index + 1);
  for (auto& s : s_) s = splitmix64(sm);
}

uint64_t RandomStream::next_u64() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RandomStream::uniform01() {
  // 53-bit mantissa, shifted into (0, 1].
  return ((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_normal_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform01()));
  double phi = 2.0 * M_PI * uniform01();
  cached_normal_ = r * std::sin(phi);
  have_cached_ = true;
  return r * std::cos(phi);
}

double RandomStream::gamma(double shape) {
  if (!(shape >= 0.1)) throw std::domain_error("RandomStream::gamma: shape too small");
  if (shape < 1.0) {
    // Boost: G(a) = G(a+1) * U^{1/a}
    return gamma(shape + 1.0) * std::pow(uniform01(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RandomStream::exponential() { return -std::log(uniform01()); }

}  // namespace irsnoma
