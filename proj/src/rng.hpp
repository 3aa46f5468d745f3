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

#ifndef IRSNOMA_RNG_HPP
#define IRSNOMA_RNG_HPP

#include <cstdint>

namespace irsnoma {

// Counter-based substream: stream (master_seed, index) is a value-type
// xoshiro256** generator seeded through SplitMix64. Trial t of a Monte-Carlo
// run owns stream (seed, t), so results do not depend on scheduling.
class RandomStream {
 public:
  RandomStream(uint64_t master_seed, uint64_t stream_index);

  uint64_t next_u64();
  double uniform01();    // in (0, 1]
  double normal();       // standard normal (Box-Muller, cached pair)
  double gamma(double shape);  // unit scale; Marsaglia-Tsang, shape >= 0.1
  double exponential();  // unit mean

 private:
  uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace irsnoma

#endif  // IRSNOMA_RNG_HPP
