// Copyright 2026 The exaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXAUDIT_RNG_H_
#define EXAUDIT_RNG_H_

#include <cstdint>
#include <random>

namespace exaudit {

// Independent purposes within one episode draw from separate streams so that
// e.g. a cheating coin flip never shifts the audit trigger draw.
enum class StreamTag : std::uint64_t {
  kEpisode = 0x65706973ULL,
  kPolicy = 0x706f6c69ULL,
  kAudit = 0x61756469ULL,
};

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed for the stream identified by (seed, index, tag). Pure function.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index,
                         StreamTag tag);

// Thin wrapper over mt19937_64 with platform-independent conversions.
// std::uniform_real_distribution is implementation-defined, which would make
// outputs differ between standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}
  RngStream(std::uint64_t seed, std::uint64_t index, StreamTag tag)
      : engine_(DeriveSeed(seed, index, tag)) {}

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform();
  // Uniform integer on [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n);
  // True with probability p; p <= 0 never fires, p >= 1 always fires.
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace exaudit

#endif  // EXAUDIT_RNG_H_
