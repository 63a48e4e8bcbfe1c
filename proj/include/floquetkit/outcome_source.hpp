// Copyright 2026 The floquetkit Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace floquetkit {

class OutcomeStreamExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supplies random measurement outcomes as bits (0 means eigenvalue +1).
/// Either a seeded generator or an explicit forced stream. Every bit handed
/// out is recorded so runs can be replayed.
class OutcomeSource {
 public:
  static OutcomeSource seeded(std::uint64_t seed) {
    OutcomeSource s;
    s.forced_ = false;
    s.rng_.seed(seed);
    return s;
  }

  static OutcomeSource forced(std::vector<std::uint8_t> bits) {
    OutcomeSource s;
    s.forced_ = true;
    s.stream_ = std::move(bits);
    return s;
  }

  /// Accepts "0"/"1" or "+"/"-" characters; whitespace and commas are ignored.
  static OutcomeSource forced(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
      if (c == '0' || c == '+') {
        bits.push_back(0);
      } else if (c == '1' || c == '-') {
        bits.push_back(1);
      } else if (c == ' ' || c == ',' || c == '\n' || c == '\t') {
        continue;
      } else {
        throw std::invalid_argument(std::string("invalid outcome character '") + c + "'");
      }
    }
    return forced(std::move(bits));
  }

  /// Forced stream spelling the low `count` bits of `value`, least significant first.
  static OutcomeSource forced_from_index(std::uint64_t value, std::size_t count) {
    std::vector<std::uint8_t> bits(count);
    for (std::size_t i = 0; i < count; ++i) bits[i] = static_cast<std::uint8_t>((value >> i) & 1u);
    return forced(std::move(bits));
  }

  std::uint8_t next() {
    std::uint8_t bit;
    if (forced_) {
      if (pos_ >= stream_.size()) throw OutcomeStreamExhausted("forced outcome stream exhausted");
      bit = stream_[pos_++];
    } else {
      bit = static_cast<std::uint8_t>(rng_() & 1u);
    }
    record_.push_back(bit);
    return bit;
  }

  bool is_forced() const { return forced_; }
  std::size_t remaining() const { return forced_ ? stream_.size() - pos_ : SIZE_MAX; }
  const std::vector<std::uint8_t>& record() const { return record_; }

 private:
  OutcomeSource() = default;

  bool forced_ = false;
  std::mt19937_64 rng_;
  std::vector<std::uint8_t> stream_;
  std::size_t pos_ = 0;
  std::vector<std::uint8_t> record_;
};

}  // namespace floquetkit
