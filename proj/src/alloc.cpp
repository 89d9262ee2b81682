// Copyright 2026 The capcycle Authors
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

#include "capcycle/alloc.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>

#include "capcycle/error.hpp"

namespace capcycle {
namespace {

std::atomic<std::uint64_t> g_space_limit{kDefaultSpaceLimit};

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

void check_space_args(Value budget, std::size_t k) {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 0");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyAllocation: return "EmptyAllocation";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kAllTies: return "AllTies";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::uint64_t space_limit() noexcept { return g_space_limit.load(std::memory_order_relaxed); }

void set_space_limit(std::uint64_t limit) noexcept {
  g_space_limit.store(limit, std::memory_order_relaxed);
}

Allocation Allocation::from_values(std::vector<Value> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyAllocation, "allocation has no entries");
  Value sum = 0;
  for (Value v : values) {
    if (v < 0) {
      throw Error(ErrorCode::kNegativeEntry,
                  "allocation entry " + std::to_string(v) + " is negative");
    }
    if (__builtin_add_overflow(sum, v, &sum)) {
      throw Error(ErrorCode::kOverflow, "allocation sum overflows");
    }
  }
  return Allocation(std::move(values), sum);
}

Allocation Allocation::parse(std::string_view text) {
  std::vector<Value> values;
  if (trim(text).empty()) throw Error(ErrorCode::kEmptyAllocation, "allocation has no entries");
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    Value v = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kParse,
                  "cannot parse allocation entry '" + std::string(field) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_values(std::move(values));
}

std::string Allocation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Partition Partition::from_sorted(std::vector<Value> values) {
  if (!std::is_sorted(values.begin(), values.end(), std::greater<>())) {
    throw Error(ErrorCode::kInvalidArgument, "partition values must be non-increasing");
  }
  return Partition(Allocation::from_values(std::move(values)));
}

Allocation new_allocation(std::vector<Value> values) {
  return Allocation::from_values(std::move(values));
}

Partition canonicalize(const Allocation& a) {
  std::vector<Value> sorted(a.values().begin(), a.values().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return Partition(Allocation::from_values(std::move(sorted)));
}

std::uint64_t composition_count(Value budget, std::size_t k) {
  check_space_args(budget, k);
  // C(n, r) with r = min(k - 1, budget); every partial product C(n, i) is exact.
  const unsigned __int128 n = static_cast<unsigned __int128>(budget) + k - 1;
  const unsigned __int128 r = std::min<unsigned __int128>(k - 1, static_cast<unsigned __int128>(budget));
  unsigned __int128 result = 1;
  for (unsigned __int128 i = 0; i < r; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > UINT64_MAX) throw Error(ErrorCode::kOverflow, "composition count exceeds 2^64");
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<Allocation> enumerate_compositions(Value budget, std::size_t k) {
  return enumerate_compositions(budget, k, space_limit());
}

std::vector<Allocation> enumerate_compositions(Value budget, std::size_t k, std::uint64_t limit) {
  std::uint64_t count = 0;
  try {
    count = composition_count(budget, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOverflow) throw;
    throw Error(ErrorCode::kSpaceTooLarge, "composition space exceeds 2^64 entries");
  }
  if (count > limit) {
    throw Error(ErrorCode::kSpaceTooLarge, "composition space has " + std::to_string(count) +
                                               " entries, limit is " + std::to_string(limit));
  }

  std::vector<Allocation> out;
  out.reserve(count);
  std::vector<Value> cur(k, 0);
  // Position i takes every value from `remaining` down to 0; the last
  // position takes whatever is left.
  std::function<void(std::size_t, Value)> fill = [&](std::size_t i, Value remaining) {
    if (i + 1 == k || remaining == 0) {
      std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), 0);
      cur[i] = remaining;
      out.push_back(Allocation::from_values(cur));
      return;
    }
    for (Value v = remaining; v >= 0; --v) {
      cur[i] = v;
      fill(i + 1, remaining - v);
    }
  };
  fill(0, budget);
  return out;
}

std::vector<Partition> enumerate_partitions(Value budget, std::size_t k) {
  return enumerate_partitions(budget, k, space_limit());
}

std::vector<Partition> enumerate_partitions(Value budget, std::size_t k, std::uint64_t limit) {
  check_space_args(budget, k);
  std::vector<Partition> out;
  std::vector<Value> cur(k, 0);
  std::function<void(std::size_t, Value, Value)> fill = [&](std::size_t i, Value remaining,
                                                            Value cap) {
    const std::size_t slots = k - i;
    if (slots == 1 || remaining == 0) {
      std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), 0);
      cur[i] = remaining;
      if (out.size() >= limit) {
        throw Error(ErrorCode::kSpaceTooLarge,
                    "partition space exceeds limit of " + std::to_string(limit));
      }
      out.push_back(Partition::from_sorted(cur));
      return;
    }
    // Position i must hold at least ceil(remaining / slots) to keep the tail
    // non-increasing.
    const Value floor_v = (remaining + static_cast<Value>(slots) - 1) / static_cast<Value>(slots);
    for (Value v = std::min(remaining, cap); v >= floor_v; --v) {
      cur[i] = v;
      fill(i + 1, remaining - v, v);
    }
  };
  fill(0, budget, budget);
  return out;
}

}  // namespace capcycle
