// Copyright 2026 The symmap Authors
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

#ifndef SYMMAP_PARALLEL_HPP
#define SYMMAP_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace symmap {

/// Runs fn(0..count-1) on a small thread pool. Results are stored by index,
/// so callers that reduce over the returned vector in order are independent
/// of scheduling.
template <class Fn>
auto parallel_map(int count, Fn fn) -> std::vector<decltype(fn(0))> {
    using R = decltype(fn(0));
    std::vector<std::optional<R>> slots(static_cast<size_t>(std::max(count, 0)));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<R> out;
    out.reserve(slots.size());
    for (auto &s : slots) out.push_back(std::move(*s));
    return out;
}

/// Independent generator for sub-stream `stream` of `seed`.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace symmap

#endif  // SYMMAP_PARALLEL_HPP
