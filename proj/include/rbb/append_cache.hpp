/*
   Copyright 2026 The rbb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <atomic>
#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rbb {

/**
 * Append-only table of values indexed 0..N. Entries are write-once:
 * once an index is published it never changes, so reads below ready()
 * are lock-free and thread-safe. Growth is serialized by a mutex; the
 * maker is called with the index and the already-built prefix, which is
 * how recurrences (Bernoulli numbers, operator images) are expressed.
 **/
template <class T>
class AppendCache {
public:
    /// Maker signature: T(std::size_t index, const std::deque<T>& prefix)
    template <class Maker>
    const T& get(std::size_t n, Maker&& make) const {
        if (n < ready_.load(std::memory_order_acquire)) return items_[n];
        std::lock_guard<std::mutex> lock(grow_);
        for (std::size_t k = items_.size(); k <= n; ++k)
            items_.push_back(make(k, const_cast<const std::deque<T>&>(items_)));
        ready_.store(items_.size(), std::memory_order_release);
        return items_[n];
    }

    template <class Maker>
    void warm(std::size_t max_n, Maker&& make) const {
        get(max_n, std::forward<Maker>(make));
    }

    std::size_t ready() const { return ready_.load(std::memory_order_acquire); }

    /// Replaces the table contents wholesale; only allowed before any
    /// entry has been built (used to preload from a persistence file).
    void seed(std::vector<T> values) {
        std::lock_guard<std::mutex> lock(grow_);
        if (!items_.empty()) throw std::logic_error("cache already populated; cannot seed");
        for (T& v : values) items_.push_back(std::move(v));
        ready_.store(items_.size(), std::memory_order_release);
    }

private:
    mutable std::deque<T> items_;  // deque: stable references across growth
    mutable std::atomic<std::size_t> ready_{0};
    mutable std::mutex grow_;
};

}  // namespace rbb
