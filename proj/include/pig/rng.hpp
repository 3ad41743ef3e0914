// Copyright (c) 2026 The pig authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pig {

// Seeded random stream with explicit, implementation-independent draw
// formulas so that serialized state round-trips bit-exactly.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) {
        return uint64_t(uniform() * double(n)) % n;
    }

    // Box-Muller without cached second value (keeps state = engine state).
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Draws k distinct indices from [0, n) in shuffled-prefix order.
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        shuffle(idx);
        idx.resize(k);
        return idx;
    }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }
    void deserialize(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
    }

    // Derives an independent stream for a named sub-purpose.
    Rng fork(uint64_t stream_id) {
        uint64_t s = next_u64() ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        return Rng(s);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pig
