#pragma once

#include "w15j/algebraic.hpp"
#include "w15j/half_int.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace w15j {

// Memo table for exact 6j values keyed by the canonical representative of the
// full 144-element symmetry class (column permutations, row flips, Regge).
// Concurrent readers, serialized writers.
class SymbolCache {
public:
    using Key = std::array<int, 6>;  // canonical doubled labels {a b c; d e f}

    // Canonical key: sorted triad sums + sorted opposite-pair sums, mapped back
    // to a representative label set. All 144 equivalent 6j's share one key.
    static Key canonical_key(HalfInt a, HalfInt b, HalfInt c,
                             HalfInt d, HalfInt e, HalfInt f);

    std::optional<AlgebraicNumber> lookup(const Key& k) const;
    void insert(const Key& k, const AlgebraicNumber& v);
    std::size_t size() const;
    void clear();

    // File format, one entry per line:
    //   6j <2a> <2b> <2c> <2d> <2e> <2f> -> <num>/<den> sqrt <rad> [+ ...]
    // Throws std::runtime_error naming the offending line on corrupt input.
    void load(const std::string& path);
    void store(const std::string& path) const;

private:
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            for (int v : k) {
                h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, AlgebraicNumber, KeyHash> map_;
};

} // namespace w15j
