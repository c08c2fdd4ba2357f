#include "w15j/symbol_cache.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace w15j {

SymbolCache::Key SymbolCache::canonical_key(HalfInt a, HalfInt b, HalfInt c,
                                            HalfInt d, HalfInt e, HalfInt f) {
    // Regge construction: the 144-element class of {a b c; d e f} is determined
    // by the multiset of the four triad perimeters and the multiset of the three
    // opposite-pair sums. Sorting both and mapping back through the fixed
    // pair/triad incidence yields the representative:
    //   a' = (T1+T2-P2-P3)/2 etc. with S = (T1+..+T4)/2 = P1+P2+P3.
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    const int td = d.twice(), te = e.twice(), tf = f.twice();
    std::array<int, 4> T = {ta + tb + tc, ta + te + tf,
                            td + tb + tf, td + te + tc};
    std::array<int, 3> P = {ta + td, tb + te, tc + tf};
    std::sort(T.begin(), T.end());
    std::sort(P.begin(), P.end());
    const int S2 = (T[0] + T[1] + T[2] + T[3]) / 2;  // = P[0]+P[1]+P[2]
    Key k;
    k[0] = (T[0] + T[1] + P[0] - S2) / 2;  // a: in triads T0,T1; pair P0
    k[3] = (T[2] + T[3] + P[0] - S2) / 2;  // d
    k[1] = (T[0] + T[2] + P[1] - S2) / 2;  // b: triads T0,T2; pair P1
    k[4] = (T[1] + T[3] + P[1] - S2) / 2;  // e
    k[2] = (T[0] + T[3] + P[2] - S2) / 2;  // c: triads T0,T3; pair P2
    k[5] = (T[1] + T[2] + P[2] - S2) / 2;  // f
    return k;
}

std::optional<AlgebraicNumber> SymbolCache::lookup(const Key& k) const {
    std::shared_lock lk(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void SymbolCache::insert(const Key& k, const AlgebraicNumber& v) {
    std::unique_lock lk(mutex_);
    map_.emplace(k, v);
}

std::size_t SymbolCache::size() const {
    std::shared_lock lk(mutex_);
    return map_.size();
}

void SymbolCache::clear() {
    std::unique_lock lk(mutex_);
    map_.clear();
}

void SymbolCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file: " + path);
    std::string line;
    std::size_t lineno = 0;
    std::unique_lock lk(mutex_);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string tag, arrow;
        Key k;
        if (!(is >> tag) || tag != "6j" ||
            !(is >> k[0] >> k[1] >> k[2] >> k[3] >> k[4] >> k[5] >> arrow) ||
            arrow != "->") {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed cache line");
        }
        std::string rest;
        std::getline(is, rest);
        AlgebraicNumber v;
        try {
            v = AlgebraicNumber::parse(rest);
        } catch (const std::exception& ex) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
        // normalize to the canonical representative on ingest
        auto ck = canonical_key(HalfInt::from_twice(k[0]), HalfInt::from_twice(k[1]),
                                HalfInt::from_twice(k[2]), HalfInt::from_twice(k[3]),
                                HalfInt::from_twice(k[4]), HalfInt::from_twice(k[5]));
        map_.emplace(ck, std::move(v));
    }
}

void SymbolCache::store(const std::string& path) const {
    std::vector<std::pair<Key, const AlgebraicNumber*>> entries;
    {
        std::shared_lock lk(mutex_);
        entries.reserve(map_.size());
        for (const auto& [k, v] : map_) entries.emplace_back(k, &v);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    for (const auto& [k, v] : entries) {
        out << "6j";
        for (int t : k) out << ' ' << t;
        out << " -> " << v->serialize() << '\n';
    }
}

} // namespace w15j
