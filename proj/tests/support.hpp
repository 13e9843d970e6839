#pragma once

// Brute-force reference implementations and random ring generators shared by
// the unit, property and acceptance tests. Nothing here uses the library's
// closure or enumeration code; subsets are plain bool vectors.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "aprime/constructions.hpp"
#include "aprime/ideals.hpp"
#include "aprime/ring.hpp"

namespace oracle {

using aprime::FiniteRing;
using aprime::Index;
using Set = std::vector<bool>;

inline Set from_bits(const aprime::Bitset& b) {
    Set s(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) s[i] = b.test(i);
    return s;
}

inline Set from_members(std::size_t n, std::initializer_list<Index> ms) {
    Set s(n, false);
    for (auto m : ms) s[m] = true;
    return s;
}

inline bool subset(const Set& a, const Set& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

inline std::size_t count(const Set& a) { return static_cast<std::size_t>(std::count(a.begin(), a.end(), true)); }

inline Index find_zero(const FiniteRing& r) {
    for (Index z = 0; z < r.order(); ++z) {
        bool ok = true;
        for (Index x = 0; x < r.order() && ok; ++x) ok = r.add(z, x) == x;
        if (ok) return z;
    }
    return 0;
}

inline Set zero_set(const FiniteRing& r) {
    Set s(r.order(), false);
    s[find_zero(r)] = true;
    return s;
}

/// Additive subgroup test straight from the definition (finite: closure
/// under + suffices once nonempty).
inline bool additive_subgroup(const FiniteRing& r, const Set& s) {
    if (!s[find_zero(r)]) return false;
    for (Index a = 0; a < r.order(); ++a)
        for (Index b = 0; b < r.order(); ++b)
            if (s[a] && s[b] && !s[r.add(a, b)]) return false;
    return true;
}

inline bool is_ideal(const FiniteRing& r, const Set& s, bool right, bool left) {
    if (!additive_subgroup(r, s)) return false;
    for (Index a = 0; a < r.order(); ++a) {
        if (!s[a]) continue;
        for (Index x = 0; x < r.order(); ++x) {
            if (right && !s[r.mul(a, x)]) return false;
            if (left && !s[r.mul(x, a)]) return false;
        }
    }
    return true;
}

inline std::vector<Set> all_ideals(const FiniteRing& r, aprime::IdealKind kind) {
    const bool right = kind != aprime::IdealKind::Left;
    const bool left = kind != aprime::IdealKind::Right;
    std::vector<Set> out;
    const std::size_t n = r.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Set s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
        if (is_ideal(r, s, right, left)) out.push_back(std::move(s));
    }
    return out;
}

/// Finite sums of products ab by fixpoint iteration.
inline Set product(const FiniteRing& r, const Set& a, const Set& b) {
    Set s = zero_set(r);
    for (Index x = 0; x < r.order(); ++x)
        for (Index y = 0; y < r.order(); ++y)
            if (a[x] && b[y]) s[r.mul(x, y)] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Index x = 0; x < r.order(); ++x)
            for (Index y = 0; y < r.order(); ++y)
                if (s[x] && s[y] && !s[r.add(x, y)]) {
                    s[r.add(x, y)] = true;
                    grew = true;
                }
    }
    return s;
}

inline bool is_zero(const FiniteRing& r, const Set& s) { return s == zero_set(r); }

enum class Notion { Prime, Weakly, Almost };

/// Quantifies over the given ideal list, which must contain the whole ring.
inline bool holds(const FiniteRing& r, const Set& p, const std::vector<Set>& ideals, Notion notion) {
    const Set p2 = product(r, p, p);
    for (const auto& a : ideals)
        for (const auto& b : ideals) {
            const Set ab = product(r, a, b);
            if (!subset(ab, p)) continue;
            if (notion == Notion::Weakly && is_zero(r, ab)) continue;
            if (notion == Notion::Almost && subset(ab, p2)) continue;
            if (!subset(a, p) && !subset(b, p)) return false;
        }
    return true;
}

/// {x : Jx ⊆ I}
inline Set colon_right(const FiniteRing& r, const Set& i, const Set& j) {
    Set out(r.order(), false);
    for (Index x = 0; x < r.order(); ++x) {
        bool ok = true;
        for (Index y = 0; y < r.order() && ok; ++y)
            if (j[y]) ok = i[r.mul(y, x)];
        out[x] = ok;
    }
    return out;
}

/// {x : xJ ⊆ I}
inline Set colon_star(const FiniteRing& r, const Set& i, const Set& j) {
    Set out(r.order(), false);
    for (Index x = 0; x < r.order(); ++x) {
        bool ok = true;
        for (Index y = 0; y < r.order() && ok; ++y)
            if (j[y]) ok = i[r.mul(x, y)];
        out[x] = ok;
    }
    return out;
}

/// Naive axiom check on raw tables; true iff the tables define a ring.
inline bool ring_axioms(const aprime::RawRing& raw) {
    const std::size_t n = raw.order;
    if (n == 0 || raw.add.size() != n || raw.mul.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (raw.add[i].size() != n || raw.mul[i].size() != n) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (raw.add[i][j] < 0 || raw.add[i][j] >= static_cast<std::int64_t>(n) || raw.mul[i][j] < 0 ||
                raw.mul[i][j] >= static_cast<std::int64_t>(n))
                return false;
    }
    const auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(raw.add[a][b]); };
    const auto M = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(raw.mul[a][b]); };
    std::size_t zero = n;
    for (std::size_t z = 0; z < n && zero == n; ++z) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = A(z, x) == x && A(x, z) == x;
        if (ok) zero = z;
    }
    if (zero == n) return false;
    for (std::size_t a = 0; a < n; ++a) {
        bool inv = false;
        for (std::size_t b = 0; b < n && !inv; ++b) inv = A(a, b) == zero;
        if (!inv) return false;
        for (std::size_t b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a)) return false;
            for (std::size_t c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c))) return false;
                if (M(M(a, b), c) != M(a, M(b, c))) return false;
                if (M(a, A(b, c)) != A(M(a, b), M(a, c))) return false;
                if (M(A(a, b), c) != A(M(a, c), M(b, c))) return false;
            }
        }
    }
    return true;
}

/// Is map a ring homomorphism R -> S?
inline bool is_hom(const FiniteRing& r, const FiniteRing& s, const std::vector<Index>& map) {
    for (Index a = 0; a < r.order(); ++a)
        for (Index b = 0; b < r.order(); ++b)
            if (map[r.add(a, b)] != s.add(map[a], map[b]) || map[r.mul(a, b)] != s.mul(map[a], map[b])) return false;
    return true;
}

/// Every surjective homomorphism by trying all |S|^|R| maps.
inline std::vector<std::vector<Index>> all_epimorphisms(const FiniteRing& r, const FiniteRing& s) {
    std::vector<std::vector<Index>> out;
    const std::size_t n = r.order();
    std::vector<Index> map(n, 0);
    while (true) {
        Set hit(s.order(), false);
        for (auto v : map) hit[v] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) && is_hom(r, s, map)) out.push_back(map);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++map[i] < s.order()) break;
            map[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle

namespace gen {

using aprime::Index;
using aprime::RingPtr;

/// Same ring with elements renamed by perm (old index -> new index).
inline RingPtr permuted(const aprime::FiniteRing& r, const std::vector<Index>& perm) {
    const std::size_t n = r.order();
    aprime::RawRing raw;
    raw.name = r.name() + "~";
    raw.order = n;
    raw.add.assign(n, std::vector<std::int64_t>(n));
    raw.mul.assign(n, std::vector<std::int64_t>(n));
    std::vector<std::string> labels(n);
    for (Index a = 0; a < n; ++a) {
        labels[perm[a]] = r.label(a);
        for (Index b = 0; b < n; ++b) {
            raw.add[perm[a]][perm[b]] = perm[r.add(a, b)];
            raw.mul[perm[a]][perm[b]] = perm[r.mul(a, b)];
        }
    }
    raw.labels = labels;
    return aprime::validate_ring(raw);
}

inline std::vector<Index> random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Small rings of assorted shapes, all of order <= 16.
inline std::vector<RingPtr> small_pool() {
    std::vector<RingPtr> pool;
    for (std::size_t n = 1; n <= 12; ++n) pool.push_back(aprime::zmod(n));
    pool.push_back(aprime::matrix_ring(2, 2));
    pool.push_back(aprime::upper_triangular(2, 2));
    pool.push_back(aprime::builtin_example("ex-2-1-ii"));
    pool.push_back(aprime::builtin_example("ex-2-1-iii"));
    pool.push_back(aprime::direct_product(aprime::zmod(2), aprime::zmod(4)).ring);
    pool.push_back(aprime::direct_product(aprime::zmod(2), aprime::builtin_example("ex-2-1-ii")).ring);
    pool.push_back(aprime::direct_product(aprime::zmod(4), aprime::zmod(4)).ring);
    return pool;
}

/// A pool ring, possibly relabelled, possibly a quotient of one.
inline RingPtr random_ring(std::mt19937& rng, std::size_t max_order = 16) {
    static const auto pool = small_pool();
    while (true) {
        RingPtr r = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        if (r->order() > max_order) continue;
        if (rng() % 3 == 0) {
            const auto ideals = aprime::enumerate_ideals(*r, aprime::IdealKind::TwoSided);
            const auto& i = ideals[std::uniform_int_distribution<std::size_t>(0, ideals.size() - 1)(rng)];
            r = aprime::quotient(r, i).ring;
        }
        if (rng() % 2 == 0) r = permuted(*r, random_perm(r->order(), rng));
        return r;
    }
}

} // namespace gen
