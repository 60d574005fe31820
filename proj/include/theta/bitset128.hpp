#ifndef THETA_BITSET128_HPP
#define THETA_BITSET128_HPP

#include <bit>
#include <cstdint>
#include <compare>

namespace theta {

// Fixed-width vertex set over at most 128 vertices. All operations are
// word-parallel on two 64-bit limbs.
struct VertexSet {
    std::uint64_t lo = 0, hi = 0;

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }
    static VertexSet full(int n) {
        VertexSet s;
        if (n >= 64) {
            s.lo = ~0ull;
            s.hi = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else {
            s.lo = (n == 64) ? ~0ull : ((1ull << n) - 1);
        }
        return s;
    }

    void set(int v) { (v < 64 ? lo : hi) |= 1ull << (v & 63); }
    void reset(int v) { (v < 64 ? lo : hi) &= ~(1ull << (v & 63)); }
    bool test(int v) const { return ((v < 64 ? lo : hi) >> (v & 63)) & 1; }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return lo == 0 && hi == 0; }
    bool any() const { return !empty(); }

    int first() const {  // -1 when empty
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }
    int next(int v) const {  // first member > v, or -1
        if (v < 63) {
            std::uint64_t m = lo & ~((2ull << v) - 1);
            if (m) return std::countr_zero(m);
            if (hi) return 64 + std::countr_zero(hi);
            return -1;
        }
        if (v < 127) {
            std::uint64_t m = hi & ~((v == 63) ? 0ull : ((2ull << (v - 64)) - 1));
            if (m) return 64 + std::countr_zero(m);
        }
        return -1;
    }

    VertexSet operator|(VertexSet o) const { return {lo | o.lo, hi | o.hi}; }
    VertexSet operator&(VertexSet o) const { return {lo & o.lo, hi & o.hi}; }
    VertexSet operator-(VertexSet o) const { return {lo & ~o.lo, hi & ~o.hi}; }
    VertexSet& operator|=(VertexSet o) { lo |= o.lo; hi |= o.hi; return *this; }
    VertexSet& operator&=(VertexSet o) { lo &= o.lo; hi &= o.hi; return *this; }
    VertexSet& operator-=(VertexSet o) { lo &= ~o.lo; hi &= ~o.hi; return *this; }
    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

    bool subset_of(VertexSet o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
    bool intersects(VertexSet o) const { return (lo & o.lo) || (hi & o.hi); }
};

// Iterates members in ascending order: for (int v : iterate(S)) ...
struct VertexSetRange {
    VertexSet s;
    struct iterator {
        VertexSet s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() { v = s.next(v); return *this; }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {s, s.first()}; }
    iterator end() const { return {s, -1}; }
};
inline VertexSetRange iterate(VertexSet s) { return {s}; }

}  // namespace theta

#endif
