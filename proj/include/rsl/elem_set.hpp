#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace rsl {

using Elem = std::uint64_t;

/// Flat bit-vector subset of a universe [0, n). All set algebra the search
/// kernels need (AND/OR/ANDNOT + popcount) runs word-parallel.
class ElemSet {
  public:
    static constexpr std::uint64_t npos = ~std::uint64_t{0};

    ElemSet() = default;
    explicit ElemSet(std::uint64_t universe)
        : n_(universe), w_((universe + 63) / 64, 0) {}

    static ElemSet of(std::uint64_t universe, std::initializer_list<std::uint64_t> xs) {
        ElemSet s(universe);
        for (auto x : xs) s.set(x);
        return s;
    }

    std::uint64_t universe() const { return n_; }

    void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint64_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void fill() {
        std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::uint64_t find_first() const { return find_next_from(0); }

    /// First member >= i, or npos.
    std::uint64_t find_next_from(std::uint64_t i) const {
        if (i >= n_) return npos;
        std::size_t wi = i >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w));
            if (++wi == w_.size()) return npos;
            w = w_[wi];
        }
    }

    ElemSet& operator&=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Set difference.
    ElemSet& operator-=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
    friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
    friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    bool intersects(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::size_t intersection_count(const ElemSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                fn((wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint64_t> to_vector() const {
        std::vector<std::uint64_t> v;
        v.reserve(count());
        for_each([&](std::uint64_t i) { v.push_back(i); });
        return v;
    }

    /// Order on the increasing element sequences (prefix-free: {0,1} < {0,1,2}).
    bool lex_less(const ElemSet& o) const {
        std::uint64_t a = find_first(), b = o.find_first();
        while (a != npos && b != npos) {
            if (a != b) return a < b;
            a = find_next_from(a + 1);
            b = o.find_next_from(b + 1);
        }
        return a == npos && b != npos;
    }

  private:
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    std::uint64_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace rsl
