#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ecom {

/// Subset of {0, ..., n-1} backed by 64-bit words.  All set algebra is
/// word-parallel; iteration always visits indices in increasing order.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe)
        : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    static ElementSet singleton(int universe, int i) {
        ElementSet s(universe);
        s.set(i);
        return s;
    }

    static ElementSet full(int universe) {
        ElementSet s(universe);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    ElementSet& operator&=(const ElementSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    ElementSet& operator|=(const ElementSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    /// Set difference (this \ o).
    ElementSet& operator-=(const ElementSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    /// True when other is a subset of this.
    bool contains_all(const ElementSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool intersects(const ElementSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    /// Smallest member, or -1 when empty.
    int min_element() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    class const_iterator {
    public:
        const_iterator(const ElementSet* s, int pos) : s_(s), pos_(pos) {}
        int operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = s_->next_after(pos_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

    private:
        const ElementSet* s_;
        int pos_;
    };

    const_iterator begin() const { return const_iterator(this, next_after(-1)); }
    const_iterator end() const { return const_iterator(this, -1); }

    bool operator==(const ElementSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    /// Three-way comparison of the increasing index sequences (standard
    /// lexicographic order, shorter prefix first).
    int compare(const ElementSet& o) const {
        assert(n_ == o.n_);
        int a = min_element(), b = o.min_element();
        while (a != -1 && b != -1) {
            if (a != b) return a < b ? -1 : 1;
            a = next_after(a);
            b = o.next_after(b);
        }
        if (a == b) return 0;
        return a == -1 ? -1 : 1;
    }

    bool operator<(const ElementSet& o) const { return compare(o) < 0; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int next_after(int i) const {
        ++i;
        if (i < 0 || i >= n_) return -1;
        std::size_t word = static_cast<std::size_t>(i) >> 6;
        std::uint64_t w = w_[word] >> (i & 63);
        if (w) return i + std::countr_zero(w);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return static_cast<int>(word * 64) + std::countr_zero(w_[word]);
        return -1;
    }

    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace ecom
