#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace hamlocate {

// Dynamic bitset over vertex ids [0, n). Sized once at construction; all
// binary ops require equal capacity.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (std::size_t i = 0; i + 1 < s.words_.size(); ++i) s.words_[i] = ~0ull;
        if (!s.words_.empty()) {
            std::size_t rem = n % 64;
            s.words_.back() = rem == 0 ? ~0ull : ((1ull << rem) - 1);
        }
        return s;
    }

    std::size_t capacity() const { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    // First set bit at index >= from, or capacity() if none.
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~0ull << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == words_.size()) return n_;
            w = words_[wi];
        }
    }
    std::size_t first() const { return next(0); }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this := this \ o
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    std::size_t and_count(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = first(); i < n_; i = next(i + 1)) out.push_back((int)i);
        return out;
    }

    static VertexSet of(std::size_t n, const std::vector<int>& ids) {
        VertexSet s(n);
        for (int v : ids) s.set((std::size_t)v);
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hamlocate
