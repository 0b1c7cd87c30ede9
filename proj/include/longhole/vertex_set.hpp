#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace longhole {

inline constexpr int kMaxVertices = 256;

// Fixed-capacity set of vertices 0..kMaxVertices-1.
class VertexSet {
  public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vs)
    {
        for (int v : vs)
            insert(v);
    }

    static auto prefix(int n) -> VertexSet
    {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    template <typename Range>
    static auto of(const Range & r) -> VertexSet
    {
        VertexSet s;
        for (int v : r)
            s.insert(v);
        return s;
    }

    void insert(int v) { words_[v >> 6] |= bit(v); }
    void erase(int v) { words_[v >> 6] &= ~bit(v); }
    [[nodiscard]] auto contains(int v) const -> bool { return (words_[v >> 6] & bit(v)) != 0; }

    [[nodiscard]] auto count() const -> int
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    [[nodiscard]] auto empty() const -> bool
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    // -1 when empty.
    [[nodiscard]] auto first() const -> int
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w])
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    // Smallest member greater than v, or -1.
    [[nodiscard]] auto next(int v) const -> int
    {
        ++v;
        if (v >= kMaxVertices)
            return -1;
        int w = v >> 6;
        std::uint64_t rest = words_[w] & (~std::uint64_t{0} << (v & 63));
        if (rest)
            return w * 64 + std::countr_zero(rest);
        for (++w; w < kWords; ++w)
            if (words_[w])
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    [[nodiscard]] auto intersects(const VertexSet & o) const -> bool
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    [[nodiscard]] auto is_subset_of(const VertexSet & o) const -> bool
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    auto operator|=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    auto operator&=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    auto operator-=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }
    auto operator^=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
    friend auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;
    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

    [[nodiscard]] auto to_vector() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v != -1; v = next(v))
            out.push_back(v);
        return out;
    }

    [[nodiscard]] auto hash() const -> std::size_t
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }

    class iterator {
      public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const VertexSet * s, int v) : s_(s), v_(v) {}
        auto operator*() const -> int { return v_; }
        auto operator++() -> iterator &
        {
            v_ = s_->next(v_);
            return *this;
        }
        auto operator++(int) -> iterator
        {
            auto t = *this;
            ++*this;
            return t;
        }
        friend auto operator==(const iterator & a, const iterator & b) -> bool { return a.v_ == b.v_; }

      private:
        const VertexSet * s_ = nullptr;
        int v_ = -1;
    };

    [[nodiscard]] auto begin() const -> iterator { return {this, first()}; }
    [[nodiscard]] auto end() const -> iterator { return {this, -1}; }

  private:
    static constexpr auto bit(int v) -> std::uint64_t { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
    auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
};

} // namespace longhole
