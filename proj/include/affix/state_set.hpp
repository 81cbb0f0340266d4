#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace affix {

using State = std::uint32_t;

/// Fixed-universe bitset over states 0..size-1. Used as the node type of
/// every subset search (determinization, reset words, oracles).
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe) : size_(universe), bits_((universe + 63) / 64, 0) {}

    static StateSet full(std::size_t universe)
    {
        StateSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) {
            s.insert(static_cast<State>(i));
        }
        return s;
    }

    std::size_t universe() const { return size_; }

    void insert(State q) { bits_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void erase(State q) { bits_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }
    bool contains(State q) const { return (bits_[q >> 6] >> (q & 63)) & 1U; }

    bool empty() const
    {
        for (auto w : bits_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : bits_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool intersects(const StateSet& other) const
    {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if ((bits_[i] & other.bits_[i]) != 0) {
                return true;
            }
        }
        return false;
    }

    bool is_subset_of(const StateSet& other) const
    {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if ((bits_[i] & ~other.bits_[i]) != 0) {
                return false;
            }
        }
        return true;
    }

    StateSet& operator|=(const StateSet& other)
    {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            bits_[i] |= other.bits_[i];
        }
        return *this;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                f(static_cast<State>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<State> to_vector() const
    {
        std::vector<State> out;
        for_each([&](State q) { out.push_back(q); });
        return out;
    }

    std::size_t hash() const
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : bits_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

} // namespace affix
