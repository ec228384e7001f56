#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace critwin {

using Vertex = int;

// Fixed-universe bitset of vertices {0, ..., universe-1}. Sets over a
// universe of at most 128 vertices live entirely inline.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);

    static VertexSet full(int universe);
    static VertexSet from_mask(int universe, std::uint64_t mask);

    template <typename Range>
    static VertexSet from_range(int universe, const Range& members)
    {
        VertexSet s(universe);
        for (Vertex v : members)
            s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const
    {
        return (words_[static_cast<std::size_t>(v) / word_bits] >> (v % word_bits)) & 1U;
    }
    void insert(Vertex v) { words_[static_cast<std::size_t>(v) / word_bits] |= Word{1} << (v % word_bits); }
    void erase(Vertex v) { words_[static_cast<std::size_t>(v) / word_bits] &= ~(Word{1} << (v % word_bits)); }

    int size() const;
    bool empty() const;

    // -1 when there is no such element.
    Vertex first() const;
    Vertex next(Vertex after) const;

    std::vector<Vertex> to_vector() const;
    // Low 64 members as a mask; only meaningful for universe <= 64.
    std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.universe_ == b.universe_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
    }

    bool intersects(const VertexSet& other) const;
    int intersection_size(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    std::span<const Word> words() const { return {words_.data(), words_.size()}; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
        Vertex operator*() const { return at_; }
        iterator& operator++()
        {
            at_ = set_->next(at_);
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator& o) const { return at_ == o.at_; }

    private:
        const VertexSet* set_ = nullptr;
        Vertex at_ = -1;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    int universe_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

} // namespace critwin
