#include "critwin/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace critwin {

namespace {

std::size_t words_for(int universe)
{
    return (static_cast<std::size_t>(universe) + VertexSet::word_bits - 1) / VertexSet::word_bits;
}

} // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0)
{
    if (universe < 0)
        throw std::invalid_argument("vertex set universe must be nonnegative");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        if (v < 0 || v >= universe)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe");
        insert(v);
    }
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~Word{0};
    if (int tail = universe % word_bits; tail != 0)
        s.words_.back() = (Word{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask)
{
    VertexSet s(universe);
    if (!s.words_.empty())
        s.words_[0] = mask & full(std::min(universe, word_bits)).words_[0];
    return s;
}

int VertexSet::size() const
{
    int count = 0;
    for (Word w : words_)
        count += std::popcount(w);
    return count;
}

bool VertexSet::empty() const
{
    for (Word w : words_)
        if (w != 0)
            return false;
    return true;
}

Vertex VertexSet::first() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return static_cast<Vertex>(i * word_bits + std::countr_zero(words_[i]));
    return -1;
}

Vertex VertexSet::next(Vertex after) const
{
    auto start = static_cast<std::size_t>(after) + 1;
    if (start >= static_cast<std::size_t>(universe_))
        return -1;
    std::size_t i = start / word_bits;
    Word w = words_[i] & (~Word{0} << (start % word_bits));
    while (true) {
        if (w != 0)
            return static_cast<Vertex>(i * word_bits + std::countr_zero(w));
        if (++i == words_.size())
            return -1;
        w = words_[i];
    }
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

int VertexSet::intersection_size(const VertexSet& other) const
{
    int count = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        count += std::popcount(words_[i] & other.words_[i]);
    return count;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

} // namespace critwin
