#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cylgame {

using AtomId = std::int32_t;

/// Fixed-universe bitset over dense atom ids. All binary operations require
/// both operands to share the same universe size.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  AtomSet(std::size_t universe, std::initializer_list<AtomId> atoms) : AtomSet(universe) {
    for (AtomId a : atoms) insert(a);
  }

  static AtomSet full(std::size_t universe) {
    AtomSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(AtomId a) const {
    return (words_[static_cast<std::size_t>(a) >> 6] >> (a & 63)) & 1U;
  }
  void insert(AtomId a) { words_[static_cast<std::size_t>(a) >> 6] |= std::uint64_t{1} << (a & 63); }
  void erase(AtomId a) { words_[static_cast<std::size_t>(a) >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool intersects(const AtomSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const AtomSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  AtomId first() const { return next(0); }
  /// Smallest member >= from, or -1.
  AtomId next(AtomId from) const {
    auto i = static_cast<std::size_t>(from);
    if (i >= universe_) return -1;
    std::size_t w = i >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (bits) return static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (++w >= words_.size()) return -1;
      bits = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::vector<AtomId> members() const {
    std::vector<AtomId> out;
    out.reserve(count());
    for_each([&](AtomId a) { out.push_back(a); });
    return out;
  }

  AtomSet& operator|=(const AtomSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  AtomSet& operator&=(const AtomSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  AtomSet& operator-=(const AtomSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  AtomSet complement() const {
    AtomSet r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }
  friend bool operator==(const AtomSet&, const AtomSet&) = default;
  friend bool operator<(const AtomSet& a, const AtomSet& b) { return a.words_ < b.words_; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cylgame
