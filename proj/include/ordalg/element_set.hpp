#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ordalg {

using Element = std::uint32_t;

// A subset of a finite carrier {0, ..., n-1}, one bit per element.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& subtract(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  ElementSet complement() const {
    ElementSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Smallest member, or universe() when empty.
  Element first() const noexcept { return next(0); }
  // Smallest member >= from, or universe() when none.
  Element next(Element from) const noexcept {
    std::size_t w = from >> 6;
    if (w >= words_.size()) return static_cast<Element>(universe_);
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits != 0)
        return static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (++w == words_.size()) return static_cast<Element>(universe_);
      bits = words_[w];
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    for (Element e = first(); e < universe_; e = next(e + 1)) out.push_back(e);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (Element e = first(); e < universe_; e = next(e + 1)) f(e);
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ordalg
