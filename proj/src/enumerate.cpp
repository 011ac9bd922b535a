#include "ordalg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "ordalg/error.hpp"

namespace ordalg {

namespace {

std::vector<std::size_t> refine(const Poset& p) {
  using Key = std::vector<std::size_t>;
  const auto n = static_cast<Element>(p.size());
  auto rank = [](const std::vector<Key>& keys) {
    std::map<Key, std::size_t> ids;
    for (const auto& k : keys) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [_, v] : ids) v = next++;
    std::vector<std::size_t> out;
    for (const auto& k : keys) out.push_back(ids.at(k));
    return std::pair{out, ids.size()};
  };
  std::vector<Key> keys(n);
  for (Element x = 0; x < n; ++x) keys[x] = {p.down(x).size(), p.up(x).size()};
  auto [colour, distinct] = rank(keys);
  while (true) {
    for (Element x = 0; x < n; ++x) {
      Key below, above;
      for (Element y = 0; y < n; ++y) {
        if (p.less(y, x)) below.push_back(colour[y]);
        if (p.less(x, y)) above.push_back(colour[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      Key k{colour[x], below.size()};
      k.insert(k.end(), below.begin(), below.end());
      k.insert(k.end(), above.begin(), above.end());
      keys[x] = std::move(k);
    }
    auto [next, count] = rank(keys);
    colour = std::move(next);
    if (count == distinct) break;
    distinct = count;
  }
  return colour;
}

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  const auto n = static_cast<Element>(p.size());
  const auto colour = refine(p);
  // Position k may only hold elements of the k-th colour in sorted order.
  std::vector<Element> by_colour(n);
  for (Element x = 0; x < n; ++x) by_colour[x] = x;
  std::stable_sort(by_colour.begin(), by_colour.end(), [&](Element a, Element b) { return colour[a] < colour[b]; });
  std::vector<std::size_t> slot_colour(n);
  for (Element k = 0; k < n; ++k) slot_colour[k] = colour[by_colour[k]];

  CanonicalForm best;
  bool have_best = false;
  std::string key;
  std::vector<Element> order;
  std::vector<bool> used(n, false);
  // Prefixes larger than the best key found so far are pruned.
  auto rec = [&](auto&& self, Element k) -> void {
    if (k == n) {
      if (!have_best || key < best.key) {
        best.key = key;
        best.order = order;
        have_best = true;
      }
      return;
    }
    for (Element x = 0; x < n; ++x) {
      if (used[x] || colour[x] != slot_colour[k]) continue;
      const std::size_t mark = key.size();
      for (Element i = 0; i < k; ++i) key.push_back(p.leq(order[i], x) ? '1' : '0');
      if (!have_best || key.compare(0, key.size(), best.key, 0, key.size()) <= 0) {
        used[x] = true;
        order.push_back(x);
        self(self, k + 1);
        order.pop_back();
        used[x] = false;
      }
      key.resize(mark);
    }
  };
  rec(rec, 0);
  return best;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    std::size_t k = i;
    do {
      s.insert(s.begin(), static_cast<char>('a' + k % 26));
      k /= 26;
    } while (k-- > 0);
    out.push_back(s);
  }
  return out;
}

namespace {

Poset from_key(std::size_t n, const std::string& key) {
  std::vector<ElementPair> pairs;
  std::size_t bit = 0;
  for (Element k = 1; k < n; ++k)
    for (Element i = 0; i < k; ++i)
      if (key[bit++] == '1') pairs.emplace_back(i, k);
  return Poset::build(default_labels(n), pairs);
}

}  // namespace

Poset canonical_poset(const Poset& p) { return from_key(p.size(), canonical_form(p).key); }

const std::vector<Poset>& posets_of_size(std::size_t n) {
  if (n > enumeration_guard)
    throw Error(ErrorCode::size_limit,
                "exhaustive enumeration is limited to " + std::to_string(enumeration_guard) + " elements");
  static std::mutex lock;
  static std::vector<std::vector<Poset>> cache;
  std::lock_guard guard(lock);
  if (cache.empty()) cache.push_back({Poset::build({}, std::vector<ElementPair>{})});
  while (cache.size() <= n) {
    const std::size_t m = cache.size();  // building posets of size m
    std::set<std::string> keys;
    for (const Poset& q : cache[m - 1]) {
      // The new element is maximal; its strict down-set is any down-set of q.
      const auto k = static_cast<Element>(q.size());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool closed = true;
        for (Element x = 0; x < k && closed; ++x)
          if (mask >> x & 1)
            q.down(x).for_each([&](Element y) { closed = closed && (mask >> y & 1); });
        if (!closed) continue;
        std::vector<ElementPair> pairs;
        for (auto [a, b] : q.covers()) pairs.emplace_back(a, b);
        for (Element x = 0; x < k; ++x)
          if (mask >> x & 1) pairs.emplace_back(x, k);
        keys.insert(canonical_form(Poset::build(default_labels(m), pairs)).key);
      }
    }
    std::vector<Poset> level;
    for (const auto& key : keys) level.push_back(from_key(m, key));
    cache.push_back(std::move(level));
  }
  return cache[n];
}

Poset random_poset(std::size_t n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<Element> perm(n);
  for (Element i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ElementPair> pairs;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(perm[i], perm[j]);
  return Poset::build(default_labels(n), pairs);
}

}  // namespace ordalg
