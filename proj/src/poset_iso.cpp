#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "ocpoly/error.hpp"
#include "ocpoly/poset.hpp"

namespace ocpoly {
namespace {

using Key = std::tuple<int, int, int>;  // height, lower covers, upper covers

std::vector<Key> element_keys(const Poset& p) {
  const int d = p.size();
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.strictly_below(a)) < std::popcount(p.strictly_below(b));
  });
  std::vector<int> height(d + 1, 0);
  for (int e : order)
    for (int l : p.lower_covers(e)) height[e] = std::max(height[e], height[l] + 1);
  std::vector<Key> keys(d);
  for (int e = 1; e <= d; ++e)
    keys[e - 1] = {height[e], static_cast<int>(p.lower_covers(e).size()),
                   static_cast<int>(p.upper_covers(e).size())};
  return keys;
}

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  const int d = p.size();
  const auto keys = element_keys(p);
  std::vector<int> elements(d);
  for (int i = 0; i < d; ++i) elements[i] = i + 1;
  std::stable_sort(elements.begin(), elements.end(),
                   [&](int a, int b) { return keys[a - 1] < keys[b - 1]; });

  // Runs of equal keys; only permutations inside a run are tried.
  std::vector<std::vector<int>> classes;
  for (int e : elements) {
    if (classes.empty() || keys[classes.back().front() - 1] != keys[e - 1]) classes.push_back({});
    classes.back().push_back(e);
  }

  std::vector<std::uint8_t> header;
  header.push_back(static_cast<std::uint8_t>(d));
  for (int e : elements) {
    auto [h, in, out] = keys[e - 1];
    header.push_back(static_cast<std::uint8_t>(h));
    header.push_back(static_cast<std::uint8_t>(in));
    header.push_back(static_cast<std::uint8_t>(out));
  }

  std::vector<std::uint8_t> best;
  std::vector<int> best_seq;
  std::vector<int> seq(d);
  std::vector<std::uint8_t> adjacency(static_cast<std::size_t>(d) * d);
  while (true) {
    int pos = 0;
    for (const auto& cls : classes)
      for (int e : cls) seq[pos++] = e;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        adjacency[static_cast<std::size_t>(a) * d + b] = p.has_cover(seq[a], seq[b]) ? 1 : 0;
    if (best_seq.empty() || adjacency < best) {
      best = adjacency;
      best_seq = seq;
    }
    int c = static_cast<int>(classes.size()) - 1;
    for (; c >= 0; --c)
      if (std::next_permutation(classes[c].begin(), classes[c].end())) break;
    if (c < 0) break;
  }

  CanonicalForm form;
  form.code = header;
  form.code.insert(form.code.end(), best.begin(), best.end());
  form.labeling.assign(d, 0);
  for (int i = 0; i < d; ++i) form.labeling[best_seq[i] - 1] = i + 1;
  return form;
}

Poset canonical_poset(const Poset& p) { return relabel(p, canonical_form(p).labeling); }

bool are_isomorphic(const Poset& p, const Poset& q) {
  return p.size() == q.size() && p.covers().size() == q.covers().size() &&
         canonical_form(p).code == canonical_form(q).code;
}

std::vector<Poset> enumerate_posets_up_to_iso(int n, const Limits& limits) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n > limits.max_iso_elements)
    fail(ErrorKind::LimitExceeded,
         "isomorphism-class enumeration capped at n <= " + std::to_string(limits.max_iso_elements));
  std::vector<Poset> current{antichain_poset(1)};
  for (int m = 2; m <= n; ++m) {
    // Every poset on [m] arises from one on [m-1] by adding a maximal
    // element whose lower covers form an antichain.
    std::map<std::vector<std::uint8_t>, Poset> next;
    for (const auto& q : current) {
      for (const auto& a : antichains(q)) {
        std::vector<Cover> covers = q.covers();
        for (int e : a) covers.push_back({e, m});
        Poset p = Poset::from_covers(m, covers);
        auto form = canonical_form(p);
        if (!next.count(form.code)) next.emplace(form.code, relabel(p, form.labeling));
      }
    }
    current.clear();
    for (auto& [code, poset] : next) current.push_back(std::move(poset));
  }
  return current;
}

}  // namespace ocpoly
