#include <algorithm>

#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"

namespace ocpoly {
namespace {

Halfspace box_upper(int d, int i) {
  Halfspace h{std::vector<Rational>(d, 0), 1, {HalfspaceKind::BoxUpper, {i}}};
  h.coefficients[i - 1] = 1;
  return h;
}

Halfspace box_lower(int d, int i) {
  Halfspace h{std::vector<Rational>(d, 0), 0, {HalfspaceKind::BoxLower, {i}}};
  h.coefficients[i - 1] = -1;
  return h;
}

// x_lower >= x_upper
Halfspace order_edge(int d, const Cover& c) {
  Halfspace h{std::vector<Rational>(d, 0), 0, {HalfspaceKind::OrderEdge, {c.lower, c.upper}}};
  h.coefficients[c.upper - 1] = 1;
  h.coefficients[c.lower - 1] = -1;
  return h;
}

Halfspace chain_sum(int d, const Chain& chain) {
  Halfspace h{std::vector<Rational>(d, 0), 1, {HalfspaceKind::Chain, chain}};
  for (int e : chain) h.coefficients[e - 1] = 1;
  return h;
}

void append_box(HalfspaceSystem& system) {
  for (int i = 1; i <= system.dimension; ++i) {
    system.halfspaces.push_back(box_upper(system.dimension, i));
    system.halfspaces.push_back(box_lower(system.dimension, i));
  }
}

// Singleton chains coincide with the box upper bounds and are not repeated.
void append_chains(HalfspaceSystem& system, const Poset& p) {
  for (const auto& chain : maximal_chains(p))
    if (chain.size() >= 2) system.halfspaces.push_back(chain_sum(system.dimension, chain));
}

}  // namespace

Rational evaluate(const Halfspace& h, const Point& v) {
  if (h.coefficients.size() != v.size())
    fail(ErrorKind::DimensionMismatch, "halfspace has " + std::to_string(h.coefficients.size()) +
                                           " coefficients, point has " +
                                           std::to_string(v.size()) + " coordinates");
  Rational sum = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (h.coefficients[k] != 0) sum += h.coefficients[k] * v[k];
  return sum - h.bound;
}

HalfspaceSystem hrep_order(const Poset& p) {
  HalfspaceSystem system{p.size(), {}};
  append_box(system);
  for (const auto& c : p.covers()) system.halfspaces.push_back(order_edge(p.size(), c));
  return system;
}

HalfspaceSystem hrep_chain(const Poset& p) {
  HalfspaceSystem system{p.size(), {}};
  append_box(system);
  append_chains(system, p);
  return system;
}

HalfspaceSystem hrep_order_chain(const EdgePartition& partition) {
  const int d = partition.base().size();
  HalfspaceSystem system{d, {}};
  append_box(system);
  for (const auto& c : partition.order_edges()) system.halfspaces.push_back(order_edge(d, c));
  append_chains(system, chain_part(partition));
  return system;
}

Point indicator_vector(const ElementSet& subset, int d) {
  Point v(d, 0);
  for (int e : subset) {
    if (e < 1 || e > d) fail(ErrorKind::IndexOutOfRange, std::to_string(e) + " is not in [d]");
    v[e - 1] = 1;
  }
  return v;
}

std::string format_halfspace(const Halfspace& h) {
  std::string out;
  for (std::size_t k = 0; k < h.coefficients.size(); ++k) {
    const Rational& a = h.coefficients[k];
    if (a == 0) continue;
    Rational magnitude = abs(a);
    std::string var = "x" + std::to_string(k + 1);
    std::string term = magnitude == 1 ? var : to_compact_string(magnitude) + " " + var;
    if (out.empty())
      out = (a < 0 ? "-" : "") + term;
    else
      out += (a < 0 ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  return out + " <= " + to_compact_string(h.bound);
}

std::string tag_name(const HalfspaceTag& tag) {
  auto join = [&](const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < tag.elements.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(tag.elements[i]);
    }
    return s;
  };
  switch (tag.kind) {
    case HalfspaceKind::BoxLower: return "box-lower " + join(",");
    case HalfspaceKind::BoxUpper: return "box-upper " + join(",");
    case HalfspaceKind::OrderEdge: return "order " + join("<");
    case HalfspaceKind::Chain: return "chain " + join("<");
    case HalfspaceKind::Other: return "other";
  }
  return "other";
}

}  // namespace ocpoly
