#include "dicut/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dicut {

WeightedDigraph finish_graph(std::vector<std::string> names,
                             std::map<std::pair<int, int>, Rat> w) {
  WeightedDigraph g;
  g.names_ = std::move(names);
  for (int i = 0; i < static_cast<int>(g.names_.size()); ++i) {
    if (!g.index_.emplace(g.names_[i], i).second)
      throw std::invalid_argument("duplicate vertex id '" + g.names_[i] + "'");
  }
  g.out_.assign(g.names_.size(), Rat(0));
  g.in_.assign(g.names_.size(), Rat(0));
  for (auto& [key, weight] : w) {
    if (weight == 0) continue;
    if (weight < 0)
      throw std::invalid_argument("negative edge weight on (" + g.names_[key.first] +
                                  ", " + g.names_[key.second] + ")");
    WeightedDigraph::Edge e{key.first, key.second, weight};
    g.out_[e.tail] += e.w;
    g.in_[e.head] += e.w;
    g.total_ += e.w;
    g.edges_.push_back(std::move(e));
  }
  return g;
}

WeightedDigraph WeightedDigraph::from_edges(
    const std::vector<std::tuple<std::string, std::string, Rat>>& edges,
    const std::vector<std::string>& extra_vertices) {
  std::vector<std::string> names;
  std::map<std::string, int, std::less<>> seen;
  auto intern = [&](const std::string& id) {
    auto it = seen.find(id);
    if (it != seen.end()) return it->second;
    int idx = static_cast<int>(names.size());
    names.push_back(id);
    seen.emplace(id, idx);
    return idx;
  };
  for (const auto& v : extra_vertices) intern(v);
  std::map<std::pair<int, int>, Rat> w;
  for (const auto& [tail, head, weight] : edges) {
    if (tail == head)
      throw std::invalid_argument("self-loop on vertex '" + tail + "'");
    int t = intern(tail), h = intern(head);
    w[{t, h}] += weight;
  }
  return finish_graph(std::move(names), std::move(w));
}

int WeightedDigraph::index_of(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

WeightedDigraph WeightedDigraph::transposed() const {
  std::map<std::pair<int, int>, Rat> w;
  for (const auto& e : edges_) w[{e.head, e.tail}] = e.w;
  return finish_graph(names_, std::move(w));
}

WeightedDigraph WeightedDigraph::scaled(const Rat& lambda) const {
  if (lambda <= 0) throw std::invalid_argument("scale factor must be positive");
  std::map<std::pair<int, int>, Rat> w;
  for (const auto& e : edges_) w[{e.tail, e.head}] = e.w * lambda;
  return finish_graph(names_, std::move(w));
}

WeightedDigraph WeightedDigraph::weighted_union(const WeightedDigraph& a, const Rat& la,
                                                const WeightedDigraph& b, const Rat& lb,
                                                const std::string& pa,
                                                const std::string& pb) {
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  std::vector<std::string> verts;
  for (const auto& v : a.vertices()) verts.push_back(pa + v);
  for (const auto& v : b.vertices()) verts.push_back(pb + v);
  for (const auto& e : a.edges())
    edges.emplace_back(pa + a.name(e.tail), pa + a.name(e.head), e.w * la);
  for (const auto& e : b.edges())
    edges.emplace_back(pb + b.name(e.tail), pb + b.name(e.head), e.w * lb);
  return from_edges(edges, verts);
}

Rat bias_of(const WeightedDigraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("vertex index");
  if (g.is_isolated(v))
    throw std::domain_error("bias undefined for isolated vertex '" + g.name(v) + "'");
  return Rat(g.out_weight(v) - g.in_weight(v)) / g.degree(v);
}

Rat bias_of(const WeightedDigraph& g, std::string_view vertex) {
  int v = g.index_of(vertex);
  if (v < 0) throw std::invalid_argument("unknown vertex '" + std::string(vertex) + "'");
  return bias_of(g, v);
}

CutValue cut_value(const WeightedDigraph& g, const Assignment& x) {
  if (g.total_weight() == 0) throw std::domain_error("graph has zero total weight");
  std::vector<int> bit(g.num_vertices(), -1);
  for (const auto& [id, b] : x.bits) {
    int v = g.index_of(id);
    if (v >= 0) bit[v] = b ? 1 : 0;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (bit[v] < 0 && !g.is_isolated(v))
      throw std::invalid_argument("assignment misses non-isolated vertex '" +
                                  g.name(v) + "'");
  CutValue out{Rat(0), Rat(0)};
  for (const auto& e : g.edges())
    if (bit[e.tail] == 1 && bit[e.head] == 0) out.satisfied += e.w;
  out.normalized = out.satisfied / g.total_weight();
  return out;
}

namespace {

OptResult opt_bruteforce(const WeightedDigraph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("bruteforce limited to 24 vertices");
  // Incidence lists for Gray-code updates: toggling vertex v changes only
  // terms of edges incident to v.
  struct Inc {
    int other;
    const Rat* w;
    bool v_is_tail;
  };
  std::vector<std::vector<Inc>> inc(n);
  for (const auto& e : g.edges()) {
    inc[e.tail].push_back({e.head, &e.w, true});
    inc[e.head].push_back({e.tail, &e.w, false});
  }
  std::vector<int> bit(n, 0);
  Rat cur(0), best(0);
  unsigned long best_code = 0;
  const unsigned long total = 1ul << n;
  for (unsigned long code = 1; code < total; ++code) {
    int v = __builtin_ctzl(code);  // Gray step: toggle vertex v
    // Remove v's old contributions, flip, add new ones.
    for (const auto& ic : inc[v]) {
      int tb = ic.v_is_tail ? bit[v] : bit[ic.other];
      int hb = ic.v_is_tail ? bit[ic.other] : bit[v];
      if (tb == 1 && hb == 0) cur -= *ic.w;
    }
    bit[v] ^= 1;
    for (const auto& ic : inc[v]) {
      int tb = ic.v_is_tail ? bit[v] : bit[ic.other];
      int hb = ic.v_is_tail ? bit[ic.other] : bit[v];
      if (tb == 1 && hb == 0) cur += *ic.w;
    }
    if (cur > best) {
      best = cur;
      best_code = code ^ (code >> 1);  // Gray decode of the current state
    }
  }
  OptResult res;
  res.normalized = best / g.total_weight();
  for (int v = 0; v < n; ++v)
    res.argmax.bits[g.name(v)] = static_cast<int>((best_code >> v) & 1u);
  return res;
}

OptResult opt_frontier_dp(const WeightedDigraph& g, const std::vector<std::string>& ordering) {
  const int n = g.num_vertices();
  if (static_cast<int>(ordering.size()) != n)
    throw std::invalid_argument("ordering must list every vertex exactly once");
  std::vector<int> order(n), pos(n, -1);
  for (int k = 0; k < n; ++k) {
    int v = g.index_of(ordering[k]);
    if (v < 0) throw std::invalid_argument("ordering names unknown vertex '" + ordering[k] + "'");
    if (pos[v] >= 0) throw std::invalid_argument("ordering repeats vertex '" + ordering[k] + "'");
    order[k] = v;
    pos[v] = k;
  }

  // last_pos[v]: last step at which v is touched by an edge; v can leave the
  // frontier after that step.
  std::vector<int> last_pos(n, -1);
  for (const auto& e : g.edges()) {
    int hi = std::max(pos[e.tail], pos[e.head]);
    last_pos[e.tail] = std::max(last_pos[e.tail], hi);
    last_pos[e.head] = std::max(last_pos[e.head], hi);
  }

  // frontier after step k = placed vertices with last_pos > k
  std::vector<std::vector<int>> frontier_after(n);
  {
    std::vector<int> cur;
    for (int k = 0; k < n; ++k) {
      cur.push_back(order[k]);
      std::erase_if(cur, [&](int v) { return last_pos[v] <= k; });
      if (static_cast<int>(cur.size()) > 20)
        throw std::invalid_argument("frontier width exceeds 20 under this ordering");
      frontier_after[k] = cur;
    }
  }

  struct Entry {
    Rat weight;
    int parent;  // state index in the previous layer
    int bit;
  };
  // One layer per step: map frontier bit-pattern -> best entry.
  std::vector<std::vector<std::pair<unsigned, Entry>>> layers(n);
  std::unordered_map<unsigned, Entry> cur_states;
  cur_states.emplace(0u, Entry{Rat(0), -1, -1});
  std::vector<int> prev_frontier;  // frontier before current step

  for (int k = 0; k < n; ++k) {
    int v = order[k];
    // Edges between v and already-placed vertices; placed endpoints are in
    // prev_frontier by construction (their last_pos >= k).
    struct Nb {
      int slot;  // index in prev_frontier
      const Rat* w;
      bool v_is_tail;
    };
    std::vector<Nb> nbs;
    auto slot_of = [&](int u) {
      for (int s = 0; s < static_cast<int>(prev_frontier.size()); ++s)
        if (prev_frontier[s] == u) return s;
      return -1;
    };
    for (const auto& e : g.edges()) {
      if (e.tail == v && pos[e.head] < k) nbs.push_back({slot_of(e.head), &e.w, true});
      if (e.head == v && pos[e.tail] < k) nbs.push_back({slot_of(e.tail), &e.w, false});
    }

    // Map old frontier slots to new frontier slots.
    const auto& nf = frontier_after[k];
    std::vector<int> new_slot_of_old(prev_frontier.size(), -1);
    int v_new_slot = -1;
    for (int s = 0; s < static_cast<int>(nf.size()); ++s) {
      if (nf[s] == v) {
        v_new_slot = s;
        continue;
      }
      for (int t = 0; t < static_cast<int>(prev_frontier.size()); ++t)
        if (prev_frontier[t] == nf[s]) new_slot_of_old[t] = s;
    }

    std::unordered_map<unsigned, Entry> next_states;
    int prev_index = 0;
    layers[k].reserve(cur_states.size());
    for (const auto& [state, entry] : cur_states) {
      layers[k].push_back({state, entry});
      for (int b = 0; b <= 1; ++b) {
        Rat gain(0);
        for (const auto& nb : nbs) {
          int ob = (state >> nb.slot) & 1u;
          int tb = nb.v_is_tail ? b : ob;
          int hb = nb.v_is_tail ? ob : b;
          if (tb == 1 && hb == 0) gain += *nb.w;
        }
        unsigned ns = 0;
        for (int t = 0; t < static_cast<int>(prev_frontier.size()); ++t)
          if (new_slot_of_old[t] >= 0 && ((state >> t) & 1u))
            ns |= 1u << new_slot_of_old[t];
        if (v_new_slot >= 0 && b) ns |= 1u << v_new_slot;
        Rat w = entry.weight + gain;
        auto it = next_states.find(ns);
        if (it == next_states.end() || w > it->second.weight)
          next_states[ns] = Entry{std::move(w), prev_index, b};
      }
      ++prev_index;
    }
    cur_states = std::move(next_states);
    prev_frontier = nf;
  }

  // Final layer has the empty frontier only.
  Entry best = cur_states.at(0u);
  OptResult res;
  res.normalized = best.weight / g.total_weight();
  // Walk parents back through the stored layers to recover bits.
  Entry e = best;
  for (int k = n - 1; k >= 0; --k) {
    res.argmax.bits[g.name(order[k])] = e.bit;
    e = layers[k][e.parent].second;
  }
  return res;
}

}  // namespace

OptResult opt_value(const WeightedDigraph& g, OptMethod method,
                    const std::vector<std::string>& ordering) {
  if (g.total_weight() == 0) throw std::domain_error("graph has zero total weight");
  switch (method) {
    case OptMethod::Bruteforce:
      return opt_bruteforce(g);
    case OptMethod::FrontierDP:
      return opt_frontier_dp(g, ordering);
  }
  throw std::logic_error("unreachable");
}

int frontier_width(const WeightedDigraph& g, const std::vector<std::string>& ordering) {
  const int n = g.num_vertices();
  std::vector<int> pos(n, -1);
  for (int k = 0; k < static_cast<int>(ordering.size()); ++k) {
    int v = g.index_of(ordering[k]);
    if (v < 0) throw std::invalid_argument("unknown vertex in ordering");
    pos[v] = k;
  }
  std::vector<int> last_pos(n, -1);
  for (const auto& e : g.edges()) {
    int hi = std::max(pos[e.tail], pos[e.head]);
    last_pos[e.tail] = std::max(last_pos[e.tail], hi);
    last_pos[e.head] = std::max(last_pos[e.head], hi);
  }
  int width = 0;
  for (int k = 0; k < n; ++k) {
    int cur = 0;
    for (int v = 0; v < n; ++v)
      if (pos[v] >= 0 && pos[v] <= k && last_pos[v] > k) ++cur;
    width = std::max(width, cur);
  }
  return width;
}

}  // namespace dicut
