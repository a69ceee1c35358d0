// Copyright 2026 The p2qaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "p2q/finite_group.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace p2q {

namespace {

void check_latin(const std::vector<elem_t>& table, int n) {
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      elem_t v = table[static_cast<std::size_t>(i) * n + j];
      if (v >= n || seen[v]) throw ConditionError("table row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      elem_t v = table[static_cast<std::size_t>(i) * n + j];
      if (seen[v]) throw ConditionError("table column " + std::to_string(j) + " is not a permutation");
      seen[v] = 1;
    }
  }
}

elem_t find_identity(const std::vector<elem_t>& table, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      if (table[static_cast<std::size_t>(e) * n + j] != j ||
          table[static_cast<std::size_t>(j) * n + e] != j) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<elem_t>(e);
  }
  throw ConditionError("table has no two-sided identity");
}

void check_associativity(const std::vector<elem_t>& table, int n, AssocCheck check) {
  auto mul = [&](elem_t a, elem_t b) { return table[static_cast<std::size_t>(a) * n + b]; };
  if (check == AssocCheck::kFull || n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ConditionError("associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
    return;
  }
  // Seeded by the order so repeated constructions check the same triples.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> pick(0, n - 1);
  long long trials = 10LL * n * n;
  for (long long t = 0; t < trials; ++t) {
    elem_t a = static_cast<elem_t>(pick(rng));
    elem_t b = static_cast<elem_t>(pick(rng));
    elem_t c = static_cast<elem_t>(pick(rng));
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw ConditionError("associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<elem_t> table, int order,
                         std::vector<std::string> labels, AssocCheck check) {
  if (order <= 0) throw ConditionError("group order must be positive");
  if (order > kMaxTableOrder)
    throw ResourceError("group order " + std::to_string(order) + " exceeds table limit " +
                        std::to_string(kMaxTableOrder));
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw ConditionError("table size does not match order");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(order))
    throw ConditionError("labels size does not match order");

  check_latin(table, order);
  auto data = std::make_shared<Data>();
  data->n = order;
  data->identity = find_identity(table, order);
  check_associativity(table, order, check);

  data->inverse.resize(order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (table[static_cast<std::size_t>(a) * order + b] == data->identity) {
        if (table[static_cast<std::size_t>(b) * order + a] != data->identity)
          throw ConditionError("left and right inverses differ; not a group");
        data->inverse[a] = static_cast<elem_t>(b);
        break;
      }
    }
  }

  data->elem_order.resize(order);
  for (int a = 0; a < order; ++a) {
    int ord = 1;
    elem_t x = static_cast<elem_t>(a);
    while (x != data->identity) {
      x = table[static_cast<std::size_t>(x) * order + a];
      if (++ord > order) throw ConditionError("element has no finite order; not a group");
    }
    data->elem_order[a] = ord;
  }

  data->abelian = true;
  for (int a = 0; a < order && data->abelian; ++a)
    for (int b = a + 1; b < order; ++b)
      if (table[static_cast<std::size_t>(a) * order + b] !=
          table[static_cast<std::size_t>(b) * order + a]) {
        data->abelian = false;
        break;
      }

  data->table = std::move(table);
  data->labels = std::move(labels);
  d_ = std::move(data);
}

elem_t FiniteGroup::pow(elem_t a, long long e) const {
  int n = element_order(a);
  long long r = e % n;
  if (r < 0) r += n;
  elem_t acc = identity();
  elem_t base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

// --- morphisms --------------------------------------------------------------

Morphism identity_morphism(const FiniteGroup& g) {
  std::vector<elem_t> img(g.order());
  for (int i = 0; i < g.order(); ++i) img[i] = static_cast<elem_t>(i);
  return Morphism{g, g, std::move(img)};
}

bool is_homomorphism(const Morphism& m) {
  int n = m.source.order();
  if (m.images.size() != static_cast<std::size_t>(n)) return false;
  for (elem_t v : m.images)
    if (v >= m.target.order()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.images[m.source.mul(static_cast<elem_t>(i), static_cast<elem_t>(j))] !=
          m.target.mul(m.images[i], m.images[j]))
        return false;
  return true;
}

bool is_bijective(const Morphism& m) {
  if (m.source.order() != m.target.order()) return false;
  if (m.images.size() != static_cast<std::size_t>(m.source.order())) return false;
  std::vector<char> seen(m.target.order());
  for (elem_t v : m.images) {
    if (v >= m.target.order() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_automorphism(const Morphism& m) {
  return m.source.same(m.target) && is_bijective(m) && is_homomorphism(m);
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!g.target.same(f.source))
    throw InvariantError("compose: inner target and outer source differ");
  std::vector<elem_t> img(g.images.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = f.images[g.images[i]];
  return Morphism{g.source, f.target, std::move(img)};
}

Morphism inverse_automorphism(const Morphism& m) {
  if (!is_bijective(m)) throw InvariantError("inverse_automorphism: map is not bijective");
  std::vector<elem_t> img(m.images.size());
  for (std::size_t i = 0; i < m.images.size(); ++i) img[m.images[i]] = static_cast<elem_t>(i);
  return Morphism{m.target, m.source, std::move(img)};
}

// --- actions ----------------------------------------------------------------

void validate_action(const ActionSpec& act) {
  int nk = act.actor.order();
  int nh = act.acted.order();
  if (act.maps.size() != static_cast<std::size_t>(nk))
    throw ConditionError("action must assign one map per actor element");
  for (int k = 0; k < nk; ++k) {
    Morphism m{act.acted, act.acted, act.maps[k]};
    if (!is_bijective(m) || !is_homomorphism(m))
      throw ConditionError("action of element " + std::to_string(k) +
                           " is not an automorphism of the acted group");
  }
  const auto& id_map = act.maps[act.actor.identity()];
  for (int h = 0; h < nh; ++h)
    if (id_map[h] != h) throw ConditionError("action of the identity is not the identity map");
  for (int k1 = 0; k1 < nk; ++k1)
    for (int k2 = 0; k2 < nk; ++k2) {
      const auto& prod = act.maps[act.actor.mul(static_cast<elem_t>(k1), static_cast<elem_t>(k2))];
      for (int h = 0; h < nh; ++h)
        if (prod[h] != act.maps[k1][act.maps[k2][h]])
          throw ConditionError("action is not a homomorphism into Aut(H)");
    }
}

ActionSpec trivial_action(const FiniteGroup& k, const FiniteGroup& h) {
  std::vector<elem_t> id(h.order());
  for (int i = 0; i < h.order(); ++i) id[i] = static_cast<elem_t>(i);
  ActionSpec act{k, h, std::vector<std::vector<elem_t>>(k.order(), id)};
  return act;
}

ActionSpec action_from_generator(const FiniteGroup& k, const FiniteGroup& h,
                                 elem_t gen, const std::vector<elem_t>& gen_map) {
  if (k.element_order(gen) != k.order())
    throw ConditionError("action_from_generator: element does not generate the actor");
  ActionSpec act = trivial_action(k, h);
  std::vector<elem_t> cur_map = act.maps[k.identity()];
  elem_t cur = k.identity();
  for (int j = 1; j < k.order(); ++j) {
    cur = k.mul(cur, gen);
    std::vector<elem_t> next(h.order());
    for (int x = 0; x < h.order(); ++x) next[x] = gen_map[cur_map[x]];
    cur_map = std::move(next);
    act.maps[cur] = cur_map;
  }
  validate_action(act);
  return act;
}

// --- constructors -----------------------------------------------------------

FiniteGroup cyclic(int n) {
  if (n < 1) throw ConditionError("cyclic: order 0 rejected");
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = static_cast<elem_t>((i + j) % n);
  return FiniteGroup(std::move(table), n);
}

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k) {
  long long n = static_cast<long long>(h.order()) * k.order();
  if (n > kMaxTableOrder)
    throw ResourceError("direct product order " + std::to_string(n) + " exceeds table limit");
  int nk = k.order();
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int h1 = 0; h1 < h.order(); ++h1)
    for (int k1 = 0; k1 < nk; ++k1)
      for (int h2 = 0; h2 < h.order(); ++h2)
        for (int k2 = 0; k2 < nk; ++k2) {
          std::size_t a = static_cast<std::size_t>(h1) * nk + k1;
          std::size_t b = static_cast<std::size_t>(h2) * nk + k2;
          table[a * n + b] = static_cast<elem_t>(
              h.mul(static_cast<elem_t>(h1), static_cast<elem_t>(h2)) * nk +
              k.mul(static_cast<elem_t>(k1), static_cast<elem_t>(k2)));
        }
  return FiniteGroup(std::move(table), static_cast<int>(n));
}

FiniteGroup semidirect(const FiniteGroup& h, const FiniteGroup& k, const ActionSpec& act) {
  if (!act.actor.same(k) || !act.acted.same(h))
    throw ConditionError("semidirect: action actor/acted must be the given groups");
  validate_action(act);
  long long n = static_cast<long long>(h.order()) * k.order();
  if (n > kMaxTableOrder)
    throw ResourceError("semidirect product order " + std::to_string(n) + " exceeds table limit");
  int nk = k.order();
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int h1 = 0; h1 < h.order(); ++h1)
    for (int k1 = 0; k1 < nk; ++k1)
      for (int h2 = 0; h2 < h.order(); ++h2)
        for (int k2 = 0; k2 < nk; ++k2) {
          std::size_t a = static_cast<std::size_t>(h1) * nk + k1;
          std::size_t b = static_cast<std::size_t>(h2) * nk + k2;
          elem_t hh = h.mul(static_cast<elem_t>(h1), act.maps[k1][h2]);
          table[a * n + b] = static_cast<elem_t>(
              hh * nk + k.mul(static_cast<elem_t>(k1), static_cast<elem_t>(k2)));
        }
  return FiniteGroup(std::move(table), static_cast<int>(n));
}

FiniteGroup as_group(const FiniteGroup& g, const std::vector<elem_t>& elements) {
  int m = static_cast<int>(elements.size());
  if (m == 0) throw ConditionError("as_group: empty subset");
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) {
    if (i > 0 && elements[i] <= elements[i - 1])
      throw ConditionError("as_group: elements must be sorted ascending");
    pos[elements[i]] = i;
  }
  std::vector<elem_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = pos[g.mul(elements[i], elements[j])];
      if (p < 0) throw ConditionError("as_group: subset is not closed under multiplication");
      table[static_cast<std::size_t>(i) * m + j] = static_cast<elem_t>(p);
    }
  return FiniteGroup(std::move(table), m);
}

// --- structural queries ------------------------------------------------------

std::vector<elem_t> center(const FiniteGroup& g) {
  std::vector<elem_t> out;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(static_cast<elem_t>(z), static_cast<elem_t>(x)) !=
          g.mul(static_cast<elem_t>(x), static_cast<elem_t>(z))) {
        central = false;
        break;
      }
    if (central) out.push_back(static_cast<elem_t>(z));
  }
  return out;
}

std::vector<elem_t> closure(const FiniteGroup& g, std::vector<elem_t> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<elem_t> bfs;
  bfs.push_back(g.identity());
  seen[g.identity()] = 1;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (elem_t x : gens) {
      elem_t t = g.mul(bfs[i], x);
      if (!seen[t]) {
        seen[t] = 1;
        bfs.push_back(t);
      }
    }
  std::sort(bfs.begin(), bfs.end());
  return bfs;
}

std::vector<elem_t> derived_subgroup(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<elem_t> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      elem_t c = g.commutator(static_cast<elem_t>(a), static_cast<elem_t>(b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return closure(g, comms);
}

std::vector<elem_t> sylow(const FiniteGroup& g, int r) {
  if (r < 2 || g.order() % r != 0)
    throw ConditionError("sylow: " + std::to_string(r) + " does not divide the group order");
  int target = 1;
  for (int n = g.order(); n % r == 0; n /= r) target *= r;

  auto is_r_power = [r](int k) {
    while (k % r == 0) k /= r;
    return k == 1;
  };

  std::vector<elem_t> sub = {g.identity()};
  while (static_cast<int>(sub.size()) < target) {
    bool grew = false;
    for (int x = 0; x < g.order(); ++x) {
      if (!is_r_power(g.element_order(static_cast<elem_t>(x)))) continue;
      if (std::binary_search(sub.begin(), sub.end(), static_cast<elem_t>(x))) continue;
      std::vector<elem_t> gens(sub);
      gens.push_back(static_cast<elem_t>(x));
      std::vector<elem_t> bigger = closure(g, std::move(gens));
      if (static_cast<int>(bigger.size()) <= target && is_r_power(static_cast<int>(bigger.size()))) {
        sub = std::move(bigger);
        grew = true;
        if (static_cast<int>(sub.size()) == target) break;
      }
    }
    if (!grew) throw InvariantError("sylow: search stalled below full r-part");
  }
  return sub;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<elem_t>& sub) {
  std::vector<char> in(g.order(), 0);
  for (elem_t s : sub) in[s] = 1;
  for (elem_t s : sub)
    for (int x = 0; x < g.order(); ++x)
      if (!in[g.conj(s, static_cast<elem_t>(x))]) return false;
  return true;
}

std::vector<elem_t> minimal_generating_set(const FiniteGroup& g) {
  std::vector<elem_t> gens;
  std::size_t cur_size = 1;
  std::vector<char> in_sub(g.order(), 0);
  in_sub[g.identity()] = 1;
  while (cur_size < static_cast<std::size_t>(g.order())) {
    int best = -1;
    std::size_t best_size = cur_size;
    for (int x = 0; x < g.order(); ++x) {
      if (in_sub[x]) continue;
      std::vector<elem_t> trial(gens);
      trial.push_back(static_cast<elem_t>(x));
      std::size_t sz = closure(g, std::move(trial)).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
        if (best_size == static_cast<std::size_t>(g.order())) break;
      }
    }
    if (best < 0) throw InvariantError("minimal_generating_set: no growth possible");
    gens.push_back(static_cast<elem_t>(best));
    std::fill(in_sub.begin(), in_sub.end(), 0);
    for (elem_t e : closure(g, gens)) in_sub[e] = 1;
    cur_size = best_size;
  }
  return gens;
}

// --- generator-chain extension engine ----------------------------------------

namespace detail {

namespace {

// BFS multiplication chain for <gens>: every (element, generator) edge in an
// order where `from` is always assigned before use. Checking a candidate
// image tuple against all edges proves the extension is a homomorphism on the
// generated subgroup (induction over word length).
struct GenChain {
  struct Edge {
    elem_t from;
    elem_t to;
    std::uint8_t gen;
    bool defines;
  };
  std::vector<Edge> edges;
  int subgroup_size = 0;
};

GenChain build_chain(const FiniteGroup& g, const std::vector<elem_t>& gens,
                     std::size_t n_gens) {
  GenChain c;
  std::vector<char> seen(g.order(), 0);
  std::vector<elem_t> bfs;
  bfs.push_back(g.identity());
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t j = 0; j < n_gens; ++j) {
      elem_t t = g.mul(bfs[i], gens[j]);
      bool defines = !seen[t];
      if (defines) {
        seen[t] = 1;
        bfs.push_back(t);
      }
      c.edges.push_back({bfs[i], t, static_cast<std::uint8_t>(j), defines});
    }
  c.subgroup_size = static_cast<int>(bfs.size());
  return c;
}

struct Scratch {
  std::vector<elem_t> img;
  std::vector<std::uint64_t> def_at;
  std::vector<std::uint64_t> hit_at;
  std::uint64_t epoch = 0;
};

bool extend(const GenChain& chain, const FiniteGroup& g1, const FiniteGroup& g2,
            const std::vector<elem_t>& images, Scratch& s) {
  ++s.epoch;
  s.img[g1.identity()] = g2.identity();
  s.def_at[g1.identity()] = s.epoch;
  s.hit_at[g2.identity()] = s.epoch;
  for (const auto& e : chain.edges) {
    elem_t u = g2.mul(s.img[e.from], images[e.gen]);
    if (e.defines) {
      if (s.hit_at[u] == s.epoch) return false;  // not injective
      s.hit_at[u] = s.epoch;
      s.img[e.to] = u;
      s.def_at[e.to] = s.epoch;
    } else if (s.img[e.to] != u) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<int, int>> element_invariants(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> inv(n);
  for (int x = 0; x < n; ++x) {
    int cent = 0;
    for (int y = 0; y < n; ++y)
      if (g.mul(static_cast<elem_t>(x), static_cast<elem_t>(y)) ==
          g.mul(static_cast<elem_t>(y), static_cast<elem_t>(x)))
        ++cent;
    inv[x] = {g.element_order(static_cast<elem_t>(x)), cent};
  }
  return inv;
}

void for_each_embedding(
    const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<elem_t>& gens,
    const std::vector<std::vector<elem_t>>& cands,
    const std::function<bool(const std::vector<elem_t>&)>& sink) {
  if (gens.empty()) {
    std::vector<elem_t> img(g1.order(), g2.identity());
    sink(img);
    return;
  }
  std::vector<GenChain> chains;
  chains.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    chains.push_back(build_chain(g1, gens, i + 1));

  Scratch s;
  s.img.resize(g1.order());
  s.def_at.resize(g1.order(), 0);
  s.hit_at.resize(g2.order(), 0);
  std::vector<elem_t> images(gens.size());

  std::function<bool(std::size_t)> rec = [&](std::size_t level) -> bool {
    for (elem_t c : cands[level]) {
      images[level] = c;
      if (!extend(chains[level], g1, g2, images, s)) continue;
      if (level + 1 == gens.size()) {
        if (!sink(s.img)) return false;
      } else if (!rec(level + 1)) {
        return false;
      }
    }
    return true;
  };
  rec(0);
}

}  // namespace detail

// --- isomorphism -------------------------------------------------------------

std::optional<Morphism> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.is_abelian() != g2.is_abelian()) return std::nullopt;

  auto inv1 = detail::element_invariants(g1);
  auto inv2 = detail::element_invariants(g2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  if (derived_subgroup(g1).size() != derived_subgroup(g2).size()) return std::nullopt;

  std::vector<elem_t> gens = minimal_generating_set(g1);
  std::vector<std::vector<elem_t>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int x = 0; x < g2.order(); ++x)
      if (inv2[x] == inv1[gens[i]]) cands[i].push_back(static_cast<elem_t>(x));
    if (cands[i].empty()) return std::nullopt;
  }

  std::optional<Morphism> found;
  detail::for_each_embedding(g1, g2, gens, cands,
                             [&](const std::vector<elem_t>& img) {
                               found = Morphism{g1, g2, img};
                               return false;
                             });
  return found;
}

bool is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace p2q
