#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lcf/cover.hpp"
#include "lcf/graph.hpp"
#include "lcf/rigidity.hpp"

namespace lcf {

// The count-function machinery behind the combinatorial rank formula.
// For integers t and d with d >= 2 and d >= 2t-1:
//
//   f_0(T) = t|V(T)|                                   (used when d >= 2t)
//   f_1(T) = |T|          if T ⊆ E and |V(T)| <= 2t    (used when d = 2t-1)
//          = t|V(T)| - 1  if T ⊆ E and |V(T)| = 2t+1
//          = t|V(T)|      otherwise
//
// f_1 is not submodular (the edge set of K_{d+2} is a circuit of the
// d-dimensional rigidity matroid while satisfying the t|V| count), so
// its Dilworth truncation f_1^D — the partition-minimized version — is
// used to induce a matroid. The induced-matroid rank functions are
//
//   r_0(T) = min{ |T'| + f_0(T \ T') : T' ⊆ T }
//   r_1(T) = min{ |T'| + Σ f_1(T_j) : T' ⊆ T, {T_j} partitions T \ T' }

struct CountFunctionParams {
  int t = 1;
  int d = 2;

  // 1 iff d = 2t-1 (f_1 applies), 0 iff d >= 2t (f_0 applies)
  int selector() const { return d == 2 * t - 1 ? 1 : 0; }

  void validate() const {
    if (d < 2) throw ParamsInvalid("need d >= 2");
    if (t < 1) throw ParamsInvalid("need t >= 1");
    if (d < 2 * t - 1) throw ParamsInvalid("need d >= 2t-1");
    if (selector() == 1 && t < 2)
      throw ParamsInvalid("f1 requires t >= 2");
  }
};

namespace detail {

inline void check_elements_exist(const LoopedSimpleGraph& g,
                                 const std::vector<Element>& T) {
  for (const Element& e : T) {
    bool ok = e.is_loop ? g.has_loop(Loop{e.v, e.ord}) : g.has_edge(e.u, e.v);
    if (!ok) throw UnknownElement("element set contains an element not in g");
  }
}

inline int spanned_vertex_count(const std::vector<Element>& T) {
  std::vector<VertexId> vs;
  for (const Element& e : T) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return static_cast<int>(vs.size());
}

}  // namespace detail

inline int f0(const LoopedSimpleGraph& g, const std::vector<Element>& T,
              int t) {
  if (t < 1) throw ParamsInvalid("f0 requires t >= 1");
  detail::check_elements_exist(g, T);
  return t * detail::spanned_vertex_count(T);
}

inline int f1(const LoopedSimpleGraph& g, const std::vector<Element>& T,
              int t) {
  if (t < 2) throw ParamsInvalid("f1 requires t >= 2");
  detail::check_elements_exist(g, T);
  bool has_loop =
      std::any_of(T.begin(), T.end(), [](const Element& e) { return e.is_loop; });
  int nv = detail::spanned_vertex_count(T);
  if (has_loop || nv >= 2 * t + 2) return t * nv;
  if (nv == 2 * t + 1) return t * nv - 1;
  return static_cast<int>(T.size());
}

namespace detail {

// Per-element spanned-vertex bitmasks plus loop flags, for the subset
// dynamic programs below.
struct ElementMasks {
  std::vector<std::uint64_t> vmask;
  std::vector<char> is_loop;
};

inline ElementMasks element_masks(const LoopedSimpleGraph& g,
                                  const std::vector<Element>& T) {
  if (g.vertex_count() > 64)
    throw BudgetExceeded("count-function machinery limited to 64 vertices");
  ElementMasks m;
  for (const Element& e : T) {
    m.vmask.push_back((1ULL << e.u) | (1ULL << e.v));
    m.is_loop.push_back(e.is_loop);
  }
  return m;
}

inline int f1_of_block(const ElementMasks& m, std::uint32_t block, int t) {
  std::uint64_t verts = 0;
  int size = 0;
  bool has_loop = false;
  for (std::uint32_t b = block; b;) {
    int i = __builtin_ctz(b);
    b &= b - 1;
    verts |= m.vmask[i];
    has_loop = has_loop || m.is_loop[i];
    ++size;
  }
  int nv = __builtin_popcountll(verts);
  if (has_loop || nv >= 2 * t + 2) return t * nv;
  if (nv == 2 * t + 1) return t * nv - 1;
  return size;
}

}  // namespace detail

struct DilworthResult {
  int value = 0;
  std::vector<std::vector<Element>> partition;
};

/// The Dilworth truncation f_1^D(T): the minimum of Σ f_1(T_j) over all
/// partitions of T, with a witnessing partition. Computed exactly by a
/// subset DP (3^|T| block evaluations); |T| beyond the cap raises
/// BudgetExceeded.
inline DilworthResult dilworth_f1(const LoopedSimpleGraph& g,
                                  const std::vector<Element>& T, int t,
                                  int max_elements = 12) {
  if (t < 2) throw ParamsInvalid("f1 requires t >= 2");
  detail::check_elements_exist(g, T);
  const int m = static_cast<int>(T.size());
  if (m > max_elements || m > 24)
    throw BudgetExceeded("dilworth_f1 limited to " +
                         std::to_string(std::min(max_elements, 24)) +
                         " elements");
  if (m == 0) return {0, {}};
  detail::ElementMasks masks = detail::element_masks(g, T);
  const std::uint32_t full = (m == 32) ? 0xffffffffu : ((1u << m) - 1);
  std::vector<int> best(full + 1, std::numeric_limits<int>::max());
  std::vector<std::uint32_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t S = 1; S <= full; ++S) {
    std::uint32_t low = S & (~S + 1);
    // blocks containing the lowest element of S
    for (std::uint32_t sub = S;; sub = (sub - 1) & S) {
      if (sub & low) {
        int rest = best[S ^ sub];
        if (rest != std::numeric_limits<int>::max()) {
          int cand = rest + detail::f1_of_block(masks, sub, t);
          if (cand < best[S]) {
            best[S] = cand;
            choice[S] = sub;
          }
        }
      }
      if (sub == 0) break;
    }
  }
  DilworthResult result;
  result.value = best[full];
  for (std::uint32_t S = full; S;) {
    std::uint32_t block = choice[S];
    std::vector<Element> part;
    for (std::uint32_t b = block; b;) {
      int i = __builtin_ctz(b);
      b &= b - 1;
      part.push_back(T[i]);
    }
    result.partition.push_back(std::move(part));
    S ^= block;
  }
  return result;
}

/// Rank of T in the matroid induced by f_i (the hat-f functions):
/// exact minimum over all T' ⊆ T — and, for i = 1, all partitions of
/// the remainder — by the same subset DP.
inline int induced_rank(const LoopedSimpleGraph& g,
                        const std::vector<Element>& T,
                        const CountFunctionParams& params, int i,
                        int max_elements = 16) {
  params.validate();
  if (i != params.selector())
    throw ParamsInvalid("selector mismatch: i must be " +
                        std::to_string(params.selector()) +
                        " for these params");
  detail::check_elements_exist(g, T);
  const int t = params.t;
  const int m = static_cast<int>(T.size());
  if (m > max_elements || m > 24)
    throw BudgetExceeded("induced_rank limited to " +
                         std::to_string(std::min(max_elements, 24)) +
                         " elements");
  if (m == 0) return 0;

  if (i == 0) {
    // min over W ⊆ V of |T| - |{elements inside W}| + t|V(inside W)|
    std::vector<std::uint64_t> vmask;
    for (const Element& e : T)
      vmask.push_back((1ULL << e.u) | (1ULL << e.v));
    std::vector<VertexId> verts;
    for (const Element& e : T) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int nv = static_cast<int>(verts.size());
    if (nv > 24) throw BudgetExceeded("induced_rank span too large");
    int best = m;  // W = empty: everything in T'
    for (std::uint32_t wsel = 0; wsel < (1u << nv); ++wsel) {
      std::uint64_t W = 0;
      for (int b = 0; b < nv; ++b)
        if (wsel >> b & 1) W |= 1ULL << verts[b];
      std::uint64_t span = 0;
      int inside = 0;
      for (int e = 0; e < m; ++e)
        if ((vmask[e] & ~W) == 0) {
          ++inside;
          span |= vmask[e];
        }
      best = std::min(best, m - inside + t * __builtin_popcountll(span));
    }
    return best;
  }

  detail::ElementMasks masks = detail::element_masks(g, T);
  const std::uint32_t full = (m == 32) ? 0xffffffffu : ((1u << m) - 1);
  std::vector<int> best(full + 1, std::numeric_limits<int>::max());
  best[0] = 0;
  for (std::uint32_t S = 1; S <= full; ++S) {
    std::uint32_t low = S & (~S + 1);
    // lowest element goes to T' ...
    best[S] = best[S ^ low] + 1;
    // ... or into a block of the partition
    for (std::uint32_t sub = S;; sub = (sub - 1) & S) {
      if (sub & low) {
        int rest = best[S ^ sub];
        if (rest != std::numeric_limits<int>::max()) {
          int cand = rest + detail::f1_of_block(masks, sub, t);
          best[S] = std::min(best[S], cand);
        }
      }
      if (sub == 0) break;
    }
  }
  return best[full];
}

/// Value of an admissible non-intersecting cover:
/// |T| + t|X_0| + k(2t^2 + t - 1). Validates every invariant and names
/// the violated one.
inline int val_t(const LoopedSimpleGraph& g, const Cover& cover, int t) {
  if (t < 1) throw ParamsInvalid("val_t requires t >= 1");
  detail::check_elements_exist(g, cover.excluded);
  {
    auto ex = cover.excluded;
    std::sort(ex.begin(), ex.end());
    if (std::adjacent_find(ex.begin(), ex.end()) != ex.end())
      throw InvalidCover("excluded set lists an element twice");
  }
  const int n = g.vertex_count();
  std::vector<int> member_of(n, -1);  // 0 = X0, j >= 1 = part j
  auto mark = [&](const std::vector<VertexId>& member, int id) {
    for (VertexId v : member) {
      if (v < 0 || v >= n) throw InvalidCover("cover member vertex out of range");
      if (member_of[v] != -1)
        throw InvalidCover("cover is not non-intersecting: vertex " +
                           std::to_string(v) + " in two members");
      member_of[v] = id;
    }
  };
  mark(cover.X0, 0);
  for (std::size_t j = 0; j < cover.parts.size(); ++j) {
    if (static_cast<int>(cover.parts[j].size()) != 2 * t + 1)
      throw InvalidCover("part " + std::to_string(j) + " must have 2t+1 vertices");
    mark(cover.parts[j], static_cast<int>(j) + 1);
  }
  auto in_T = [&](const Element& e) {
    return std::find(cover.excluded.begin(), cover.excluded.end(), e) !=
           cover.excluded.end();
  };
  for (const Loop& l : g.loops()) {
    bool excluded = in_T(Element::loop(l));
    bool in_X0 = member_of[l.v] == 0;
    if (!excluded && !in_X0)
      throw InvalidCover("admissibility: a loop of G-T is not induced by X0");
    if (excluded && in_X0)
      throw InvalidCover("admissibility: a loop of T is induced by X0");
  }
  for (const Edge& e : g.edges()) {
    if (in_T(Element::edge(e.u, e.v))) continue;
    if (member_of[e.u] < 0 || member_of[e.u] != member_of[e.v])
      throw InvalidCover("an edge of G-T is not induced by any member");
  }
  return static_cast<int>(cover.excluded.size()) +
         t * static_cast<int>(cover.X0.size()) +
         static_cast<int>(cover.parts.size()) * (2 * t * t + t - 1);
}

namespace detail {

struct CoverKey {
  int excluded_size;
  int x0_size;
  std::vector<std::vector<VertexId>> members;

  bool operator<(const CoverKey& o) const {
    if (excluded_size != o.excluded_size) return excluded_size < o.excluded_size;
    if (x0_size != o.x0_size) return x0_size < o.x0_size;
    return members < o.members;
  }
};

}  // namespace detail

/// The cover formula for the rank of G^{[d-t]}:
///   r_d^lc(G^{[d-t]}) = (d-t)|V| + min val_t(X)
/// minimized over excluded sets T and admissible covers — single looped
/// member X_0 when d >= 2t, non-intersecting covers with (2t+1)-parts
/// when d = 2t-1. Given the members, the cheapest admissible T is
/// forced: the loops at V \ X_0 plus the edges induced by no member.
inline RankReport rank_by_cover(const LoopedSimpleGraph& g, int d, int t) {
  CountFunctionParams params{t, d};
  params.validate();
  const int n = g.vertex_count();
  if (n > 24) throw BudgetExceeded("rank_by_cover limited to 24 vertices");
  const bool parts_mode = params.selector() == 1;

  int best_val = std::numeric_limits<int>::max();
  Cover best_cover;
  detail::CoverKey best_key;

  auto consider = [&](std::uint32_t x0_mask,
                      const std::vector<std::vector<VertexId>>& parts) {
    std::vector<int> member_of(n, -1);
    for (int v = 0; v < n; ++v)
      if (x0_mask >> v & 1) member_of[v] = 0;
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (VertexId v : parts[j]) member_of[v] = static_cast<int>(j) + 1;

    std::vector<Element> excluded;
    for (const Loop& l : g.loops())
      if (member_of[l.v] != 0) excluded.push_back(Element::loop(l));
    for (const Edge& e : g.edges())
      if (member_of[e.u] < 0 || member_of[e.u] != member_of[e.v])
        excluded.push_back(Element::edge(e.u, e.v));

    int val = static_cast<int>(excluded.size()) +
              t * __builtin_popcount(x0_mask) +
              static_cast<int>(parts.size()) * (2 * t * t + t - 1);
    if (val > best_val) return;

    Cover cover;
    for (int v = 0; v < n; ++v)
      if (x0_mask >> v & 1) cover.X0.push_back(v);
    cover.parts = parts;
    for (auto& p : cover.parts) std::sort(p.begin(), p.end());
    std::sort(cover.parts.begin(), cover.parts.end());
    std::sort(excluded.begin(), excluded.end());
    cover.excluded = std::move(excluded);

    detail::CoverKey key{static_cast<int>(cover.excluded.size()),
                         static_cast<int>(cover.X0.size()),
                         {}};
    key.members.push_back(cover.X0);
    for (const auto& p : cover.parts) key.members.push_back(p);

    if (val < best_val || (val == best_val && key < best_key)) {
      best_val = val;
      best_cover = std::move(cover);
      best_key = std::move(key);
    }
  };

  for (std::uint32_t x0_mask = 0; x0_mask < (1u << n); ++x0_mask) {
    if (!parts_mode) {
      consider(x0_mask, {});
      continue;
    }
    // enumerate families of disjoint (2t+1)-subsets of V \ X0; parts
    // are opened at their minimum vertex, so each family comes up once
    std::vector<VertexId> avail;
    for (int v = 0; v < n; ++v)
      if (!(x0_mask >> v & 1)) avail.push_back(v);
    std::vector<std::vector<VertexId>> parts;
    std::function<void(std::size_t, std::vector<VertexId>&)> rec =
        [&](std::size_t idx, std::vector<VertexId>& pool) {
          consider(x0_mask, parts);
          if (idx >= pool.size()) return;
          // the vertex pool[idx] is in no part
          rec(idx + 1, pool);
          // or it opens a part with 2t companions chosen after it
          const int companions = 2 * t;
          std::vector<int> sel(companions);
          std::vector<VertexId> rest(pool.begin() + idx + 1, pool.end());
          if (static_cast<int>(rest.size()) < companions) return;
          for (int i = 0; i < companions; ++i) sel[i] = i;
          while (true) {
            std::vector<VertexId> part{pool[idx]};
            for (int i : sel) part.push_back(rest[i]);
            std::vector<VertexId> next_pool;
            for (std::size_t i = idx + 1; i < pool.size(); ++i)
              if (std::find(part.begin(), part.end(), pool[i]) == part.end())
                next_pool.push_back(pool[i]);
            parts.push_back(std::move(part));
            rec(0, next_pool);
            parts.pop_back();
            // next combination
            int i = companions - 1;
            while (i >= 0 &&
                   sel[i] == static_cast<int>(rest.size()) - companions + i)
              --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < companions; ++j) sel[j] = sel[j - 1] + 1;
          }
        };
    rec(0, avail);
  }

  RankReport report;
  report.rank = (d - t) * n + best_val;
  report.trials = 0;
  report.modulus_bits = 0;
  report.method = RankMethod::kCoverFormula;
  report.certificate = best_cover;
  return report;
}

/// Value of an admissible 1-thin cover of g - L', an upper bound on
/// r_2^lc(g):  |L'| + 2|X_0| + Σ (2|X_i| - 3).
inline int thin_cover_value(const LoopedSimpleGraph& g,
                            const ThinCover2D& cover) {
  const int n = g.vertex_count();
  for (const Loop& l : cover.Lprime)
    if (!g.has_loop(l)) throw InvalidCover("L' contains a loop not in g");
  {
    auto lp = cover.Lprime;
    std::sort(lp.begin(), lp.end());
    if (std::adjacent_find(lp.begin(), lp.end()) != lp.end())
      throw InvalidCover("L' lists a loop twice");
  }
  std::vector<std::vector<VertexId>> members;
  members.push_back(cover.X0);
  for (const auto& p : cover.parts) {
    if (p.size() < 2) throw InvalidCover("thin-cover parts need >= 2 vertices");
    members.push_back(p);
  }
  std::vector<std::vector<char>> in_member;
  for (auto& mem : members) {
    std::sort(mem.begin(), mem.end());
    if (std::adjacent_find(mem.begin(), mem.end()) != mem.end())
      throw InvalidCover("cover member lists a vertex twice");
    std::vector<char> flags(n, 0);
    for (VertexId v : mem) {
      if (v < 0 || v >= n) throw InvalidCover("cover member vertex out of range");
      flags[v] = 1;
    }
    in_member.push_back(std::move(flags));
  }
  // 1-thin: distinct members share at most one vertex
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      int shared = 0;
      for (VertexId v : members[a]) shared += in_member[b][v];
      if (shared > 1) throw InvalidCover("cover is not 1-thin");
    }
  auto in_Lprime = [&](const Loop& l) {
    return std::find(cover.Lprime.begin(), cover.Lprime.end(), l) !=
           cover.Lprime.end();
  };
  for (const Loop& l : g.loops()) {
    if (in_Lprime(l)) {
      if (in_member[0][l.v])
        throw InvalidCover("a loop of L' is induced by X0");
    } else if (!in_member[0][l.v]) {
      throw InvalidCover("a loop of g - L' is not induced by X0");
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (const auto& flags : in_member)
      if (flags[e.u] && flags[e.v]) {
        covered = true;
        break;
      }
    if (!covered) throw InvalidCover("an edge is not induced by any member");
  }
  int value = static_cast<int>(cover.Lprime.size()) +
              2 * static_cast<int>(cover.X0.size());
  for (const auto& p : cover.parts)
    value += 2 * static_cast<int>(p.size()) - 3;
  return value;
}

}  // namespace lcf
