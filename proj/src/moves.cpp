#include "gconj/moves.hpp"

#include <algorithm>
#include <random>

#include "face_set.hpp"
#include "gconj/enumeration.hpp"
#include "gconj/errors.hpp"
#include "gconj/generators.hpp"

namespace gconj {

namespace {

Complex with_facets(std::vector<Face> facets) {
  Vertex top = 0;
  for (const Face& f : facets) top = std::max(top, f.back());
  return Complex::general(top, std::move(facets));
}

Face without(const Face& f, Vertex v) {
  Face out;
  for (Vertex x : f) {
    if (x != v) out.push_back(x);
  }
  return out;
}

Vertex max_vertex(const Complex& c) {
  const auto vs = c.vertices();
  return vs.empty() ? 0 : vs.back();
}

}  // namespace

bool is_critical(const BistellarMove& m, int d) {
  if (d % 2 == 1) return m.A.size() == m.B.size();
  return static_cast<int>(m.A.size()) == d / 2;
}

BistellarMove inverse(const BistellarMove& m) { return {m.B, m.A}; }

bool is_valid_move(const Complex& c, const BistellarMove& m) {
  const int d = c.d();
  if (!c.is_pure() || c.is_void() || m.A.empty() || m.B.empty()) return false;
  if (static_cast<int>(m.A.size() + m.B.size()) != d + 1) return false;
  if (!std::is_sorted(m.A.begin(), m.A.end()) || !std::is_sorted(m.B.begin(), m.B.end())) return false;
  if (face_difference(m.A, m.B) != m.A) return false;
  if (m.B.size() == 1) {
    const auto vs = c.vertices();
    return m.B[0] >= 1 && !std::binary_search(vs.begin(), vs.end(), m.B[0]) && c.is_facet(m.A);
  }
  std::vector<Face> star = c.star_facets(m.A);
  if (star.size() != m.B.size()) return false;
  std::vector<Face> expect;
  for (Vertex b : m.B) expect.push_back(face_union(m.A, without(m.B, b)));
  std::sort(expect.begin(), expect.end());
  return star == expect && !c.contains(m.B);
}

std::vector<BistellarMove> valid_moves(const Complex& c) {
  std::vector<BistellarMove> out;
  if (!c.is_pure() || c.is_void() || c.d() < 1) return out;
  const int d = c.d();
  const Vertex fresh = max_vertex(c) + 1;
  const auto layers = all_faces(c);
  for (int size = 1; size <= d; ++size) {
    for (const Face& a : layers[static_cast<std::size_t>(size)]) {
      if (size == d) {
        out.push_back({a, {fresh}});
        continue;
      }
      const std::vector<Face> star = c.star_facets(a);
      const auto want = static_cast<std::size_t>(d + 1 - size);
      if (star.size() != want) continue;
      Face u;
      for (const Face& f : star) u = face_union(u, face_difference(f, a));
      if (u.size() != want) continue;
      if (c.contains(u)) continue;
      out.push_back({a, u});
    }
  }
  return out;
}

Complex apply_move(const Complex& c, const BistellarMove& m) {
  if (!is_valid_move(c, m)) {
    throw InvalidMove("(" + to_string(m.A) + ", " + to_string(m.B) + ") is not applicable");
  }
  FaceSet removed;
  for (Vertex b : m.B) removed.insert(face_union(m.A, without(m.B, b)));
  std::vector<Face> facets;
  for (const Face& f : c.facets()) {
    if (!removed.count(f)) facets.push_back(f);
  }
  for (Vertex a : m.A) facets.push_back(face_union(m.B, without(m.A, a)));
  return with_facets(std::move(facets));
}

WalkLog random_walk(const Complex& start, int steps, std::uint64_t seed, const WalkPolicy& policy) {
  if (steps < 0) throw ParamError("negative step count");
  WalkLog log;
  log.seed = seed;
  log.policy = policy;
  log.start = start;
  std::mt19937_64 rng(seed);
  Complex cur = start;
  const int d = start.d();
  for (int s = 1; s <= steps; ++s) {
    std::vector<BistellarMove> pool;
    for (BistellarMove& m : valid_moves(cur)) {
      const int idx = m.index();
      if (!policy.allowed_indices.empty() &&
          std::find(policy.allowed_indices.begin(), policy.allowed_indices.end(), idx) ==
              policy.allowed_indices.end()) {
        continue;
      }
      if (policy.exclude_critical && is_critical(m, d)) continue;
      if (policy.max_vertices > 0 && idx == 0 &&
          static_cast<int>(cur.vertices().size()) + 1 > policy.max_vertices) {
        continue;
      }
      pool.push_back(std::move(m));
    }
    if (pool.empty()) {
      log.stalled = true;
      break;
    }
    std::size_t pick = 0;
    if (policy.index_weights.empty()) {
      pick = static_cast<std::size_t>(rng() % pool.size());
    } else {
      std::vector<std::uint64_t> acc;
      std::uint64_t total = 0;
      for (const BistellarMove& m : pool) {
        const auto idx = static_cast<std::size_t>(m.index());
        total += idx < policy.index_weights.size() ? static_cast<std::uint64_t>(std::max(0, policy.index_weights[idx])) : 0;
        acc.push_back(total);
      }
      if (total == 0) {
        log.stalled = true;
        break;
      }
      const std::uint64_t r = rng() % total;
      pick = static_cast<std::size_t>(std::upper_bound(acc.begin(), acc.end(), r) - acc.begin());
    }
    const BistellarMove m = pool[pick];
    cur = apply_move(cur, m);
    WalkStep step;
    step.step = s;
    step.move = m;
    step.critical = is_critical(m, d);
    step.f = f_vector(cur);
    if (policy.lefschetz_hook) step.verdict = lefschetz_test(cur, policy.hook_options, policy.hook_mode).verdict;
    log.steps.push_back(std::move(step));
  }
  log.final = cur;
  return log;
}

Complex replay(const WalkLog& log) {
  Complex cur = log.start;
  for (const WalkStep& s : log.steps) cur = apply_move(cur, s.move);
  return cur;
}

bool link_condition(const Complex& c, const Face& e) {
  if (e.size() != 2) throw ParamError("link condition needs an edge");
  const Complex le = link_in_place(c, e);
  const Complex lu = link_in_place(c, {e[0]});
  const Complex lv = link_in_place(c, {e[1]});
  FaceSet in_v;
  for (const auto& layer : all_faces(lv)) in_v.insert(layer.begin(), layer.end());
  FaceSet in_e;
  for (const auto& layer : all_faces(le)) in_e.insert(layer.begin(), layer.end());
  for (const auto& layer : all_faces(lu)) {
    for (const Face& t : layer) {
      if (in_v.count(t) && !in_e.count(t)) return false;
    }
  }
  return true;
}

Complex contract_edge(const Complex& c, const Face& e) {
  if (!link_condition(c, e)) throw LinkConditionViolated(to_string(e));
  const Vertex u = e[0], v = e[1];
  std::vector<Face> facets;
  for (const Face& f : c.facets()) {
    const bool has_u = std::binary_search(f.begin(), f.end(), u);
    const bool has_v = std::binary_search(f.begin(), f.end(), v);
    if (has_u && has_v) continue;
    Face g = f;
    if (has_v) {
      g = without(f, v);
      g.insert(std::upper_bound(g.begin(), g.end(), u), u);
    }
    facets.push_back(std::move(g));
  }
  if (facets.empty()) throw DegenerateContraction("no facet survives contracting " + to_string(e));
  std::vector<Face> sorted = facets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DegenerateContraction("contracting " + to_string(e) + " merges distinct facets");
  }
  Complex out = with_facets(std::move(facets));
  if (!out.is_pure() || out.facets().size() != sorted.size()) {
    throw DegenerateContraction("contracting " + to_string(e) + " does not give a pure complex");
  }
  return out;
}

namespace {

Complex identify(const Complex& c1, const Complex& c2, const Face& s1, const Face& s2,
                 const std::vector<Vertex>& phi, bool keep) {
  if (c1.d() != c2.d()) throw ParamError("complexes of different dimension");
  if (!c1.is_facet(s1)) throw NotAFacet(to_string(s1) + " in the first complex");
  if (!c2.is_facet(s2)) throw NotAFacet(to_string(s2) + " in the second complex");
  const std::vector<Vertex> map = phi.empty() ? std::vector<Vertex>(s2.begin(), s2.end()) : phi;
  Face image = map;
  std::sort(image.begin(), image.end());
  if (map.size() != s1.size() || image != s2) throw ParamError("phi is not a bijection onto the second facet");

  std::vector<Vertex> to(static_cast<std::size_t>(c2.n_vertices()) + 1, 0);
  for (std::size_t k = 0; k < map.size(); ++k) to[static_cast<std::size_t>(map[k])] = s1[k];
  Vertex next = c1.n_vertices();
  for (Vertex w : c2.vertices()) {
    if (!std::binary_search(s2.begin(), s2.end(), w)) to[static_cast<std::size_t>(w)] = ++next;
  }
  std::vector<Face> facets;
  for (const Face& f : c1.facets()) {
    if (keep || f != s1) facets.push_back(f);
  }
  for (const Face& f : c2.facets()) {
    if (f == s2) continue;
    Face g;
    for (Vertex w : f) g.push_back(to[static_cast<std::size_t>(w)]);
    std::sort(g.begin(), g.end());
    facets.push_back(std::move(g));
  }
  return Complex::general(next, std::move(facets));
}

}  // namespace

Complex connected_sum(const Complex& c1, const Complex& c2, const Face& s1, const Face& s2,
                      const std::vector<Vertex>& phi) {
  return identify(c1, c2, s1, s2, phi, false);
}

Complex glue_facets(const Complex& c1, const Complex& c2, const Face& s1, const Face& s2,
                    const std::vector<Vertex>& phi) {
  return identify(c1, c2, s1, s2, phi, true);
}

Complex stacked_sphere(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < d + 1) throw ParamError("stacked_sphere needs d >= 1 and n >= d + 1");
  Complex cur = boundary_simplex(d);
  std::mt19937_64 rng(seed);
  for (int v = d + 2; v <= n; ++v) {
    const Face facet = cur.facets()[static_cast<std::size_t>(rng() % cur.facets().size())];
    cur = apply_move(cur, {facet, {v}});
  }
  return cur;
}

}  // namespace gconj
