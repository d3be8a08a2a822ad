#include "gconj/enumeration.hpp"

#include <algorithm>

#include "gconj/errors.hpp"
#include "gconj/homology.hpp"

namespace gconj {

namespace {

// C(n, k) for an arbitrary-size n, without touching the shared Pascal cache.
Int choose(const Int& n, int k) {
  if (k < 0 || n < k) return Int(0);
  Int r = 1;
  for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

void require_length(const IntSeq& v, int d, const char* what) {
  if (d < 0 || v.size() != static_cast<std::size_t>(d) + 1) {
    throw LengthError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected d+1 = " +
                      std::to_string(d + 1));
  }
}

Int at_or_zero(const IntSeq& v, int i) {
  return (i >= 0 && static_cast<std::size_t>(i) < v.size()) ? v[static_cast<std::size_t>(i)] : Int(0);
}

}  // namespace

IntSeq f_vector(const Complex& c) {
  IntSeq f;
  for (const auto& layer : all_faces(c)) f.emplace_back(layer.size());
  return f;
}

IntSeq h_from_f(const IntSeq& f, int d) {
  require_length(f, d, "f-vector");
  IntSeq h(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) h[i] += sign_power(i - j) * binomial(d - j, d - i) * f[j];
  }
  return h;
}

IntSeq f_from_h(const IntSeq& h, int d) {
  require_length(h, d, "h-vector");
  IntSeq f(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) f[i] += binomial(d - j, d - i) * h[j];
  }
  return f;
}

IntSeq h_vector(const Complex& c) { return h_from_f(f_vector(c), c.d()); }

IntSeq g_vector(const Complex& c) {
  const IntSeq h = h_vector(c);
  const int d = c.d();
  IntSeq g;
  for (int i = 0; i <= d / 2; ++i) g.push_back(h[i] - at_or_zero(h, i - 1));
  return g;
}

IntSeq g_vector_full(const IntSeq& h) {
  IntSeq g;
  for (int i = 0; i <= static_cast<int>(h.size()); ++i) g.push_back(at_or_zero(h, i) - at_or_zero(h, i - 1));
  return g;
}

std::vector<std::pair<Int, int>> macaulay_expansion(const Int& a, int i) {
  std::vector<std::pair<Int, int>> terms;
  Int rem = a;
  for (int k = i; k >= 1 && rem > 0; --k) {
    // Largest n with C(n, k) <= rem; C(k, k) = 1 <= rem always holds.
    Int lo = k;
    Int hi = k + 1;
    while (choose(hi, k) <= rem) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      const Int mid = (lo + hi) / 2;
      if (choose(mid, k) <= rem) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    rem -= choose(lo, k);
    terms.emplace_back(lo, k);
  }
  return terms;
}

Int pseudo_power(const Int& a, int i) {
  Int out = 0;
  for (const auto& [n, k] : macaulay_expansion(a, i)) out += choose(n + 1, k + 1);
  return out;
}

MVectorVerdict is_m_vector(const IntSeq& seq) {
  if (seq.empty() || seq[0] != 1) return {false, 0};
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k] < 0) return {false, static_cast<int>(k)};
    const int i = static_cast<int>(k) - 1;
    if (i >= 1 && seq[k] > pseudo_power(seq[k - 1], i)) return {false, i};
  }
  return {true, std::nullopt};
}

Int euler_characteristic(const Complex& c) {
  const IntSeq f = f_vector(c);
  Int chi = 0;
  for (std::size_t k = 1; k < f.size(); ++k) chi += sign_power(static_cast<std::int64_t>(k) - 1) * f[k];
  return chi;
}

Int sphere_euler_characteristic(int k) { return 1 + sign_power(k); }

IntSeq klee_residual(const Complex& c) {
  const int d = c.d();
  const IntSeq h = h_vector(c);
  const Int excess = euler_characteristic(c) - sphere_euler_characteristic(d - 1);
  IntSeq r;
  for (int i = 0; i <= d; ++i) r.push_back(h[d - i] - h[i] - sign_power(i) * binomial(d, i) * excess);
  return r;
}

IntSeq h_prime(const IntSeq& h, const IntSeq& betti, int d) {
  require_length(h, d, "h-vector");
  IntSeq out = h;
  for (int i = 0; i <= d; ++i) {
    Int s = 0;
    for (int j = 0; j <= i - 2; ++j) s += sign_power(j - i) * at_or_zero(betti, j);
    out[i] += binomial(d, i) * s;
  }
  return out;
}

ManifoldProfile manifold_profile_from(const IntSeq& h, const IntSeq& betti, int d, bool orientable) {
  require_length(h, d, "h-vector");
  if (betti.size() != static_cast<std::size_t>(d)) {
    throw LengthError("Betti vector has length " + std::to_string(betti.size()) + ", expected d = " +
                      std::to_string(d));
  }
  ManifoldProfile m;
  m.d = d;
  m.h = h;
  m.betti = betti;
  m.orientable = orientable;
  m.h_prime = h_prime(h, betti, d);
  m.h_doubleprime = m.h_prime;
  for (int i = 1; i < d; ++i) m.h_doubleprime[i] -= binomial(d, i) * betti[i - 1];

  m.kalai_symmetric = true;
  for (int i = 0; i <= d; ++i) {
    if (m.h_doubleprime[i] != m.h_doubleprime[d - i]) m.kalai_symmetric = false;
  }

  m.g_bar_formula_holds = true;
  for (int i = 0; i <= d / 2; ++i) {
    const Int g = h[i] - at_or_zero(h, i - 1);
    m.g.push_back(g);

    Int alt = 0;
    for (int j = 1; j <= i; ++j) alt += sign_power(j) * betti[j - 1];
    m.g_hat.push_back(g + sign_power(i + 1) * binomial(d + 1, i) * alt);

    m.g_bar.push_back(m.h_doubleprime[d - i] - at_or_zero(m.h_prime, d - i + 1));

    if (i == 0) {
      m.g_bar_formula.push_back(m.g_bar.back());
      continue;
    }
    Int bracket = 1;
    for (int j = 1; j <= i; ++j) bracket += sign_power(j) * betti[d - j];
    m.g_bar_formula.push_back(g + sign_power(i + 1) * binomial(d + 1, i) * bracket);
    if (m.g_bar_formula.back() != m.g_bar.back()) m.g_bar_formula_holds = false;
  }
  m.g_hat_equals_g_bar = m.g_hat == m.g_bar;
  return m;
}

ShortSimplicialG short_simplicial_g(const Complex& c) {
  const int d = c.d();
  ShortSimplicialG out;
  out.g_tilde.assign(static_cast<std::size_t>(d) + 1, Int(0));
  for (Vertex v : c.vertices()) {
    const IntSeq g = g_vector_full(h_vector(link_in_place(c, {v})));
    for (int i = 0; i <= d; ++i) out.g_tilde[i] += at_or_zero(g, i);
  }
  const IntSeq g = g_vector_full(h_vector(c));
  out.lhs = at_or_zero(out.g_tilde, 2);
  out.rhs = 3 * at_or_zero(g, 3) + (d - 1) * at_or_zero(g, 2);
  out.identity_holds = out.lhs == out.rhs;
  return out;
}

IntSeq facet_gluing_h(const IntSeq& h1, const IntSeq& h2) {
  if (h1.size() != h2.size() || h1.empty()) throw LengthError("h-vectors of different lengths");
  IntSeq out(h1.size());
  for (std::size_t i = 0; i < h1.size(); ++i) out[i] = h1[i] + h2[i];
  out[0] -= 1;
  return out;
}

IntSeq connected_sum_g(const IntSeq& g1, const IntSeq& g2) {
  if (g1.size() != g2.size() || g1.empty()) throw LengthError("g-vectors of different lengths");
  IntSeq out(g1.size());
  out[0] = 1;
  for (std::size_t i = 1; i < g1.size(); ++i) out[i] = g1[i] + g2[i];
  if (out.size() > 1) out[1] += 1;
  return out;
}

ManifoldProfile manifold_profile(const Complex& c, FieldSpec field) {
  const ClassReport cr = classify(c, field);
  if (!cr.homology_manifold) throw NotAManifold("complex is not a closed F-homology manifold");
  return manifold_profile_from(h_vector(c), cr.betti, c.d(), cr.orientable_over_F);
}

GammaReport gamma(const Complex& c, FieldSpec field) {
  const BoundaryReport br = boundary_and_interior(c, field);
  const int d = c.d();
  const IntSeq h = h_vector(c);
  GammaReport out;
  out.interior_vertices = br.interior_face_counts[0].convert_to<std::int64_t>();
  out.gamma = at_or_zero(h, 2) - out.interior_vertices;
  out.gamma_from_h = at_or_zero(h, 2) - h[d - 1] - d * h[d];
  out.agree = out.gamma == out.gamma_from_h;
  return out;
}

}  // namespace gconj
