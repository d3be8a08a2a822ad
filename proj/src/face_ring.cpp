#include "gconj/face_ring.hpp"

#include <algorithm>
#include <random>

#include "face_set.hpp"
#include "gconj/enumeration.hpp"
#include "gconj/errors.hpp"
#include "gconj/homology.hpp"
#include "gconj/modular.hpp"

namespace gconj {

using modp::u64;

namespace {

// Monomials of one degree in the m surviving variables, stored as ascending
// variable lists and indexed by colex rank: sum_k C(a_k + k, k + 1).
struct DegreeTable {
  std::vector<std::vector<int>> monos;
  std::vector<std::uint32_t> up;  // up[r * m + j] = rank of monos[r] * y_j
};

std::vector<u64> unit(std::size_t size, std::size_t at) {
  std::vector<u64> v(size, 0);
  v[at] = 1;
  return v;
}

}  // namespace

struct ArtinianReduction::Impl {
  LinearForms forms;
  u64 p = 0;
  std::size_t cap = 0;
  int d = 0;
  int n = 0;
  int m = 0;
  bool lsop = false;

  std::vector<std::vector<u64>> image;  // image[col] = x_col in terms of y
  std::vector<u64> omega;               // ω in terms of y
  std::vector<std::vector<Face>> nonfaces;  // minimal nonfaces by size, in column ids
  std::vector<std::vector<std::size_t>> choose;

  std::vector<DegreeTable> tables;
  std::vector<modp::EchelonBasis> ideal;       // image of the face ideal, per degree
  std::vector<std::vector<std::uint32_t>> standard;  // non-pivot columns, per degree

  std::size_t binom(int a, int b) const {
    if (a < 0 || b < 0 || b > a) return 0;
    return choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  std::size_t size_of(int t) const {
    if (t == 0) return 1;
    if (m == 0) return 0;
    return binom(m + t - 1, t);
  }

  std::size_t rank_of(const std::vector<int>& a) const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < a.size(); ++k) r += binom(a[k] + static_cast<int>(k), static_cast<int>(k) + 1);
    return r;
  }

  void grow_choose(int upto) {
    while (static_cast<int>(choose.size()) <= upto) {
      const std::size_t row = choose.size();
      std::vector<std::size_t> next(row + 1, 1);
      for (std::size_t j = 1; j < row; ++j) next[j] = choose[row - 1][j - 1] + choose[row - 1][j];
      choose.push_back(std::move(next));
    }
  }

  void ensure_table(int t) {
    while (static_cast<int>(tables.size()) <= t) {
      const int deg = static_cast<int>(tables.size());
      grow_choose(m + deg + 2);
      const std::size_t size = size_of(deg);
      if (size > cap || size_of(deg + 1) > cap) {
        throw CapExceeded("degree " + std::to_string(deg + 1) + " needs " + std::to_string(size_of(deg + 1)) +
                          " monomials, above the cap of " + std::to_string(cap));
      }
      DegreeTable tab;
      tab.monos.resize(size);
      std::vector<int> cur;
      auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == deg) {
          tab.monos[rank_of(cur)] = cur;
          return;
        }
        for (int v = start; v < m; ++v) {
          cur.push_back(v);
          self(self, v);
          cur.pop_back();
        }
      };
      if (size > 0) rec(rec, 0);
      tab.up.resize(size * static_cast<std::size_t>(m));
      for (std::size_t r = 0; r < size; ++r) {
        for (int j = 0; j < m; ++j) {
          std::vector<int> next = tab.monos[r];
          next.insert(std::upper_bound(next.begin(), next.end(), j), j);
          tab.up[r * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
              static_cast<std::uint32_t>(rank_of(next));
        }
      }
      tables.push_back(std::move(tab));
    }
  }

  // Product of a degree-t element with a linear form.
  std::vector<u64> times_linear(int t, const std::vector<u64>& v, const std::vector<u64>& lin) {
    ensure_table(t);
    std::vector<u64> out(size_of(t + 1), 0);
    const auto& up = tables[static_cast<std::size_t>(t)].up;
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (!v[r]) continue;
      for (int j = 0; j < m; ++j) {
        if (!lin[j]) continue;
        u64& slot = out[up[r * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)]];
        slot = (slot + modp::mul(v[r], lin[j], p)) % p;
      }
    }
    return out;
  }

  void ensure_ideal(int t) {
    while (static_cast<int>(ideal.size()) <= t) {
      const int deg = static_cast<int>(ideal.size());
      ensure_table(deg);
      const std::size_t size = size_of(deg);
      modp::EchelonBasis basis(size, p);
      if (deg >= 1 && size > 0) {
        const auto& prev = ideal[static_cast<std::size_t>(deg - 1)];
        const auto& up = tables[static_cast<std::size_t>(deg - 1)].up;
        for (const auto& row : prev.rows()) {
          for (int j = 0; j < m && !basis.full(); ++j) {
            std::vector<u64> v(size, 0);
            for (const auto& [col, val] : row) {
              v[up[col * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)]] = val;
            }
            basis.insert(std::move(v));
          }
          if (basis.full()) break;
        }
        if (static_cast<std::size_t>(deg) < nonfaces.size()) {
          for (const Face& nf : nonfaces[static_cast<std::size_t>(deg)]) {
            if (basis.full()) break;
            std::vector<u64> v = image[static_cast<std::size_t>(nf[0])];
            for (std::size_t q = 1; q < nf.size(); ++q) {
              v = times_linear(static_cast<int>(q), v, image[static_cast<std::size_t>(nf[q])]);
            }
            basis.insert(std::move(v));
          }
        }
      }
      std::vector<std::uint32_t> free_cols;
      for (std::size_t col = 0; col < size; ++col) {
        if (!basis.is_pivot(col)) free_cols.push_back(static_cast<std::uint32_t>(col));
      }
      ideal.push_back(std::move(basis));
      standard.push_back(std::move(free_cols));
    }
  }

  // Coordinates of a degree-t element in the standard-monomial basis of F(Δ)_t.
  std::vector<u64> coords(int t, std::vector<u64>& v) {
    ensure_ideal(t);
    ideal[static_cast<std::size_t>(t)].reduce(v);
    std::vector<u64> out;
    out.reserve(standard[static_cast<std::size_t>(t)].size());
    for (std::uint32_t col : standard[static_cast<std::size_t>(t)]) out.push_back(v[col]);
    return out;
  }

  std::size_t dim(int t) {
    if (t < 0) return 0;
    ensure_ideal(t);
    return standard[static_cast<std::size_t>(t)].size();
  }

  void setup(const Complex& c) {
    d = c.d();
    n = static_cast<int>(forms.vertices.size());
    std::vector<int> col_of(static_cast<std::size_t>(c.n_vertices()) + 1, -1);
    for (int k = 0; k < n; ++k) col_of[static_cast<std::size_t>(forms.vertices[k])] = k;

    // Kind–Kleinschmidt: Θ restricted to each facet must be invertible.
    lsop = true;
    for (const Face& f : c.facets()) {
      std::vector<std::vector<u64>> sub(static_cast<std::size_t>(d), std::vector<u64>(f.size()));
      for (int r = 0; r < d; ++r) {
        for (std::size_t q = 0; q < f.size(); ++q) sub[r][q] = forms.coeff[r][col_of[f[q]]];
      }
      if (modp::rank(sub, f.size(), p) != static_cast<std::size_t>(d)) {
        lsop = false;
        break;
      }
    }

    // Reduced row echelon form of Θ; pivot variables are eliminated.
    std::vector<std::vector<u64>> theta(forms.coeff.begin(), forms.coeff.begin() + d);
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < n && row < theta.size(); ++col) {
      std::size_t sel = row;
      while (sel < theta.size() && theta[sel][col] == 0) ++sel;
      if (sel == theta.size()) continue;
      std::swap(theta[sel], theta[row]);
      const u64 inv = modp::inverse(theta[row][col], p);
      for (auto& x : theta[row]) x = modp::mul(x, inv, p);
      for (std::size_t r = 0; r < theta.size(); ++r) {
        if (r == row || theta[r][col] == 0) continue;
        const u64 f = theta[r][col];
        for (int j = 0; j < n; ++j) theta[r][j] = modp::sub(theta[r][j], modp::mul(f, theta[row][j], p), p);
      }
      pivots.push_back(col);
      ++row;
    }
    std::vector<int> free_index(static_cast<std::size_t>(n), -1);
    for (int col = 0, k = 0; col < n; ++col) {
      if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free_index[col] = k++;
    }
    m = n - static_cast<int>(pivots.size());
    image.assign(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(m), 0));
    for (int col = 0; col < n; ++col) {
      if (free_index[col] >= 0) image[col][free_index[col]] = 1;
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (int col = 0; col < n; ++col) {
        if (free_index[col] >= 0 && theta[r][col]) image[pivots[r]][free_index[col]] = p - theta[r][col];
      }
    }
    omega.assign(static_cast<std::size_t>(m), 0);
    for (int col = 0; col < n; ++col) {
      const u64 w = forms.coeff[static_cast<std::size_t>(d)][col];
      for (int j = 0; j < m; ++j) omega[j] = (omega[j] + modp::mul(w, image[col][j], p)) % p;
    }

    // Minimal nonfaces, grown from faces one vertex at a time.
    const auto faces = all_faces(c);
    std::vector<FaceSet> face_sets;
    for (const auto& layer : faces) face_sets.emplace_back(layer.begin(), layer.end());
    nonfaces.assign(faces.size() + 1, {});
    const std::vector<Vertex> verts = c.vertices();
    for (std::size_t size = 1; size < faces.size(); ++size) {
      for (const Face& f : faces[size]) {
        for (Vertex w : verts) {
          if (w <= f.back()) continue;
          Face cand = f;
          cand.push_back(w);
          if (size + 1 < face_sets.size() && face_sets[size + 1].count(cand)) continue;
          bool minimal = true;
          for (std::size_t q = 0; q + 1 < cand.size() && minimal; ++q) {
            Face sub = cand;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(q));
            minimal = face_sets[size].count(sub) > 0;
          }
          if (!minimal) continue;
          Face cols;
          for (Vertex v : cand) cols.push_back(col_of[static_cast<std::size_t>(v)]);
          nonfaces[size + 1].push_back(std::move(cols));
        }
      }
    }
  }
};

ArtinianReduction::ArtinianReduction(const Complex& c, LinearForms forms, FieldSpec field, std::size_t cap)
    : impl_(std::make_unique<Impl>()) {
  if (c.is_void() || !c.is_pure() || c.d() < 1) {
    throw ParamError("face-ring computations need a pure complex of dimension >= 0");
  }
  impl_->forms = std::move(forms);
  impl_->p = field.p;
  impl_->cap = cap;
  impl_->setup(c);
}

ArtinianReduction::~ArtinianReduction() = default;
ArtinianReduction::ArtinianReduction(ArtinianReduction&&) noexcept = default;
ArtinianReduction& ArtinianReduction::operator=(ArtinianReduction&&) noexcept = default;

const LinearForms& ArtinianReduction::forms() const noexcept { return impl_->forms; }
bool ArtinianReduction::is_lsop() const noexcept { return impl_->lsop; }
std::size_t ArtinianReduction::dim(int t) { return impl_->dim(t); }

std::size_t ArtinianReduction::rank_power(int i, int k) {
  Impl& s = *impl_;
  if (s.dim(i) == 0 || s.dim(i + k) == 0) return 0;
  std::vector<std::vector<u64>> rows;
  for (std::uint32_t col : s.standard[static_cast<std::size_t>(i)]) {
    std::vector<u64> v = unit(s.size_of(i), col);
    for (int step = 0; step < k; ++step) {
      v = s.times_linear(i + step, v, s.omega);
      s.ensure_ideal(i + step + 1);
      s.ideal[static_cast<std::size_t>(i + step + 1)].reduce(v);
    }
    rows.push_back(s.coords(i + k, v));
  }
  return modp::rank(rows, s.dim(i + k), s.p);
}

std::size_t ArtinianReduction::socle_dim(int i) {
  Impl& s = *impl_;
  const std::size_t source = s.dim(i);
  if (source == 0) return 0;
  const std::size_t target = s.dim(i + 1);
  if (target == 0) return source;
  const auto& up = s.tables[static_cast<std::size_t>(i)].up;
  std::vector<std::vector<u64>> rows;
  for (std::uint32_t col : s.standard[static_cast<std::size_t>(i)]) {
    std::vector<u64> row;
    for (int j = 0; j < s.m; ++j) {
      std::vector<u64> v = unit(s.size_of(i + 1), up[col * static_cast<std::size_t>(s.m) + static_cast<std::size_t>(j)]);
      const auto c = s.coords(i + 1, v);
      row.insert(row.end(), c.begin(), c.end());
    }
    rows.push_back(std::move(row));
  }
  return source - modp::rank(rows, target * static_cast<std::size_t>(s.m), s.p);
}

std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, int trials) {
  std::mt19937_64 master(seed);
  std::vector<std::uint64_t> out;
  for (int t = 0; t < trials; ++t) out.push_back(master());
  return out;
}

LinearForms random_forms(const Complex& c, FieldSpec field, std::uint64_t seed) {
  LinearForms f;
  f.seed = seed;
  f.vertices = c.vertices();
  std::mt19937_64 rng(seed);
  f.coeff.assign(static_cast<std::size_t>(c.d()) + 1, std::vector<std::uint64_t>(f.vertices.size()));
  for (auto& row : f.coeff) {
    for (auto& x : row) x = rng() % field.p;
  }
  return f;
}

std::vector<std::vector<int>> monomial_basis(const Complex& c, int i, std::size_t cap) {
  if (i < 0) throw ParamError("negative degree");
  const std::size_t n = static_cast<std::size_t>(c.n_vertices());
  if (i == 0) return {std::vector<int>(n, 0)};
  const auto faces = all_faces(c);
  std::size_t total = 0;
  for (std::size_t size = 1; size < faces.size() && static_cast<int>(size) <= i; ++size) {
    total += faces[size].size() * static_cast<std::size_t>(binomial64(i - 1, static_cast<std::int64_t>(size) - 1));
  }
  if (total > cap) {
    throw CapExceeded("degree " + std::to_string(i) + " has " + std::to_string(total) + " monomials");
  }
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (std::size_t size = 1; size < faces.size() && static_cast<int>(size) <= i; ++size) {
    for (const Face& f : faces[size]) {
      // Every composition of i into |f| positive parts.
      std::vector<int> e(n, 0);
      auto rec = [&](auto&& self, std::size_t q, int left) -> void {
        const auto slot = static_cast<std::size_t>(f[q]) - 1;
        if (q + 1 == size) {
          e[slot] = left;
          out.push_back(e);
          return;
        }
        for (int part = 1; part <= left - static_cast<int>(size - q - 1); ++part) {
          e[slot] = part;
          self(self, q + 1, left - part);
        }
      };
      rec(rec, 0, i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The trials of one run whose Θ is an l.s.o.p.
struct TrialSet {
  std::vector<ArtinianReduction> lsop;
  int requested = 0;

  TrialSet(const Complex& c, const FaceRingOptions& opt) : requested(opt.trials) {
    if (opt.trials < 1) throw ParamError("at least one trial is required");
    for (std::uint64_t s : trial_seeds(opt.seed, opt.trials)) {
      ArtinianReduction r(c, random_forms(c, opt.field, s), opt.field, opt.cap);
      if (r.is_lsop()) lsop.push_back(std::move(r));
    }
    if (lsop.empty()) {
      throw LsopFailure("none of " + std::to_string(opt.trials) + " random parameter systems over F_" +
                        std::to_string(opt.field.p) + " is an l.s.o.p.");
    }
  }

  IntSeq min_hilbert(int top) {
    IntSeq h;
    for (int t = 0; t <= top; ++t) {
      std::size_t best = lsop.front().dim(t);
      for (auto& r : lsop) best = std::min(best, r.dim(t));
      h.emplace_back(best);
    }
    return h;
  }

  // Trials attaining the generic (minimal) Hilbert function through `top`.
  std::vector<ArtinianReduction*> eligible(int top) {
    const IntSeq h = min_hilbert(top);
    std::vector<ArtinianReduction*> out;
    for (auto& r : lsop) {
      bool ok = true;
      for (int t = 0; t <= top && ok; ++t) ok = Int(r.dim(t)) == h[t];
      if (ok) out.push_back(&r);
    }
    return out;
  }

  GradedReport report_base(const FaceRingOptions& opt, int top) {
    GradedReport g;
    g.field = opt.field.p;
    g.seed = opt.seed;
    g.trials = requested;
    g.lsop_trials = static_cast<int>(lsop.size());
    g.hilbert = min_hilbert(top);
    return g;
  }

  MapRank max_rank(int i, int k) {
    const int top = i + k;
    const IntSeq h = min_hilbert(top);
    MapRank mr{i, k, 0, 0, 0};
    for (ArtinianReduction* r : eligible(top)) {
      mr.rank = std::max<std::int64_t>(mr.rank, static_cast<std::int64_t>(r->rank_power(i, k)));
    }
    const auto src = (i >= 0) ? h[i].convert_to<std::int64_t>() : 0;
    mr.ker = src - mr.rank;
    mr.coker = h[top].convert_to<std::int64_t>() - mr.rank;
    return mr;
  }
};

std::int64_t as64(const Int& x) { return x.convert_to<std::int64_t>(); }

}  // namespace

IntSeq artinian_hilbert(const Complex& c, const FaceRingOptions& opt) {
  TrialSet ts(c, opt);
  IntSeq h = ts.min_hilbert(c.d() + 1);
  if (h.back() != 0) {
    throw LsopFailure("F(Δ) does not vanish in degree d+1 for any trial");
  }
  return h;
}

MapRank mult_rank(const Complex& c, const FaceRingOptions& opt, int i, int k) {
  if (i < 0 || k < 1) throw ParamError("mult_rank needs i >= 0 and k >= 1");
  TrialSet ts(c, opt);
  return ts.max_rank(i, k);
}

GradedReport graded_report(const Complex& c, const FaceRingOptions& opt) {
  TrialSet ts(c, opt);
  const int d = c.d();
  GradedReport g = ts.report_base(opt, d + 1);
  for (int i = 0; i <= d; ++i) g.maps.push_back(ts.max_rank(i, 1));
  return g;
}

std::string to_string(LefschetzMode m) {
  switch (m) {
    case LefschetzMode::kWeak: return "weak";
    case LefschetzMode::kStrong: return "strong";
    case LefschetzMode::kVeryWeak: return "very_weak";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::kCertifiedYes ? "CERTIFIED_YES" : "UNDETERMINED_NO"; }

LefschetzMode parse_lefschetz_mode(const std::string& s) {
  if (s == "weak") return LefschetzMode::kWeak;
  if (s == "strong") return LefschetzMode::kStrong;
  if (s == "very_weak" || s == "very-weak") return LefschetzMode::kVeryWeak;
  throw ParamError("unknown Lefschetz mode '" + s + "'");
}

LefschetzResult lefschetz_test(const Complex& c, const FaceRingOptions& opt, LefschetzMode mode) {
  enum class Need { kInjOrSurj, kSurj, kIso };
  struct Req {
    int i;
    int k;
    Need need;
  };
  const int d = c.d();
  LefschetzResult out;
  out.mode = mode;
  std::vector<Req> reqs;
  switch (mode) {
    case LefschetzMode::kWeak:
      if (classify(c, opt.field).homology_sphere) {
        out.sphere_shortcut = true;
        reqs.push_back({d / 2, 1, Need::kSurj});
      } else {
        for (int i = 0; i < d; ++i) reqs.push_back({i, 1, Need::kInjOrSurj});
      }
      break;
    case LefschetzMode::kVeryWeak:
      reqs.push_back({(d + 1) / 2, 1, Need::kSurj});
      break;
    case LefschetzMode::kStrong:
      for (int i = 0; 2 * i < d; ++i) reqs.push_back({i, d - 2 * i, Need::kIso});
      break;
  }
  int top = 0;
  for (const Req& r : reqs) top = std::max(top, r.i + r.k);

  TrialSet ts(c, opt);
  out.report = ts.report_base(opt, top);
  const IntSeq& h = out.report.hilbert;
  std::vector<MapRank> best;
  for (const Req& r : reqs) best.push_back({r.i, r.k, 0, 0, 0});
  for (ArtinianReduction* trial : ts.eligible(top)) {
    bool all = true;
    for (std::size_t q = 0; q < reqs.size(); ++q) {
      const Req& r = reqs[q];
      const auto rank = static_cast<std::int64_t>(trial->rank_power(r.i, r.k));
      best[q].rank = std::max(best[q].rank, rank);
      const std::int64_t src = as64(h[r.i]);
      const std::int64_t dst = as64(h[r.i + r.k]);
      bool ok = false;
      switch (r.need) {
        case Need::kInjOrSurj: ok = rank == src || rank == dst; break;
        case Need::kSurj: ok = rank == dst; break;
        case Need::kIso: ok = src == dst && rank == src; break;
      }
      all = all && ok;
    }
    if (all && !out.witness_seed) out.witness_seed = trial->forms().seed;
  }
  for (MapRank& mr : best) {
    mr.ker = as64(h[mr.i]) - mr.rank;
    mr.coker = as64(h[mr.i + mr.k]) - mr.rank;
  }
  out.report.maps = std::move(best);
  out.verdict = out.witness_seed ? Verdict::kCertifiedYes : Verdict::kUndeterminedNo;
  return out;
}

SocleReport socle_dim(const Complex& c, const FaceRingOptions& opt, int i) {
  const int d = c.d();
  if (i < 0 || i > d) throw ParamError("socle degree outside [0, d]");
  SocleReport out;
  out.i = i;
  TrialSet ts(c, opt);
  std::optional<std::size_t> best;
  for (ArtinianReduction* r : ts.eligible(i + 1)) {
    const std::size_t s = r->socle_dim(i);
    best = best ? std::min(*best, s) : s;
  }
  out.socle_dim = static_cast<std::int64_t>(*best);
  const ClassReport cr = classify(c, opt.field);
  if (cr.homology_manifold || cr.homology_manifold_with_boundary) {
    out.bound = (i >= 1) ? binomial(d, i) * cr.betti[static_cast<std::size_t>(i - 1)] : Int(0);
    out.bound_holds = Int(out.socle_dim) >= *out.bound;
  }
  return out;
}

SchenzelReport schenzel_check(const Complex& c, const FaceRingOptions& opt) {
  const ClassReport cr = classify(c, opt.field);
  if (!cr.homology_manifold && !cr.homology_manifold_with_boundary) {
    throw NotAManifold("Schenzel's formula needs an F-homology manifold");
  }
  const int d = c.d();
  SchenzelReport out;
  TrialSet ts(c, opt);
  out.hilbert = ts.min_hilbert(d);
  out.h_prime = h_prime(h_vector(c), cr.betti, d);
  out.holds = true;
  for (int i = 0; i <= d; ++i) {
    out.residual.push_back(out.hilbert[i] - out.h_prime[i]);
    out.holds = out.holds && out.residual.back() == 0;
  }
  return out;
}

namespace {

void require_normal_pm(const Complex& c, FieldSpec field) {
  if (c.d() < 4) throw ParamError("this check needs d >= 4");
  if (!classify(c, field).normal_pseudomanifold) {
    throw NotNormalPseudomanifold("complex is not a normal pseudomanifold");
  }
}

}  // namespace

RigidityReport rigidity_check(const Complex& c, const FaceRingOptions& opt) {
  require_normal_pm(c, opt.field);
  RigidityReport out;
  out.h = h_vector(c);
  TrialSet ts(c, opt);
  out.hilbert = ts.min_hilbert(3);
  out.dim1_equals_h1 = out.hilbert[1] == out.h[1];
  out.dim2_equals_h2 = out.hilbert[2] == out.h[2];
  out.dim3_at_least_h3 = out.hilbert[3] >= out.h[3];
  out.injective_1_to_2 = ts.max_rank(1, 1).ker == 0;
  return out;
}

G3BoundReport g3_upper_bound_check(const Complex& c, const FaceRingOptions& opt) {
  require_normal_pm(c, opt.field);
  const IntSeq g = g_vector_full(h_vector(c));
  G3BoundReport out;
  out.g2 = g[2];
  out.g3 = g[3];
  if (out.g2 < 0) return out;
  out.bound = pseudo_power(out.g2, 2);
  out.inequality = out.g3 <= out.bound;
  out.equality = out.g3 == out.bound;
  if (out.equality) {
    TrialSet ts(c, opt);
    out.injective_2_to_3 = ts.max_rank(2, 1).ker == 0;
  }
  out.holds = out.inequality && (!out.equality || out.injective_2_to_3);
  return out;
}

CokernelReport cokernel_bound_check(const Complex& c, const FaceRingOptions& opt, int i) {
  const int d = c.d();
  if (i < 1 || d < 2) throw ParamError("cokernel check needs i >= 1 and d >= 2");
  CokernelReport out;
  out.i = i;
  for (Vertex v : c.vertices()) {
    const Complex lk = link(c, {v}).complex;
    bool surjective = false;
    try {
      TrialSet ts(lk, opt);
      surjective = ts.max_rank(i - 1, 1).coker == 0;
    } catch (const LsopFailure&) {
      surjective = false;
    }
    if (!surjective) out.bad_vertices.push_back(v);
  }
  TrialSet ts(c, opt);
  out.observed = ts.max_rank(i, 1).coker;
  const int vars = static_cast<int>(out.bad_vertices.size()) - d - 1;
  out.bound = vars > 0 ? binomial(vars + i, i + 1) : Int(0);
  out.holds = Int(out.observed) <= out.bound;
  return out;
}

SurjectivityReport top_surjectivity_check(const Complex& c, const FaceRingOptions& opt) {
  const int d = c.d();
  if (d < 4) throw ParamError("top-degree surjectivity needs d >= 4");
  const ClassReport cr = classify(c, opt.field);
  if (!cr.homology_manifold && !cr.homology_manifold_with_boundary) {
    throw NotAManifold("complex is not an F-homology manifold");
  }
  TrialSet ts(c, opt);
  SurjectivityReport out;
  out.map = ts.max_rank(d - 2, 1);
  out.surjective = out.map.coker == 0;
  return out;
}

}  // namespace gconj
