#include "bpw/mforacle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bpw {

namespace {

Poly normalized(Poly p) {
  std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  Poly out;
  for (Term& t : p) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
  }
  return out;
}

Poly monomial(int n, int var, int power, std::int64_t coef = 1) {
  Term t{coef, std::vector<int>(static_cast<size_t>(n), 0)};
  t.exp[static_cast<size_t>(var)] = power;
  return {t};
}

GradeElement degree_of(const WeightSystem& ws, const std::vector<int>& exp) {
  std::vector<std::int64_t> v(exp.begin(), exp.end());
  return GradeElement::from_raw(ws, std::span<const std::int64_t>(v), 0);
}

// Monomial basis of S in one degree, with a lookup from exponents to index.
struct Basis {
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, int> index;
};

void fill_compositions(const GradeElement& deg, int i, int left, std::vector<int>& cur, Basis& b) {
  const WeightSystem& ws = deg.weights();
  if (i == ws.n() - 1) {
    cur[static_cast<size_t>(i)] = deg.coeff(i) + left * ws.p(i);
    b.index.emplace(cur, static_cast<int>(b.monomials.size()));
    b.monomials.push_back(cur);
    return;
  }
  for (int d = 0; d <= left; ++d) {
    cur[static_cast<size_t>(i)] = deg.coeff(i) + d * ws.p(i);
    fill_compositions(deg, i + 1, left - d, cur, b);
  }
}

class BasisCache {
 public:
  const Basis& get(const GradeElement& deg) {
    auto it = cache_.find(deg);
    if (it != cache_.end()) return it->second;
    Basis b;
    if (deg.level() >= 0) {
      std::vector<int> cur(static_cast<size_t>(deg.weights().n()), 0);
      fill_compositions(deg, 0, deg.level(), cur, b);
    }
    return cache_.emplace(deg, std::move(b)).first->second;
  }

 private:
  std::map<GradeElement, Basis> cache_;
};

// A space of homogeneous maps between the free modules of two factorizations,
// organized as one block per (target generator, source generator).
struct MapSpace {
  struct Block {
    const Basis* basis;
    int offset;
  };
  int rows = 0;  // target generator count
  int cols = 0;  // source generator count
  std::vector<Block> blocks;
  int size = 0;

  void build(BasisCache& cache, const std::vector<GradeElement>& src,
             const std::vector<GradeElement>& tgt, const GradeElement& extra, int base) {
    rows = static_cast<int>(tgt.size());
    cols = static_cast<int>(src.size());
    blocks.clear();
    size = 0;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const Basis& b = cache.get(src[static_cast<size_t>(c)] - tgt[static_cast<size_t>(r)] + extra);
        blocks.push_back({&b, base + size});
        size += static_cast<int>(b.monomials.size());
      }
    }
  }
  const Block& block(int r, int c) const { return blocks[static_cast<size_t>(r) * cols + c]; }
};

// Adds coef * (mu * entry) into column `col` of `m` at block `blk`.
void scatter(IntMatrix& m, int col, const std::vector<int>& mu, const Poly& entry, std::int64_t sign,
             const MapSpace::Block& blk) {
  for (const Term& t : entry) {
    std::vector<int> e = mu;
    for (size_t i = 0; i < e.size(); ++i) e[i] += t.exp[i];
    auto it = blk.basis->index.find(e);
    if (it == blk.basis->index.end()) {
      throw std::logic_error("oracle: product left its degree piece (inhomogeneous factorization)");
    }
    m.at(blk.offset + it->second, col) += sign * t.coef;
  }
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const Term& x : a) {
    for (const Term& y : b) {
      Term t{x.coef * y.coef, x.exp};
      for (size_t i = 0; i < t.exp.size(); ++i) t.exp[i] += y.exp[i];
      out.push_back(std::move(t));
    }
  }
  return normalized(std::move(out));
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalized(std::move(out));
}

Poly poly_scale(const Poly& a, std::int64_t k) {
  Poly out = a;
  for (Term& t : out) t.coef *= k;
  return normalized(std::move(out));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("polynomial matrix shape mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      Poly acc;
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).empty() || o.at(k, j).empty()) continue;
        acc = poly_add(acc, poly_mul(at(i, k), o.at(k, j)));
      }
      r.at(i, j) = std::move(acc);
    }
  }
  return r;
}

Poly hypersurface(const WeightSystem& ws) {
  Poly f;
  for (int i = 0; i < ws.n(); ++i) f = poly_add(f, monomial(ws.n(), i, ws.p(i)));
  return f;
}

void GradedMF::check() const {
  const int ne = static_cast<int>(even.size());
  const int no = static_cast<int>(odd.size());
  if (ne != no) throw std::logic_error("factorization parities have different ranks");
  if (d0.rows() != ne || d0.cols() != no || d1.rows() != no || d1.cols() != ne) {
    throw std::logic_error("factorization matrix shapes do not match generators");
  }
  const GradeElement c = GradeElement::c(weights);
  for (int a = 0; a < ne; ++a) {
    for (int b = 0; b < no; ++b) {
      GradeElement e0 = odd[static_cast<size_t>(b)] - even[static_cast<size_t>(a)];
      for (const Term& t : d0.at(a, b)) {
        if (!(degree_of(weights, t.exp) == e0)) throw std::logic_error("d0 entry is not homogeneous");
      }
      GradeElement e1 = even[static_cast<size_t>(a)] - odd[static_cast<size_t>(b)] + c;
      for (const Term& t : d1.at(b, a)) {
        if (!(degree_of(weights, t.exp) == e1)) throw std::logic_error("d1 entry is not homogeneous");
      }
    }
  }
  auto is_scalar = [&](const PolyMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        const Poly& p = m.at(i, j);
        if (i == j ? p.size() != potential.size() ||
                         !std::equal(p.begin(), p.end(), potential.begin(),
                                     [](const Term& x, const Term& y) {
                                       return x.coef == y.coef && x.exp == y.exp;
                                     })
                   : !p.empty()) {
          return false;
        }
      }
    }
    return true;
  };
  if (!is_scalar(d0 * d1) || !is_scalar(d1 * d0)) {
    throw std::logic_error("d o d differs from the potential times the identity");
  }
}

GradedMF rank1_mf(const WeightSystem& ws, int i, int a) {
  if (i < 0 || i >= ws.n()) throw std::out_of_range("rank-1 factorization variable out of range");
  if (a < 1 || a > ws.p(i) - 1) throw std::invalid_argument("rank-1 factorization needs 1 <= a <= p_i - 1");
  GradedMF f{ws, {GradeElement::zero(ws)}, {GradeElement::x(ws, i) * a}, PolyMatrix(1, 1),
             PolyMatrix(1, 1), monomial(ws.n(), i, ws.p(i))};
  f.d0.at(0, 0) = monomial(ws.n(), i, a);
  f.d1.at(0, 0) = monomial(ws.n(), i, ws.p(i) - a);
  f.check();
  return f;
}

GradedMF tensor_mf(const GradedMF& f, const GradedMF& g) {
  require_same_weights(f.weights, g.weights);
  const WeightSystem& ws = f.weights;
  const GradeElement c = GradeElement::c(ws);
  const int nf = static_cast<int>(f.even.size());
  const int ng = static_cast<int>(g.even.size());
  const int half = nf * ng;
  GradedMF t{ws, {}, {}, PolyMatrix(2 * half, 2 * half), PolyMatrix(2 * half, 2 * half),
             poly_add(f.potential, g.potential)};
  // Even: [F0 (x) G0, F1 (x) G1]; odd: [F1 (x) G0, F0 (x) G1]; index a * ng + b.
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < ng; ++b) t.even.push_back(f.even[a] + g.even[b]);
  }
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < ng; ++b) t.even.push_back(f.odd[a] + g.odd[b] - c);
  }
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < ng; ++b) t.odd.push_back(f.odd[a] + g.even[b]);
  }
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < ng; ++b) t.odd.push_back(f.even[a] + g.odd[b]);
  }
  auto idx = [ng](int a, int b) { return a * ng + b; };
  // d = d_F (x) 1 + sign_F (x) d_G, with sign -1 on odd F.
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < ng; ++b) {
      // odd column F1_a (x) G0_b
      int col = idx(a, b);
      for (int a2 = 0; a2 < nf; ++a2) {
        auto& e = t.d0.at(idx(a2, b), col);
        e = poly_add(e, f.d0.at(a2, a));
      }
      for (int b2 = 0; b2 < ng; ++b2) {
        auto& e = t.d0.at(half + idx(a, b2), col);
        e = poly_add(e, poly_scale(g.d1.at(b2, b), -1));
      }
      // odd column F0_a (x) G1_b
      col = half + idx(a, b);
      for (int b2 = 0; b2 < ng; ++b2) {
        auto& e = t.d0.at(idx(a, b2), col);
        e = poly_add(e, g.d0.at(b2, b));
      }
      for (int a2 = 0; a2 < nf; ++a2) {
        auto& e = t.d0.at(half + idx(a2, b), col);
        e = poly_add(e, f.d1.at(a2, a));
      }
      // even column F0_a (x) G0_b
      col = idx(a, b);
      for (int a2 = 0; a2 < nf; ++a2) {
        auto& e = t.d1.at(idx(a2, b), col);
        e = poly_add(e, f.d1.at(a2, a));
      }
      for (int b2 = 0; b2 < ng; ++b2) {
        auto& e = t.d1.at(half + idx(a, b2), col);
        e = poly_add(e, g.d1.at(b2, b));
      }
      // even column F1_a (x) G1_b
      col = half + idx(a, b);
      for (int a2 = 0; a2 < nf; ++a2) {
        auto& e = t.d1.at(half + idx(a2, b), col);
        e = poly_add(e, f.d0.at(a2, a));
      }
      for (int b2 = 0; b2 < ng; ++b2) {
        auto& e = t.d1.at(idx(a, b2), col);
        e = poly_add(e, poly_scale(g.d0.at(b2, b), -1));
      }
    }
  }
  t.check();
  return t;
}

GradedMF twist_mf(const GradedMF& f, const GradeElement& y) {
  GradedMF t = f;
  for (auto& g : t.even) g = g - y;
  for (auto& g : t.odd) g = g - y;
  t.check();
  return t;
}

GradedMF shift_mf(const GradedMF& f, int m) {
  const GradeElement c = GradeElement::c(f.weights);
  GradedMF t = f;
  for (; m > 0; --m) {
    GradedMF u{t.weights, {}, t.even, t.d1, t.d0, t.potential};
    for (auto& g : t.odd) u.even.push_back(g - c);
    t = std::move(u);
  }
  for (; m < 0; ++m) {
    GradedMF u{t.weights, t.odd, {}, t.d1, t.d0, t.potential};
    for (auto& g : t.even) u.odd.push_back(g + c);
    t = std::move(u);
  }
  t.check();
  return t;
}

GradedMF zero_mf(const WeightSystem& ws) {
  return GradedMF{ws, {}, {}, PolyMatrix(0, 0), PolyMatrix(0, 0), hypersurface(ws)};
}

GradedMF mf_of(const StableObject& obj) {
  const WeightSystem& ws = obj.weights();
  if (obj.is_zero()) return zero_mf(ws);
  GradedMF f = rank1_mf(ws, 0, obj.ell().coeff(0));
  for (int i = 1; i < ws.n(); ++i) f = tensor_mf(f, rank1_mf(ws, i, obj.ell().coeff(i)));
  f = shift_mf(twist_mf(f, obj.twist()), obj.shift());
  Poly full = hypersurface(ws);
  if (f.potential.size() != full.size()) throw std::logic_error("factorization of the wrong potential");
  return f;
}

int stable_hom_dim_oracle(const GradedMF& f, const GradedMF& g0, int m, const WorkingField& field) {
  require_same_weights(f.weights, g0.weights);
  if (f.even.empty()) return 0;
  if (g0.even.empty()) return 0;
  const GradedMF g = shift_mf(g0, m);
  const WeightSystem& ws = f.weights;
  const GradeElement c = GradeElement::c(ws);
  const GradeElement zero = GradeElement::zero(ws);
  BasisCache cache;

  // C0: phi0 : F0 -> G0, phi1 : F1 -> G1.
  MapSpace p0, p1;
  p0.build(cache, f.even, g.even, zero, 0);
  p1.build(cache, f.odd, g.odd, zero, p0.size);
  const int n0 = p0.size + p1.size;
  if (n0 == 0) return 0;
  // C1: F0 -> G1 of degree src - tgt + c, F1 -> G0 of degree src - tgt.
  MapSpace q0, q1;
  q0.build(cache, f.even, g.odd, c, 0);
  q1.build(cache, f.odd, g.even, zero, q0.size);
  // C-1: h0 : F0 -> G1 of degree src - tgt, h1 : F1 -> G0 of degree src - tgt - c.
  MapSpace h0, h1;
  h0.build(cache, f.even, g.odd, zero, 0);
  h1.build(cache, f.odd, g.even, -c, h0.size);

  const int ef = static_cast<int>(f.even.size());
  const int eg = static_cast<int>(g.even.size());

  // D0(phi) = d_G phi - phi d_F.
  IntMatrix d0m(q0.size + q1.size, n0);
  for (int r = 0; r < eg; ++r) {
    for (int cc = 0; cc < ef; ++cc) {
      const auto& blk = p0.block(r, cc);
      for (size_t k = 0; k < blk.basis->monomials.size(); ++k) {
        const auto& mu = blk.basis->monomials[k];
        int col = blk.offset + static_cast<int>(k);
        for (int b1 = 0; b1 < eg; ++b1) scatter(d0m, col, mu, g.d1.at(b1, r), 1, q0.block(b1, cc));
        for (int f1 = 0; f1 < ef; ++f1) scatter(d0m, col, mu, f.d0.at(cc, f1), -1, q1.block(r, f1));
      }
      const auto& blk1 = p1.block(r, cc);
      for (size_t k = 0; k < blk1.basis->monomials.size(); ++k) {
        const auto& mu = blk1.basis->monomials[k];
        int col = blk1.offset + static_cast<int>(k);
        for (int f0 = 0; f0 < ef; ++f0) scatter(d0m, col, mu, f.d1.at(cc, f0), -1, q0.block(r, f0));
        for (int g0i = 0; g0i < eg; ++g0i) scatter(d0m, col, mu, g.d0.at(g0i, r), 1, q1.block(g0i, cc));
      }
    }
  }
  // D-1(h) = d_G h + h d_F.
  IntMatrix dm1(n0, h0.size + h1.size);
  for (int r = 0; r < eg; ++r) {
    for (int cc = 0; cc < ef; ++cc) {
      const auto& blk = h0.block(r, cc);  // F0_cc -> G1_r
      for (size_t k = 0; k < blk.basis->monomials.size(); ++k) {
        const auto& mu = blk.basis->monomials[k];
        int col = blk.offset + static_cast<int>(k);
        for (int g0i = 0; g0i < eg; ++g0i) scatter(dm1, col, mu, g.d0.at(g0i, r), 1, p0.block(g0i, cc));
        for (int f1 = 0; f1 < ef; ++f1) scatter(dm1, col, mu, f.d0.at(cc, f1), 1, p1.block(r, f1));
      }
      const auto& blk1 = h1.block(r, cc);  // F1_cc -> G0_r
      for (size_t k = 0; k < blk1.basis->monomials.size(); ++k) {
        const auto& mu = blk1.basis->monomials[k];
        int col = blk1.offset + static_cast<int>(k);
        for (int f0 = 0; f0 < ef; ++f0) scatter(dm1, col, mu, f.d1.at(cc, f0), 1, p0.block(r, f0));
        for (int g1 = 0; g1 < eg; ++g1) scatter(dm1, col, mu, g.d1.at(g1, r), 1, p1.block(g1, cc));
      }
    }
  }
  return n0 - rank(d0m, field) - rank(dm1, field);
}

std::vector<GradeElement> unit_twists(const WeightSystem& ws) {
  const int n = ws.n();
  std::vector<GradeElement> twists;
  std::vector<int> eps(static_cast<size_t>(n), -1);
  while (true) {
    std::vector<std::int64_t> v(eps.begin(), eps.end());
    GradeElement t = GradeElement::from_raw(ws, std::span<const std::int64_t>(v), 0);
    if (std::find(twists.begin(), twists.end(), t) == twists.end()) twists.push_back(t);
    int i = n - 1;
    while (i >= 0 && eps[static_cast<size_t>(i)] == 1) eps[static_cast<size_t>(i--)] = -1;
    if (i < 0) break;
    ++eps[static_cast<size_t>(i)];
  }
  return twists;
}

std::vector<StableObject> profile_probes(const WeightSystem& ws) {
  const int n = ws.n();
  std::vector<int> lo(static_cast<size_t>(n), 1), hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) hi[static_cast<size_t>(i)] = ws.p(i) - 1;
  const std::vector<GradeElement> twists = unit_twists(ws);
  std::vector<StableObject> probes;
  for (const GradeElement& ell : box(ws, lo, hi)) {
    for (const GradeElement& t : twists) {
      for (int k = 0; k < 2; ++k) probes.push_back(StableObject::U(ell, t, k));
    }
  }
  return probes;
}

HomProfile hom_profile(const GradedMF& f, const WorkingField& field) {
  HomProfile prof;
  for (const StableObject& p : profile_probes(f.weights)) {
    GradedMF pm = mf_of(p);
    prof.probes.push_back(p.to_string());
    prof.out.push_back(stable_hom_dim_oracle(f, pm, 0, field));
    prof.in.push_back(stable_hom_dim_oracle(pm, f, 0, field));
  }
  return prof;
}

double AuditReport::unknown_rate() const {
  return pairs == 0 ? 0.0 : static_cast<double>(unknown) / static_cast<double>(pairs);
}

AuditReport audit_calculus(const WeightSystem& ws, const AuditWindow& window, const WorkingField& field) {
  AuditReport rep;
  rep.weights = ws.to_string();
  rep.field = field.to_string();
  const int n = ws.n();
  std::vector<int> lo(static_cast<size_t>(n), 1), hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) hi[static_cast<size_t>(i)] = ws.p(i) - 1;
  const std::vector<GradeElement> cuboid = box(ws, lo, hi);
  const std::vector<GradeElement> twists = unit_twists(ws);
  const GradeElement c = GradeElement::c(ws);
  std::vector<GradedMF> targets;
  for (const GradeElement& b : cuboid) targets.push_back(mf_of(StableObject::U(b)));

  for (const GradeElement& a : cuboid) {
    for (const GradeElement& u : twists) {
      for (int lambda = -window.level_radius; lambda <= window.level_radius; ++lambda) {
        for (int m = window.shift_min; m <= window.shift_max; ++m) {
          const StableObject A = StableObject::U(a, u + c * lambda, m);
          const GradedMF fa = mf_of(A);
          for (size_t bi = 0; bi < cuboid.size(); ++bi) {
            const StableObject B = StableObject::U(cuboid[bi]);
            ++rep.pairs;
            if (!configuration_hom_dim(A, B).known()) ++rep.configuration_unknown;
            const HomAnswer h = hom_dim(A, B);
            if (!h.known()) {
              ++rep.unknown;
              continue;
            }
            const int o = stable_hom_dim_oracle(fa, targets[bi], 0, field);
            if (*h.dim == o) {
              ++rep.agree;
              continue;
            }
            ++rep.disagree;
            // Triage: an oracle answer that moves with the field points at the oracle.
            const int o2 = stable_hom_dim_oracle(fa, targets[bi], 0, WorkingField::prime(65537));
            const int oq = stable_hom_dim_oracle(fa, targets[bi], 0, WorkingField::rational());
            rep.disagreements.push_back({A.to_string(), B.to_string(), *h.dim, o, o == o2 && o == oq});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace bpw
