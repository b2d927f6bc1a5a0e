#include "bpw/gmod.hpp"

#include <stdexcept>

namespace bpw {

GradedModule::GradedModule(const WeightSystem& ws)
    : ws_(ws), actions_(static_cast<size_t>(ws.n())) {}

GradedModule::GradedModule(const WeightSystem& ws, std::map<GradeElement, int> support,
                           std::vector<ActionMap> actions)
    : ws_(ws), actions_(std::move(actions)) {
  if (static_cast<int>(actions_.size()) != ws.n()) {
    throw std::invalid_argument("one action map per variable required");
  }
  for (auto& [x, d] : support) {
    require_same_weights(x.weights(), ws);
    if (d < 0) throw std::invalid_argument("negative fiber dimension");
    if (d > 0) support_.emplace(x, d);
  }
  for (int i = 0; i < ws.n(); ++i) {
    GradeElement xi = GradeElement::x(ws, i);
    auto& acts = actions_[static_cast<size_t>(i)];
    for (auto it = acts.begin(); it != acts.end();) {
      int src = fiber(it->first);
      int dst = fiber(it->first + xi);
      if (src == 0 || dst == 0) {
        it = acts.erase(it);
        continue;
      }
      if (it->second.rows() != dst || it->second.cols() != src) {
        throw std::invalid_argument("action matrix shape does not match fibers");
      }
      ++it;
    }
  }
  validate();
}

int GradedModule::fiber(const GradeElement& x) const {
  auto it = support_.find(x);
  return it == support_.end() ? 0 : it->second;
}

std::int64_t GradedModule::total_dim() const {
  std::int64_t t = 0;
  for (auto& [x, d] : support_) t += d;
  return t;
}

IntMatrix GradedModule::action(int i, const GradeElement& x) const {
  const auto& acts = actions_[static_cast<size_t>(i)];
  auto it = acts.find(x);
  if (it != acts.end()) return it->second;
  return IntMatrix(fiber(x + GradeElement::x(ws_, i)), fiber(x));
}

IntMatrix GradedModule::power(int i, const GradeElement& x, int k) const {
  GradeElement xi = GradeElement::x(ws_, i);
  IntMatrix acc = IntMatrix::identity(fiber(x));
  GradeElement cur = x;
  for (int step = 0; step < k; ++step) {
    acc = action(i, cur) * acc;
    cur = cur + xi;
  }
  return acc;
}

void GradedModule::validate() const {
  const int n = ws_.n();
  for (auto& [x, d] : support_) {
    for (int i = 0; i < n; ++i) {
      GradeElement xi = GradeElement::x(ws_, i);
      for (int j = i + 1; j < n; ++j) {
        GradeElement xj = GradeElement::x(ws_, j);
        IntMatrix a = action(j, x + xi) * action(i, x);
        IntMatrix b = action(i, x + xj) * action(j, x);
        if (!(a == b)) {
          throw std::logic_error("module actions X_" + std::to_string(i + 1) + " and X_" +
                                 std::to_string(j + 1) + " do not commute at " + x.to_string());
        }
      }
    }
    IntMatrix rel(fiber(x + GradeElement::c(ws_)), d);
    for (int i = 0; i < n; ++i) rel = rel + power(i, x, ws_.p(i));
    if (!rel.is_zero()) {
      throw std::logic_error("hypersurface relation fails at " + x.to_string());
    }
  }
}

GradedModule make_simple(const WeightSystem& ws, const GradeElement& y) {
  require_same_weights(ws, y.weights());
  return GradedModule(ws, {{-y, 1}}, std::vector<GradedModule::ActionMap>(static_cast<size_t>(ws.n())));
}

GradedModule make_box(const WeightSystem& ws, const std::vector<int>& bounds, const GradeElement& y) {
  const int n = ws.n();
  if (static_cast<int>(bounds.size()) != n) throw std::invalid_argument("bound count mismatch");
  std::vector<int> hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int b = bounds[static_cast<size_t>(i)];
    if (b < 1 || b > ws.p(i)) throw std::invalid_argument("box bound out of range");
    hi[static_cast<size_t>(i)] = b - 1;
  }
  std::map<GradeElement, int> support;
  std::vector<GradedModule::ActionMap> actions(static_cast<size_t>(n));
  IntMatrix one = IntMatrix::identity(1);
  for (const GradeElement& w : box(ws, std::vector<int>(static_cast<size_t>(n), 0), hi)) {
    support.emplace(w - y, 1);
    for (int i = 0; i < n; ++i) {
      if (w.coeff(i) + 1 < bounds[static_cast<size_t>(i)]) {
        actions[static_cast<size_t>(i)].emplace(w - y, one);
      }
    }
  }
  return GradedModule(ws, std::move(support), std::move(actions));
}

GradedModule make_E(const GradeElement& ell, const GradeElement& y) {
  const WeightSystem& ws = ell.weights();
  if (ell.level() != 0) throw std::invalid_argument("ell must satisfy s <= ell <= s + delta");
  for (int i = 0; i < ws.n(); ++i) {
    if (ell.coeff(i) < 1 || ell.coeff(i) > ws.p(i) - 1) {
      throw std::invalid_argument("ell must satisfy s <= ell <= s + delta");
    }
  }
  return make_box(ws, ell.coeffs(), y);
}

GradedModule twist_module(const GradedModule& m, const GradeElement& y) {
  const WeightSystem& ws = m.weights();
  std::map<GradeElement, int> support;
  std::vector<GradedModule::ActionMap> actions(static_cast<size_t>(ws.n()));
  for (auto& [x, d] : m.support()) {
    support.emplace(x - y, d);
    for (int i = 0; i < ws.n(); ++i) {
      IntMatrix a = m.action(i, x);
      if (a.rows() > 0 && !a.is_zero()) actions[static_cast<size_t>(i)].emplace(x - y, a);
    }
  }
  return GradedModule(ws, std::move(support), std::move(actions));
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  const WeightSystem& ws = a.weights();
  require_same_weights(ws, b.weights());
  std::map<GradeElement, int> support = a.support();
  for (auto& [x, d] : b.support()) support[x] += d;
  std::vector<GradedModule::ActionMap> actions(static_cast<size_t>(ws.n()));
  for (int i = 0; i < ws.n(); ++i) {
    GradeElement xi = GradeElement::x(ws, i);
    for (auto& [x, d] : support) {
      GradeElement t = x + xi;
      auto it = support.find(t);
      if (it == support.end()) continue;
      IntMatrix m(it->second, d);
      IntMatrix pa = a.action(i, x);
      IntMatrix pb = b.action(i, x);
      int ra = a.fiber(t), ca = a.fiber(x);
      for (int r = 0; r < pa.rows(); ++r) {
        for (int c = 0; c < pa.cols(); ++c) m.at(r, c) = pa.at(r, c);
      }
      for (int r = 0; r < pb.rows(); ++r) {
        for (int c = 0; c < pb.cols(); ++c) m.at(ra + r, ca + c) = pb.at(r, c);
      }
      if (!m.is_zero()) actions[static_cast<size_t>(i)].emplace(x, m);
    }
  }
  return GradedModule(ws, std::move(support), std::move(actions));
}

int module_hom_dim(const GradedModule& m, const GradedModule& n, const WorkingField& field) {
  const WeightSystem& ws = m.weights();
  require_same_weights(ws, n.weights());
  // Unknowns: entries of f_x : M_x -> N_x for x in both supports.
  std::map<GradeElement, int> offset;
  int unknowns = 0;
  for (auto& [x, d] : m.support()) {
    int e = n.fiber(x);
    if (e == 0) continue;
    offset.emplace(x, unknowns);
    unknowns += d * e;
  }
  if (unknowns == 0) return 0;
  // f_x entry (r, c) has index offset + r * dim M_x + c.
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
  for (auto& [x, dm] : m.support()) {
    for (int i = 0; i < ws.n(); ++i) {
      GradeElement t = x + GradeElement::x(ws, i);
      int dnt = n.fiber(t);
      if (dnt == 0) continue;
      IntMatrix nx = n.action(i, x);   // N_x -> N_t
      IntMatrix mx = m.action(i, x);   // M_x -> M_t
      auto fx = offset.find(x);
      auto ft = offset.find(t);
      int dnx = n.fiber(x);
      int dmt = m.fiber(t);
      // (N_i f_x - f_t M_i)[r][c] = 0 for r < dim N_t, c < dim M_x.
      for (int r = 0; r < dnt; ++r) {
        for (int c = 0; c < dm; ++c) {
          std::vector<std::pair<int, std::int64_t>> row;
          if (fx != offset.end()) {
            for (int k = 0; k < dnx; ++k) {
              if (nx.at(r, k) != 0) row.emplace_back(fx->second + k * dm + c, nx.at(r, k));
            }
          }
          if (ft != offset.end()) {
            for (int k = 0; k < dmt; ++k) {
              if (mx.at(k, c) != 0) row.emplace_back(ft->second + r * dmt + k, -mx.at(k, c));
            }
          }
          if (!row.empty()) rows.push_back(std::move(row));
        }
      }
    }
  }
  IntMatrix a(static_cast<int>(rows.size()), unknowns);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (auto& [c, v] : rows[r]) a.at(static_cast<int>(r), c) += v;
  }
  return unknowns - rank(a, field);
}

bool graded_equivalent(const GradedModule& a, const GradedModule& b, const WorkingField& field) {
  if (!(a.weights() == b.weights())) return false;
  if (a.support() != b.support()) return false;
  for (auto& [x, d] : a.support()) {
    for (int i = 0; i < a.weights().n(); ++i) {
      if (rank(a.action(i, x), field) != rank(b.action(i, x), field)) return false;
    }
  }
  return true;
}

GradedModule phi0_module(const GroupEmbedding& emb, const GradedModule& m) {
  require_same_weights(m.weights(), emb.target());
  const WeightSystem& src = emb.source();
  const WeightSystem& full = emb.target();
  const int n = full.n();
  const int last = n - 1;
  const int d = emb.gap();
  const GradeElement dxn = GradeElement::x(full, last) * d;

  std::map<GradeElement, int> support;
  std::map<GradeElement, GradeElement> origin;  // reduced degree -> full degree
  for (auto& [z, dim] : m.support()) {
    if (z.coeff(last) < d) continue;
    GradeElement x = emb.theta_inv(z - dxn);
    support.emplace(x, dim);
    origin.emplace(x, z);
  }
  std::vector<GradedModule::ActionMap> actions(static_cast<size_t>(n));
  for (auto& [x, z] : origin) {
    for (int i = 0; i < last; ++i) {
      IntMatrix a = m.action(i, z);
      if (a.rows() > 0 && !a.is_zero()) actions[static_cast<size_t>(i)].emplace(x, a);
    }
    // X_n: one step off the wrap, d + 1 steps at the wrap.
    int steps = (x.coeff(last) == emb.pjn() - 1) ? d + 1 : 1;
    IntMatrix a = m.power(last, z, steps);
    if (a.rows() > 0 && !a.is_zero()) actions[static_cast<size_t>(last)].emplace(x, a);
  }
  return GradedModule(src, std::move(support), std::move(actions));
}

GradedModule psi0_module(const GroupEmbedding& emb, const GradedModule& nmod) {
  require_same_weights(nmod.weights(), emb.source());
  const WeightSystem& full = emb.target();
  const int n = full.n();
  const int last = n - 1;
  const int d = emb.gap();
  const GradeElement xn = GradeElement::x(full, last);

  // Each full degree z has a unique source degree; build the map both ways.
  std::map<GradeElement, GradeElement> origin;  // full degree -> reduced degree
  std::map<GradeElement, int> support;
  for (auto& [y, dim] : nmod.support()) {
    GradeElement base = emb.theta(y);
    if (y.coeff(last) == 0) {
      for (int t = 0; t <= d; ++t) {
        GradeElement z = base + xn * t;
        origin.emplace(z, y);
        support.emplace(z, dim);
      }
    } else {
      GradeElement z = base + xn * d;
      origin.emplace(z, y);
      support.emplace(z, dim);
    }
  }
  std::vector<GradedModule::ActionMap> actions(static_cast<size_t>(n));
  for (auto& [z, y] : origin) {
    for (int i = 0; i < last; ++i) {
      IntMatrix a = nmod.action(i, y);
      if (a.rows() > 0 && !a.is_zero()) actions[static_cast<size_t>(i)].emplace(z, a);
    }
    IntMatrix a = (z.coeff(last) < d) ? IntMatrix::identity(nmod.fiber(y)) : nmod.action(last, y);
    if (a.rows() > 0 && !a.is_zero()) actions[static_cast<size_t>(last)].emplace(z, a);
  }
  return GradedModule(full, std::move(support), std::move(actions));
}

GradedModule phi_module(const GroupEmbedding& emb, int k, const GradedModule& m) {
  const int last = emb.target().n() - 1;
  GradedModule r = phi0_module(emb, twist_module(m, GradeElement::x(emb.target(), last) * k));
  return twist_module(r, GradeElement::x(emb.source(), last) * (-k));
}

GradedModule psi_module(const GroupEmbedding& emb, int k, const GradedModule& nmod) {
  const int last = emb.target().n() - 1;
  GradedModule r = psi0_module(emb, twist_module(nmod, GradeElement::x(emb.source(), last) * k));
  return twist_module(r, GradeElement::x(emb.target(), last) * (-k));
}

bool adjunction_check(const GroupEmbedding& emb, const GradedModule& m, const GradedModule& n,
                      const WorkingField& field) {
  return module_hom_dim(phi0_module(emb, m), n, field) ==
         module_hom_dim(m, psi0_module(emb, n), field);
}

}  // namespace bpw
