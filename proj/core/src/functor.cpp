#include "bpw/functor.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "bpw/gmod.hpp"
#include "bpw/mforacle.hpp"

namespace bpw {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int median3(int a, int b, int c) { return std::max(std::min(a, b), std::min(std::max(a, b), c)); }

GradeElement last_x(const WeightSystem& ws, std::int64_t k) {
  return GradeElement::x(ws, ws.n() - 1) * k;
}

void require_j(int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("j must be 1 or 2");
}

// phi_{j,0} on U^ell(y) with y of level 0.
StableObject reduce0(const GroupEmbedding& emb, const GradeElement& ell, const GradeElement& y) {
  const WeightSystem& full = emb.target();
  const int last = full.n() - 1;
  const int d = emb.gap();
  const int pj = emb.pjn();
  const int yn = y.coeff(last);
  const int ln = ell.coeff(last);
  if (yn == 0) {
    if (ln <= d) return StableObject::zero(emb.source());
    return StableObject::U(emb.theta_inv(ell - last_x(full, d)), emb.theta_inv(y));
  }
  if (yn < pj) {
    const int m = median3(0, ln - yn, d);
    return StableObject::U(emb.theta_inv(ell - last_x(full, m)), emb.theta_inv(y));
  }
  if (yn - pj < ln && ln < yn) {
    return StableObject::U(emb.theta_inv(ell - last_x(full, yn - pj)),
                           emb.theta_inv(y - last_x(full, yn) + GradeElement::c(full)));
  }
  return StableObject::zero(emb.source());
}

// psi_{j,0} on U_j^ell(y) with y of level 0.
StableObject insert0(const GroupEmbedding& emb, const GradeElement& ell, const GradeElement& y) {
  const WeightSystem& red = emb.source();
  const int last = red.n() - 1;
  GradeElement big_ell = emb.theta(ell);
  if (y.coeff(last) < ell.coeff(last)) big_ell = big_ell + last_x(emb.target(), emb.gap());
  return StableObject::U(big_ell, emb.theta(y));
}

std::string module_label(const std::string& kind, const GradeElement& a, const GradeElement& y) {
  return kind + a.to_string() + y.to_string();
}

}  // namespace

Ladder Ladder::build(const WeightSystem& full, int p1n) {
  return Ladder(full, GroupEmbedding::make(full, p1n, 1), GroupEmbedding::make(full, p1n, 2));
}

const GroupEmbedding& Ladder::embedding(int j) const {
  require_j(j);
  return j == 1 ? emb1_ : emb2_;
}

StableObject reduce(const Ladder& ladder, int j, int k, const StableObject& obj) {
  const GroupEmbedding& emb = ladder.embedding(j);
  require_same_weights(obj.weights(), ladder.full());
  if (obj.is_zero()) return StableObject::zero(emb.source());
  const WeightSystem& full = ladder.full();
  const GradeElement y = obj.twist() + last_x(full, k);
  const int lvl = y.level();
  StableObject core = reduce0(emb, obj.ell(), y - GradeElement::c(full) * lvl);
  if (core.is_zero()) return core;
  const WeightSystem& red = emb.source();
  GradeElement tw = core.twist() + GradeElement::c(red) * lvl - last_x(red, k);
  return canonicalize(StableObject::U(core.ell(), tw, obj.shift()));
}

StableObject insert(const Ladder& ladder, int j, int k, const StableObject& obj) {
  const GroupEmbedding& emb = ladder.embedding(j);
  require_same_weights(obj.weights(), emb.source());
  const WeightSystem& full = ladder.full();
  if (obj.is_zero()) return StableObject::zero(full);
  const WeightSystem& red = emb.source();
  const GradeElement y = obj.twist() + last_x(red, k);
  const int lvl = y.level();
  StableObject core = insert0(emb, obj.ell(), y - GradeElement::c(red) * lvl);
  GradeElement tw = core.twist() + GradeElement::c(full) * lvl - last_x(full, k);
  return canonicalize(StableObject::U(core.ell(), tw, obj.shift()));
}

GradeElement predict_projective_image(const Ladder& ladder, Direction dir, int j, int k,
                                      const GradeElement& y) {
  const GroupEmbedding& emb = ladder.embedding(j);
  const int pj = emb.pjn();
  const int pn = ladder.period();
  if (dir == Direction::Reduce) {
    const WeightSystem& full = ladder.full();
    require_same_weights(y.weights(), full);
    const WeightSystem& red = emb.source();
    const int last = full.n() - 1;
    const std::int64_t t = static_cast<std::int64_t>(y.coeff(last)) + k;
    const std::int64_t b = floor_div(t, pn);
    const std::int64_t a = t - b * pn;
    if (a < pj) {
      return emb.theta_inv(y - last_x(full, b * pn - k)) + last_x(red, b * pj - k);
    }
    return emb.theta_inv(y - last_x(full, y.coeff(last))) + last_x(red, (b + 1) * pj - k);
  }
  const WeightSystem& red = emb.source();
  require_same_weights(y.weights(), red);
  const int last = red.n() - 1;
  const std::int64_t t = static_cast<std::int64_t>(y.coeff(last)) + k;
  const std::int64_t b = floor_div(t, pj);
  return emb.theta(y - last_x(red, b * pj - k)) + last_x(ladder.full(), b * pn - k);
}

Decomposition decompose(const Ladder& ladder, const GradeElement& ell) {
  const WeightSystem& full = ladder.full();
  require_same_weights(ell.weights(), full);
  const int ln = ell.coeff(full.n() - 1);
  if (ln < ladder.q()) {
    const GroupEmbedding& e = ladder.embedding(1);
    return {1, ladder.q() - 1, StableObject::U(e.theta_inv(ell))};
  }
  const GroupEmbedding& e = ladder.embedding(2);
  return {2, 0, StableObject::U(e.theta_inv(ell - last_x(full, e.gap())))};
}

std::vector<StableObject> cuboid_objects(const WeightSystem& ws) {
  std::vector<int> lo(static_cast<size_t>(ws.n()), 1), hi(static_cast<size_t>(ws.n()));
  for (int i = 0; i < ws.n(); ++i) hi[static_cast<size_t>(i)] = ws.p(i) - 1;
  std::vector<StableObject> out;
  for (const GradeElement& ell : box(ws, lo, hi)) out.push_back(StableObject::U(ell));
  return out;
}

bool RecollementReport::fully_faithful() const {
  return std::all_of(fully_faithful_samples.begin(), fully_faithful_samples.end(),
                     [](const HomSample& s) { return s.ok(); });
}

bool RecollementReport::adjunction_ok() const {
  return std::all_of(adjunction.begin(), adjunction.end(),
                     [](const AdjunctionSample& s) { return s.ok(); });
}

bool RecollementReport::passed() const {
  return composite_zero && fully_faithful() && periodicity && partition && adjunction_ok();
}

RecollementReport check_recollement(const Ladder& ladder, const RecollementWindow& window,
                                    const WorkingField& field) {
  RecollementReport rep;
  const WeightSystem& full = ladder.full();
  rep.weights = full.to_string();
  rep.p1n = ladder.pjn(1);
  rep.p2n = ladder.pjn(2);
  const bool empty = window.level_radius < 0;

  // psi_{2,0} followed by phi_{1,q} kills every rho(k)(z).
  if (!empty) {
    const WeightSystem& red2 = ladder.reduced(2);
    std::vector<int> lo(static_cast<size_t>(red2.n()), 0), hi(static_cast<size_t>(red2.n()));
    for (int i = 0; i < red2.n(); ++i) hi[static_cast<size_t>(i)] = red2.p(i) - 1;
    for (const GradeElement& base : box(red2, lo, hi)) {
      for (int lvl = -window.level_radius; lvl <= window.level_radius; ++lvl) {
        GradeElement z = base + GradeElement::c(red2) * lvl;
        StableObject img = reduce(ladder, 1, ladder.q(), insert(ladder, 2, 0, StableObject::rho_k(red2, z)));
        if (!img.is_zero()) {
          rep.composite_zero = false;
          rep.composite_failures.push_back(z.to_string() + " -> " + img.to_string());
        }
      }
    }
  }

  // Insertion is fully faithful on reduced cuboid objects under small twists.
  if (!empty) {
    for (int j = 1; j <= 2; ++j) {
      const WeightSystem& red = ladder.reduced(j);
      std::vector<StableObject> objs = cuboid_objects(red);
      const GradeElement xl = GradeElement::x(red, red.n() - 1);
      const GradeElement x0 = GradeElement::x(red, 0);
      std::vector<StableObject> probes;
      for (const StableObject& o : objs) {
        for (const GradeElement& t : {GradeElement::zero(red), xl, x0 + xl, -xl}) {
          for (int sh = 0; sh < 2; ++sh) probes.push_back(StableObject::U(o.ell(), t, sh));
        }
      }
      for (int k = window.k_min; k <= window.k_max; ++k) {
        for (const StableObject& a : objs) {
          for (const StableObject& b : probes) {
            const StableObject ia = insert(ladder, j, k, a);
            const StableObject ib = insert(ladder, j, k, b);
            HomAnswer before = hom_dim(a, b);
            HomAnswer after = hom_dim(ia, ib);
            const bool oracle = !before.known() || !after.known();
            if (!before.known()) before = HomAnswer::of(stable_hom_dim_oracle(mf_of(a), mf_of(b), 0, field));
            if (!after.known()) after = HomAnswer::of(stable_hom_dim_oracle(mf_of(ia), mf_of(ib), 0, field));
            rep.fully_faithful_samples.push_back(
                HomSample{j, k, a.to_string(), b.to_string(), *before.dim, *after.dim, oracle});
          }
        }
      }
    }
  }

  // reduce(j, k + p_n, o) = reduce(j, k, o)((p_{j,n} - p_n) x_{j,n}).
  if (!empty) {
    for (int j = 1; j <= 2; ++j) {
      const WeightSystem& red = ladder.reduced(j);
      const GradeElement shift = last_x(red, ladder.pjn(j) - ladder.period());
      for (int k = window.k_min; k <= window.k_max; ++k) {
        for (const StableObject& o : cuboid_objects(full)) {
          StableObject lhs = reduce(ladder, j, k + ladder.period(), o);
          StableObject rhs = twist_obj(reduce(ladder, j, k, o), shift);
          if (!(lhs == rhs)) {
            rep.periodicity = false;
            rep.periodicity_failures.push_back("j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                               " " + o.to_string());
          }
        }
      }
    }
  }

  // The cuboid is the disjoint union of the two insertion images.
  if (!empty) {
    std::set<StableObject> cub;
    for (const StableObject& o : cuboid_objects(full)) cub.insert(canonicalize(o));
    std::set<StableObject> images;
    size_t count = 0;
    for (const StableObject& o : cuboid_objects(ladder.reduced(1))) {
      images.insert(insert(ladder, 1, ladder.q() - 1, o));
      ++count;
    }
    for (const StableObject& o : cuboid_objects(ladder.reduced(2))) {
      images.insert(insert(ladder, 2, 0, o));
      ++count;
    }
    rep.partition = images == cub && count == cub.size();
    for (const StableObject& o : cuboid_objects(full)) {
      Decomposition d = decompose(ladder, o.ell());
      if (!same_object(insert(ladder, d.j, d.k, d.source), o)) rep.partition = false;
    }
  }

  // Module-level adjunctions on E-modules and simples.
  std::mt19937 rng(window.seed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_element = [&](const WeightSystem& ws, int lvl_lo, int lvl_hi) {
    std::vector<std::int64_t> v(static_cast<size_t>(ws.n()));
    for (int i = 0; i < ws.n(); ++i) v[static_cast<size_t>(i)] = pick(0, ws.p(i) - 1);
    return GradeElement::from_raw(ws, std::span<const std::int64_t>(v), pick(lvl_lo, lvl_hi));
  };
  auto random_ell = [&](const WeightSystem& ws) {
    std::vector<std::int64_t> v(static_cast<size_t>(ws.n()));
    for (int i = 0; i < ws.n(); ++i) v[static_cast<size_t>(i)] = pick(1, ws.p(i) - 1);
    return GradeElement::from_raw(ws, std::span<const std::int64_t>(v), 0);
  };
  for (int s = 0; s < window.adjunction_samples; ++s) {
    const int j = 1 + (s % 2);
    const GroupEmbedding& emb = ladder.embedding(j);
    const WeightSystem& red = emb.source();
    GradeElement yn = random_element(red, -1, 0);
    GradeElement ym = emb.theta(yn);
    if (pick(0, 1) == 1) ym += GradeElement::x(full, pick(0, full.n() - 1)) * pick(-1, 1);
    const bool m_simple = pick(0, 3) == 0;
    const bool n_simple = pick(0, 3) == 0;
    GradeElement em = random_ell(full);
    GradeElement en = random_ell(red);
    GradedModule m = m_simple ? make_simple(full, ym) : make_E(em, ym);
    GradedModule nm = n_simple ? make_simple(red, yn) : make_E(en, yn);
    AdjunctionSample a{j,
                       m_simple ? module_label("k", GradeElement::zero(full), ym) : module_label("E", em, ym),
                       n_simple ? module_label("k", GradeElement::zero(red), yn) : module_label("E", en, yn),
                       module_hom_dim(phi0_module(emb, m), nm, field),
                       module_hom_dim(m, psi0_module(emb, nm), field),
                       module_hom_dim(psi0_module(emb, nm), m, field),
                       module_hom_dim(nm, phi_module(emb, 1, m), field)};
    rep.adjunction.push_back(std::move(a));
  }
  return rep;
}

}  // namespace bpw
