#include "bpw/tilting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bpw {

namespace {

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
  }
  return out;
}

std::vector<bool> membership(const WeightSystem& ws, const FamilySpec& spec) {
  const int n = ws.n();
  std::vector<bool> in(static_cast<size_t>(n), false);
  switch (spec.kind) {
    case FamilyKind::Cuboid:
      std::fill(in.begin(), in.end(), true);
      break;
    case FamilyKind::Koszul:
      break;
    case FamilyKind::Extended:
      for (int i : spec.subset) {
        if (i < 0 || i >= n) throw std::invalid_argument("subset index out of range");
        if (in[static_cast<size_t>(i)]) throw std::invalid_argument("subset index repeated");
        in[static_cast<size_t>(i)] = true;
      }
      break;
    case FamilyKind::Replicated:
      throw std::logic_error("membership is not defined for replicated families");
  }
  return in;
}

// Lexicographically descending tuples v with lo_i <= v_i <= hi_i.
std::vector<std::vector<int>> descending_grid(const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur = hi;
  const int n = static_cast<int>(lo.size());
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == lo[static_cast<size_t>(i)]) {
      cur[static_cast<size_t>(i)] = hi[static_cast<size_t>(i)];
      --i;
    }
    if (i < 0) break;
    --cur[static_cast<size_t>(i)];
  }
  return out;
}

GradeElement element(const WeightSystem& ws, const std::vector<int>& v) {
  std::vector<std::int64_t> c(v.begin(), v.end());
  return GradeElement::from_raw(ws, std::span<const std::int64_t>(c), 0);
}

struct HomCheck {
  std::vector<std::string>* unknown;
  bool vanishes(const StableObject& a, const StableObject& b) {
    HomAnswer h = hom_dim(a, b);
    if (!h.known()) {
      unknown->push_back(a.to_string() + " -> " + b.to_string());
      return true;
    }
    return *h.dim == 0;
  }
};

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "cuboid") return cuboid();
  if (head == "koszul") return koszul();
  if (head == "extended") return extended(parse_list(tail));
  if (head == "replicated") {
    std::vector<int> t = parse_list(tail);
    if (t.size() != 1) throw std::invalid_argument("replicated needs one coordinate");
    return replicated(t[0]);
  }
  throw std::invalid_argument("unknown family kind '" + text + "'");
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case FamilyKind::Cuboid:
      return "cuboid";
    case FamilyKind::Koszul:
      return "koszul";
    case FamilyKind::Extended: {
      std::string s = "extended:";
      for (size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i]);
      return s;
    }
    case FamilyKind::Replicated:
      return "replicated:" + std::to_string(t);
  }
  return "";
}

TiltingFamily make_family(const WeightSystem& ws, const FamilySpec& spec) {
  const int n = ws.n();
  TiltingFamily fam{ws, spec, {}};
  if (spec.kind == FamilyKind::Replicated) {
    if (spec.t < 0 || spec.t >= n) throw std::invalid_argument("replicated coordinate out of range");
    std::vector<int> lo(static_cast<size_t>(n), 1), hi(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) hi[static_cast<size_t>(i)] = ws.p(i) - 1;
    lo[static_cast<size_t>(spec.t)] = ws.p(spec.t) - 1;
    const GradeElement s = specials(ws).s;
    for (int i = 0; i <= ws.p(spec.t) - 2; ++i) {
      for (const auto& ell : descending_grid(lo, hi)) {
        fam.objects.push_back(canonicalize(StableObject::U(element(ws, ell), -(s * i), i * n)));
      }
    }
    return fam;
  }
  const std::vector<bool> in = membership(ws, spec);
  // Per coordinate: ell_i in [1, p_i - 1] with x_i = 0 inside I, ell_i = 1 with
  // x_i in [0, p_i - 2] outside.
  std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    lo[static_cast<size_t>(i)] = in[static_cast<size_t>(i)] ? 1 : 0;
    hi[static_cast<size_t>(i)] = in[static_cast<size_t>(i)] ? ws.p(i) - 1 : ws.p(i) - 2;
  }
  for (const auto& v : descending_grid(lo, hi)) {
    std::vector<int> ell(static_cast<size_t>(n)), x(static_cast<size_t>(n));
    int sigma_x = 0;
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<size_t>(i);
      ell[k] = in[k] ? v[k] : 1;
      x[k] = in[k] ? 0 : v[k];
      sigma_x += x[k];
    }
    fam.objects.push_back(canonicalize(StableObject::U(element(ws, ell), element(ws, x), -sigma_x)));
  }
  return fam;
}

IntMatrix expected_cartan(const WeightSystem& ws, const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Replicated) {
    if (spec.t < 0 || spec.t >= ws.n()) throw std::invalid_argument("replicated coordinate out of range");
    return gamma_quiver(ws, spec.t).cartan;
  }
  const std::vector<bool> in = membership(ws, spec);
  IntMatrix c = IntMatrix::identity(1);
  for (int i = 0; i < ws.n(); ++i) {
    const int m = in[static_cast<size_t>(i)] ? ws.p(i) - 1 : 2;
    c = IntMatrix::kron(c, nakayama(ws.p(i) - 1, m).cartan);
  }
  return c;
}

IntMatrix hom_matrix(const TiltingFamily& fam) {
  const int m = static_cast<int>(fam.objects.size());
  IntMatrix h(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      HomAnswer d = hom_dim(fam.objects[a], fam.objects[b]);
      if (!d.known()) {
        throw UnknownHom("Hom(" + fam.objects[a].to_string() + ", " + fam.objects[b].to_string() +
                         ") is not determined");
      }
      h.at(a, b) = *d.dim;
    }
  }
  return h;
}

ShiftWindow ShiftWindow::for_weights(const WeightSystem& ws) {
  return {-2 * ws.n() - 4, 2 * ws.n() + 4};
}

TiltingReport verify_tilting(const std::vector<StableObject>& objects, const ShiftWindow& window) {
  TiltingReport rep;
  HomCheck check{&rep.unknown_pairs};
  const int m = static_cast<int>(objects.size());
  // edge[a][b]: some Hom(A, B[k]) is nonzero.
  std::vector<std::vector<bool>> edge(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int k = window.lo; k <= window.hi; ++k) {
        const StableObject target = suspend(objects[b], k);
        if (k == 0 && a == b) {
          HomAnswer e = hom_dim(objects[a], target);
          if (!(e == HomAnswer::of(1))) {
            rep.exceptional = false;
            rep.endo_failures.push_back(objects[a].to_string() + " has End of dimension " + e.to_string());
          }
          continue;
        }
        if (check.vanishes(objects[a], target)) continue;
        if (k != 0) {
          rep.rigid = false;
          rep.rigidity_failures.push_back("Hom(" + objects[a].to_string() + ", " +
                                          objects[b].to_string() + "[" + std::to_string(k) + "]) != 0");
        }
        if (a != b) edge[a][b] = true;
        if (a > b) {
          rep.backward_homs.push_back(std::to_string(a) + " -> " + std::to_string(b) + " [" +
                                      std::to_string(k) + "]");
        }
      }
    }
  }
  // Kahn's algorithm on the nonzero-Hom relation.
  std::vector<int> indeg(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) indeg[b] += edge[a][b] ? 1 : 0;
  }
  std::vector<int> ready;
  for (int a = 0; a < m; ++a) {
    if (indeg[a] == 0) ready.push_back(a);
  }
  int done = 0;
  while (!ready.empty()) {
    const int a = ready.back();
    ready.pop_back();
    ++done;
    for (int b = 0; b < m; ++b) {
      if (edge[a][b] && --indeg[b] == 0) ready.push_back(b);
    }
  }
  rep.ordered = done == m;
  return rep;
}

TiltingReport verify_tilting(const TiltingFamily& fam) {
  return verify_tilting(fam.objects, ShiftWindow::for_weights(fam.weights));
}

GlueResult glue(const Ladder& ladder, const std::vector<StableObject>& t1,
                const std::vector<StableObject>& t2, int k1, int k2) {
  if (k1 != k2 + ladder.q() - 1) {
    throw std::invalid_argument("insertion indices must satisfy k1 = k2 + q - 1");
  }
  GlueResult res;
  GlueReport& rep = res.report;
  rep.k1 = k1;
  rep.k2 = k2;
  for (const StableObject& o : t1) rep.image1.push_back(insert(ladder, 1, k1, o));
  for (const StableObject& o : t2) rep.image2.push_back(insert(ladder, 2, k2, o));
  res.objects = rep.image1;
  res.objects.insert(res.objects.end(), rep.image2.begin(), rep.image2.end());

  for (const StableObject& o : rep.image2) {
    StableObject r = reduce(ladder, 1, k1, o);
    if (!r.is_zero()) rep.left_reduced.push_back(r);
  }
  for (const StableObject& o : rep.image1) {
    StableObject r = reduce(ladder, 2, k2 + 1, o);
    if (!r.is_zero()) rep.right_reduced.push_back(r);
  }
  HomCheck check{&rep.unknown_pairs};
  const ShiftWindow w1 = ShiftWindow::for_weights(ladder.reduced(1));
  for (const StableObject& x : rep.left_reduced) {
    for (const StableObject& t : t1) {
      for (int m = w1.lo; m <= w1.hi; ++m) {
        if (m == 0 || check.vanishes(x, suspend(t, m))) continue;
        rep.condition_b = false;
        rep.obstructions.push_back("(b) Hom(" + x.to_string() + ", " + t.to_string() + "[" +
                                   std::to_string(m) + "]) != 0");
      }
    }
  }
  const ShiftWindow w2 = ShiftWindow::for_weights(ladder.reduced(2));
  for (const StableObject& t : t2) {
    for (const StableObject& y : rep.right_reduced) {
      for (int m = w2.lo; m <= w2.hi; ++m) {
        if (m == 0 || check.vanishes(t, suspend(y, m))) continue;
        rep.condition_b_prime = false;
        rep.obstructions.push_back("(b') Hom(" + t.to_string() + ", " + y.to_string() + "[" +
                                   std::to_string(m) + "]) != 0");
      }
    }
  }
  return res;
}

bool same_family(const std::vector<StableObject>& a, const std::vector<StableObject>& b) {
  std::multiset<StableObject> sa, sb;
  for (const StableObject& o : a) sa.insert(canonicalize(o));
  for (const StableObject& o : b) sb.insert(canonicalize(o));
  return sa == sb;
}

GluePreset glue_preset(const std::string& name) {
  const WeightSystem ws({3, 4});
  Ladder ladder = Ladder::build(ws, 3);
  FamilySpec spec;
  int k2 = 0;
  if (name == "cuboid") {
    spec = FamilySpec::cuboid();
  } else if (name == "koszul") {
    spec = FamilySpec::koszul();
    k2 = -1;
  } else {
    throw std::invalid_argument("unknown glue preset '" + name + "'");
  }
  std::vector<StableObject> t1 = make_family(ladder.reduced(1), spec).objects;
  std::vector<StableObject> t2 = make_family(ladder.reduced(2), spec).objects;
  const int k1 = k2 + ladder.q() - 1;
  return GluePreset{std::move(ladder), std::move(t1), std::move(t2), k1, k2, spec};
}

}  // namespace bpw
