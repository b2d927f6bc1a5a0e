#include "bpw/qalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bpw {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RMatrix = std::vector<std::vector<Rational>>;

RMatrix to_rational(const IntMatrix& m) {
  RMatrix r(static_cast<size_t>(m.rows()), std::vector<Rational>(static_cast<size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r[i][j] = m.at(i, j);
  }
  return r;
}

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  const size_t n = a.size();
  const size_t k = b.size();
  const size_t m = k ? b[0].size() : 0;
  RMatrix r(n, std::vector<Rational>(m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

RMatrix transpose(const RMatrix& a) {
  RMatrix r(a.empty() ? 0 : a[0].size(), std::vector<Rational>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  }
  return r;
}

// Gauss-Jordan inverse; throws std::domain_error when singular.
RMatrix inverse(RMatrix a) {
  const size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(RMatrix a) {
  const size_t n = a.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

// Faddeev-LeVerrier; coefficients lowest degree first, monic.
std::vector<Rational> charpoly(const RMatrix& a) {
  const size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RMatrix m(n, std::vector<Rational>(n));
  for (size_t k = 1; k <= n; ++k) {
    for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    m = multiply(a, m);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += m[i][i];
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return c;
}

IntPolynomial integral(const std::vector<Rational>& c) {
  IntPolynomial p;
  for (const Rational& r : c) {
    if (boost::multiprecision::denominator(r) != 1) {
      throw std::logic_error("Coxeter polynomial has a non-integral coefficient");
    }
    p.coeffs.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(r)));
  }
  return p;
}

std::string join(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

// All lattice points of prod [lo_i, hi_i], lexicographic.
std::vector<std::vector<int>> grid(const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur = lo;
  const size_t n = lo.size();
  for (size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return out;
  }
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == hi[static_cast<size_t>(i)]) {
      cur[static_cast<size_t>(i)] = lo[static_cast<size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

// Box quiver on a grid: arrows +e_i, commutativity squares, and zero paths of
// length q_i along coordinate i (q_i <= 0 for none, q_i = 1 drops the arrows).
void box_quiver(AlgebraPresentation& a, const std::vector<std::vector<int>>& pts,
                const std::vector<int>& hi, const std::vector<int>& q, int offset,
                const std::vector<std::string>& var_names) {
  const size_t n = hi.size();
  auto index = [&](const std::vector<int>& v) {
    auto it = std::lower_bound(pts.begin(), pts.end(), v);
    return (it != pts.end() && *it == v) ? offset + static_cast<int>(it - pts.begin()) : -1;
  };
  for (const auto& v : pts) {
    const int from = index(v);
    for (size_t i = 0; i < n; ++i) {
      if (q[i] == 1) continue;
      std::vector<int> w = v;
      ++w[i];
      const int to = index(w);
      if (to < 0) continue;
      a.arrows.push_back({from, to, var_names[i]});
      for (size_t j = i + 1; j < n; ++j) {
        std::vector<int> u = v;
        ++u[j];
        std::vector<int> uw = w;
        ++uw[j];
        const int tu = index(u);
        const int tuw = index(uw);
        if (q[j] != 1 && tu >= 0 && tuw >= 0) a.relations.push_back({RelationKind::Commutativity, {from, to, tu, tuw}});
      }
      if (q[i] > 0) {
        std::vector<int> path{from};
        std::vector<int> step = v;
        for (int s = 0; s < q[i]; ++s) {
          ++step[i];
          const int t = index(step);
          if (t < 0) break;
          path.push_back(t);
        }
        if (static_cast<int>(path.size()) == q[i] + 1) a.relations.push_back({RelationKind::Nilpotency, path});
      }
    }
  }
}

}  // namespace

int AlgebraPresentation::count(RelationKind kind) const {
  return static_cast<int>(std::count_if(relations.begin(), relations.end(),
                                        [kind](const Relation& r) { return r.kind == kind; }));
}

void AlgebraPresentation::check_support() const {
  const int n = size();
  if (cartan.rows() != n || cartan.cols() != n) throw std::logic_error(name + ": Cartan shape mismatch");
  std::vector<std::vector<char>> reach(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) reach[i][i] = 1;
  for (const Arrow& a : arrows) {
    if (cartan.at(a.from, a.to) == 0) {
      throw std::logic_error(name + ": arrow " + vertices[a.from] + " -> " + vertices[a.to] +
                             " has zero Cartan entry");
    }
    reach[a.from][a.to] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) reach[i][j] |= reach[k][j];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cartan.at(i, j) < 0) throw std::logic_error(name + ": negative Cartan entry");
      if (cartan.at(i, j) != 0 && !reach[i][j]) {
        throw std::logic_error(name + ": Cartan entry " + vertices[i] + " -> " + vertices[j] +
                               " has no supporting path");
      }
    }
  }
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const std::int64_t c = coeffs[static_cast<size_t>(d)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || d == 0) os << a;
    if (d >= 1) os << 'x';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

AlgebraPresentation nakayama(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("nakayama needs n, m >= 1");
  AlgebraPresentation a;
  a.name = "A" + std::to_string(n) + "(" + std::to_string(m) + ")";
  std::vector<std::vector<int>> pts;
  for (int i = 1; i <= n; ++i) {
    a.vertices.push_back(std::to_string(i));
    pts.push_back({i});
  }
  box_quiver(a, pts, {n}, {m < n ? m : 0}, 0, {"a"});
  a.cartan = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n && j - i < m; ++j) a.cartan.at(i, j) = 1;
  }
  return a;
}

AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  AlgebraPresentation t;
  t.name = a.name + "x" + b.name;
  const int nb = b.size();
  auto idx = [nb](int u, int v) { return u * nb + v; };
  for (const auto& u : a.vertices) {
    for (const auto& v : b.vertices) t.vertices.push_back("(" + u + "|" + v + ")");
  }
  for (const Arrow& al : a.arrows) {
    for (int v = 0; v < nb; ++v) t.arrows.push_back({idx(al.from, v), idx(al.to, v), al.label});
  }
  for (int u = 0; u < a.size(); ++u) {
    for (const Arrow& be : b.arrows) t.arrows.push_back({idx(u, be.from), idx(u, be.to), be.label});
  }
  for (const Arrow& al : a.arrows) {
    for (const Arrow& be : b.arrows) {
      t.relations.push_back({RelationKind::Commutativity,
                             {idx(al.from, be.from), idx(al.to, be.from), idx(al.from, be.to),
                              idx(al.to, be.to)}});
    }
  }
  for (const Relation& r : a.relations) {
    for (int v = 0; v < nb; ++v) {
      Relation c{r.kind, {}};
      for (int u : r.vertices) c.vertices.push_back(idx(u, v));
      t.relations.push_back(std::move(c));
    }
  }
  for (int u = 0; u < a.size(); ++u) {
    for (const Relation& r : b.relations) {
      Relation c{r.kind, {}};
      for (int v : r.vertices) c.vertices.push_back(idx(u, v));
      t.relations.push_back(std::move(c));
    }
  }
  t.cartan = IntMatrix::kron(a.cartan, b.cartan);
  return t;
}

AlgebraPresentation lambda_q(const WeightSystem& ws, const std::vector<int>& q) {
  const int n = ws.n();
  if (static_cast<int>(q.size()) != n) throw std::invalid_argument("q has wrong length");
  for (int i = 0; i < n; ++i) {
    if (q[static_cast<size_t>(i)] < 1 || q[static_cast<size_t>(i)] > ws.p(i) - 1) {
      throw std::invalid_argument("q_i must lie in [1, p_i - 1]");
    }
  }
  AlgebraPresentation a;
  a.name = "Lambda(" + join(q) + ")";
  std::vector<int> lo(static_cast<size_t>(n), 0), hi(static_cast<size_t>(n));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    hi[static_cast<size_t>(i)] = ws.p(i) - 2;
    names.push_back("x" + std::to_string(i + 1));
  }
  const auto pts = grid(lo, hi);
  for (const auto& v : pts) {
    std::vector<std::int64_t> c(v.begin(), v.end());
    a.vertices.push_back(GradeElement::from_raw(ws, std::span<const std::int64_t>(c), 0).pretty());
  }
  box_quiver(a, pts, hi, q, 0, names);
  const int m = static_cast<int>(pts.size());
  a.cartan = IntMatrix(m, m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const int d = pts[y][i] - pts[x][i];
        ok = d >= 0 && d < q[static_cast<size_t>(i)];
      }
      a.cartan.at(x, y) = ok ? 1 : 0;
    }
  }
  return a;
}

AlgebraPresentation replicated(const AlgebraPresentation& a, int m) {
  if (m < 0) throw std::invalid_argument("replication index must be >= 0");
  AlgebraPresentation r;
  r.name = a.name + "^(" + std::to_string(m) + ")";
  const int n = a.size();
  for (int i = 0; i <= m; ++i) {
    for (const auto& v : a.vertices) r.vertices.push_back(v + "|" + std::to_string(i));
    for (const Arrow& ar : a.arrows) r.arrows.push_back({ar.from + i * n, ar.to + i * n, ar.label});
    for (const Relation& rel : a.relations) {
      Relation c{rel.kind, {}};
      for (int v : rel.vertices) c.vertices.push_back(v + i * n);
      r.relations.push_back(std::move(c));
    }
  }
  const int size = (m + 1) * n;
  r.cartan = IntMatrix(size, size);
  for (int i = 0; i <= m; ++i) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        r.cartan.at(i * n + u, i * n + v) = a.cartan.at(u, v);
        if (i < m) r.cartan.at(i * n + u, (i + 1) * n + v) = a.cartan.at(v, u);
      }
    }
  }
  return r;
}

AlgebraPresentation gamma_quiver(const WeightSystem& ws, int t) {
  const int n = ws.n();
  if (t < 0 || t >= n) throw std::out_of_range("gamma_quiver: t out of range");
  std::vector<int> lo(static_cast<size_t>(n), 1), hi(static_cast<size_t>(n)), q(static_cast<size_t>(n), 0);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    hi[static_cast<size_t>(i)] = ws.p(i) - 1;
    names.push_back("x" + std::to_string(i + 1));
  }
  lo[static_cast<size_t>(t)] = ws.p(t) - 1;
  const auto pts = grid(lo, hi);
  const int slab = static_cast<int>(pts.size());
  const int copies = ws.p(t) - 1;

  AlgebraPresentation g;
  g.name = "Gamma^" + std::to_string(t + 1) + "(" + join(ws.weights()) + ")";
  for (int i = 0; i < copies; ++i) {
    for (const auto& v : pts) g.vertices.push_back("(" + join(v) + ")|" + std::to_string(i));
    box_quiver(g, pts, hi, q, i * slab, names);
  }
  std::string conn;
  for (int k = 0; k < n; ++k) {
    if (k != t) conn += names[static_cast<size_t>(k)];
  }
  for (int i = 0; i + 1 < copies; ++i) {
    g.arrows.push_back({i * slab + slab - 1, (i + 1) * slab, conn.empty() ? "1" : conn});
  }

  AlgebraPresentation base = nakayama(1, 1);
  bool first = true;
  for (int k = 0; k < n; ++k) {
    if (k == t) continue;
    AlgebraPresentation f = nakayama(ws.p(k) - 1, ws.p(k) - 1);
    base = first ? f : tensor(base, f);
    first = false;
  }
  g.cartan = replicated(base, ws.p(t) - 2).cartan;
  return g;
}

AlgebraPresentation dynkin_path_algebra(DynkinType type, int k) {
  AlgebraPresentation a;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  switch (type) {
    case DynkinType::A:
      if (k < 1) throw std::invalid_argument("A_k needs k >= 1");
      n = k;
      a.name = "A_" + std::to_string(k);
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case DynkinType::D4:
      n = 4;
      a.name = "D_4";
      edges = {{1, 0}, {2, 0}, {3, 0}};
      break;
    case DynkinType::D4Alt:
      n = 4;
      a.name = "D_4'";
      edges = {{0, 1}, {0, 2}, {0, 3}};
      break;
    case DynkinType::E6:
      n = 6;
      a.name = "E_6";
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}};
      break;
    case DynkinType::E8:
      n = 8;
      a.name = "E_8";
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {7, 2}};
      break;
  }
  for (int i = 0; i < n; ++i) a.vertices.push_back(std::to_string(i + 1));
  for (auto [u, v] : edges) a.arrows.push_back({u, v, "a"});
  a.cartan = IntMatrix::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [u, v] : edges) {
      for (int w = 0; w < n; ++w) {
        if (a.cartan.at(w, u) && !a.cartan.at(w, v)) {
          a.cartan.at(w, v) = 1;
          grew = true;
        }
      }
    }
  }
  return a;
}

IntPolynomial coxeter_polynomial(const AlgebraPresentation& a) {
  const RMatrix c = to_rational(a.cartan);
  const RMatrix cinv = inverse(c);
  RMatrix phi = multiply(transpose(cinv), c);
  RMatrix psi = multiply(cinv, transpose(c));
  for (auto& row : phi) {
    for (auto& x : row) x = -x;
  }
  for (auto& row : psi) {
    for (auto& x : row) x = -x;
  }
  IntPolynomial p = integral(charpoly(phi));
  if (!(p == integral(charpoly(psi)))) {
    throw std::logic_error("Coxeter conventions disagree for " + a.name);
  }
  return p;
}

std::int64_t cartan_determinant(const IntMatrix& c) {
  const Rational d = determinant(to_rational(c));
  return static_cast<std::int64_t>(boost::multiprecision::numerator(d));
}

std::string to_dot(const AlgebraPresentation& a) {
  std::ostringstream os;
  os << "digraph \"" << a.name << "\" {\n  rankdir=LR;\n";
  for (int i = 0; i < a.size(); ++i) os << "  v" << i << " [label=\"" << a.vertices[i] << "\"];\n";
  for (const Arrow& ar : a.arrows) {
    os << "  v" << ar.from << " -> v" << ar.to << " [label=\"" << ar.label << "\"];\n";
  }
  for (const Relation& r : a.relations) {
    const int from = r.vertices.front();
    const int to = r.vertices.back();
    const char* kind = r.kind == RelationKind::Commutativity ? "comm"
                       : r.kind == RelationKind::Nilpotency  ? "zero"
                                                             : "conn";
    os << "  v" << from << " -> v" << to << " [style=dashed, arrowhead=none, label=\"" << kind
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

std::string to_csv(const IntMatrix& m, const std::vector<std::string>& labels) {
  const bool labelled = !labels.empty();
  if (labelled && (static_cast<int>(labels.size()) != m.rows() || m.rows() != m.cols())) {
    throw std::invalid_argument("labels must match a square matrix");
  }
  std::ostringstream os;
  if (labelled) {
    os << "object";
    for (const std::string& l : labels) os << ',' << csv_field(l);
    os << '\n';
  }
  for (int i = 0; i < m.rows(); ++i) {
    if (labelled) os << csv_field(labels[static_cast<size_t>(i)]) << ',';
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
    os << '\n';
  }
  return os.str();
}

bool InvariantCheck::equal() const {
  for (size_t i = 1; i < polys.size(); ++i) {
    if (!(polys[i] == polys[0]) || abs_dets[i] != abs_dets[0]) return false;
  }
  return true;
}

CoxeterSuite parse_suite(const std::string& name) {
  if (name == "happel-seidel") return CoxeterSuite::HappelSeidel;
  if (name == "replicated") return CoxeterSuite::Replicated;
  if (name == "dynkin") return CoxeterSuite::Dynkin;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

void add_member(InvariantCheck& check, const std::string& name, const AlgebraPresentation& a) {
  check.names.push_back(name);
  check.polys.push_back(coxeter_polynomial(a));
  check.abs_dets.push_back(std::abs(cartan_determinant(a.cartan)));
}

std::string nak_name(int n, int m) { return "A" + std::to_string(n) + "(" + std::to_string(m) + ")"; }

}  // namespace

std::vector<InvariantCheck> coxeter_suite(CoxeterSuite suite) {
  std::vector<InvariantCheck> out;
  switch (suite) {
    case CoxeterSuite::HappelSeidel:
      for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}, {4, 4}, {2, 7}}) {
        const int m = (a - 1) * (b - 1);
        InvariantCheck c{"(" + std::to_string(a) + "," + std::to_string(b) + ")", {}, {}, {}};
        add_member(c, nak_name(m, a), nakayama(m, a));
        add_member(c, nak_name(m, b), nakayama(m, b));
        add_member(c, nak_name(a - 1, a - 1) + " x " + nak_name(b - 1, b - 1),
                   tensor(nakayama(a - 1, a - 1), nakayama(b - 1, b - 1)));
        out.push_back(std::move(c));
      }
      break;
    case CoxeterSuite::Replicated:
      for (const char* w : {"3,4", "3,4,5", "2,3,4"}) {
        const WeightSystem ws = WeightSystem::parse(w);
        AlgebraPresentation prod = nakayama(ws.p(0) - 1, ws.p(0) - 1);
        std::string prod_name = nak_name(ws.p(0) - 1, ws.p(0) - 1);
        for (int i = 1; i < ws.n(); ++i) {
          prod = tensor(prod, nakayama(ws.p(i) - 1, ws.p(i) - 1));
          prod_name += " x " + nak_name(ws.p(i) - 1, ws.p(i) - 1);
        }
        for (int t = 0; t < ws.n(); ++t) {
          InvariantCheck c{ws.to_string() + " t=" + std::to_string(t), {}, {}, {}};
          add_member(c, "Gamma^" + std::to_string(t), gamma_quiver(ws, t));
          add_member(c, prod_name, prod);
          out.push_back(std::move(c));
        }
      }
      break;
    case CoxeterSuite::Dynkin: {
      auto A = [](int k) { return dynkin_path_algebra(DynkinType::A, k); };
      const std::vector<std::pair<int, DynkinType>> trees{
          {2, DynkinType::D4}, {3, DynkinType::E6}, {4, DynkinType::E8}};
      const char* tree_names[] = {"D4", "E6", "E8"};
      for (size_t i = 0; i < trees.size(); ++i) {
        const int m = trees[i].first;
        InvariantCheck c{"A2 x A" + std::to_string(m), {}, {}, {}};
        add_member(c, "A2 x A" + std::to_string(m), tensor(A(2), A(m)));
        add_member(c, tree_names[i], dynkin_path_algebra(trees[i].second));
        if (trees[i].second == DynkinType::D4) add_member(c, "D4 (other orientation)", dynkin_path_algebra(DynkinType::D4Alt));
        out.push_back(std::move(c));
      }
      for (auto [l, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        const std::string tn = "A" + std::to_string(l) + " x A" + std::to_string(m);
        InvariantCheck c{tn, {}, {}, {}};
        add_member(c, tn, tensor(A(l), A(m)));
        add_member(c, nak_name(m, m) + " replicated " + std::to_string(l - 1),
                   replicated(nakayama(m, m), l - 1));
        add_member(c, nak_name(l * m, m + 1), nakayama(l * m, m + 1));
        out.push_back(std::move(c));
      }
      break;
    }
  }
  return out;
}

}  // namespace bpw
