#include "bpw/grading.hpp"

#include <algorithm>
#include <sstream>

namespace bpw {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

WeightSystem::WeightSystem(std::vector<int> p) {
  if (p.empty()) throw std::invalid_argument("weight system needs at least one weight");
  for (int w : p) {
    if (w < 2) throw std::invalid_argument("weights must be >= 2");
  }
  p_ = std::make_shared<const std::vector<int>>(std::move(p));
}

WeightSystem WeightSystem::parse(std::string_view text) {
  std::vector<int> p;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight '" + cur + "'");
    }
    if (used != cur.size()) throw std::invalid_argument("bad weight '" + cur + "'");
    p.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      if (cur.empty()) throw std::invalid_argument("empty weight in list");
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return WeightSystem(std::move(p));
}

std::int64_t WeightSystem::cuboid_size() const {
  std::int64_t r = 1;
  for (int w : *p_) r *= (w - 1);
  return r;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << p(i);
  os << ')';
  return os.str();
}

void require_same_weights(const WeightSystem& a, const WeightSystem& b) {
  if (!(a == b)) {
    throw std::invalid_argument("mismatched weight systems " + a.to_string() + " and " +
                                b.to_string());
  }
}

GradeElement::GradeElement(const WeightSystem& ws)
    : ws_(ws), coeffs_(static_cast<size_t>(ws.n()), 0) {}

GradeElement GradeElement::from_raw(const WeightSystem& ws, std::span<const std::int64_t> x_coeffs,
                                    std::int64_t c_coeff) {
  if (static_cast<int>(x_coeffs.size()) != ws.n()) {
    throw std::invalid_argument("coefficient count does not match weight system");
  }
  GradeElement e(ws);
  std::int64_t level = c_coeff;
  for (int i = 0; i < ws.n(); ++i) {
    std::int64_t p = ws.p(i);
    std::int64_t q = floor_div(x_coeffs[static_cast<size_t>(i)], p);
    e.coeffs_[static_cast<size_t>(i)] = static_cast<int>(x_coeffs[static_cast<size_t>(i)] - q * p);
    level += q;
  }
  e.level_ = static_cast<int>(level);
  return e;
}

GradeElement GradeElement::from_raw(const WeightSystem& ws,
                                    std::initializer_list<std::int64_t> x_coeffs,
                                    std::int64_t c_coeff) {
  std::vector<std::int64_t> v(x_coeffs);
  return from_raw(ws, std::span<const std::int64_t>(v), c_coeff);
}

GradeElement GradeElement::x(const WeightSystem& ws, int i) {
  if (i < 0 || i >= ws.n()) throw std::out_of_range("generator index out of range");
  std::vector<std::int64_t> v(static_cast<size_t>(ws.n()), 0);
  v[static_cast<size_t>(i)] = 1;
  return from_raw(ws, std::span<const std::int64_t>(v), 0);
}

GradeElement GradeElement::c(const WeightSystem& ws) {
  GradeElement e(ws);
  e.level_ = 1;
  return e;
}

bool GradeElement::is_zero() const {
  return level_ == 0 && std::all_of(coeffs_.begin(), coeffs_.end(), [](int v) { return v == 0; });
}

GradeElement GradeElement::operator+(const GradeElement& o) const {
  require_same_weights(ws_, o.ws_);
  std::vector<std::int64_t> v(coeffs_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::int64_t{coeffs_[i]} + o.coeffs_[i];
  return from_raw(ws_, std::span<const std::int64_t>(v), std::int64_t{level_} + o.level_);
}

GradeElement GradeElement::operator-() const {
  std::vector<std::int64_t> v(coeffs_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = -std::int64_t{coeffs_[i]};
  return from_raw(ws_, std::span<const std::int64_t>(v), -std::int64_t{level_});
}

GradeElement GradeElement::operator-(const GradeElement& o) const { return *this + (-o); }

GradeElement GradeElement::operator*(std::int64_t k) const {
  std::vector<std::int64_t> v(coeffs_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = k * coeffs_[i];
  return from_raw(ws_, std::span<const std::int64_t>(v), k * level_);
}

std::string GradeElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ';' << level_ << ')';
  return os.str();
}

std::string GradeElement::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << '+';
    if (coeffs_[i] != 1) os << coeffs_[i];
    os << 'x' << (i + 1);
    first = false;
  }
  if (level_ != 0) {
    if (level_ > 0 && !first) os << '+';
    if (level_ == -1) {
      os << '-';
    } else if (level_ != 1) {
      os << level_;
    }
    os << 'c';
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

bool leq(const GradeElement& a, const GradeElement& b) { return (b - a).level() >= 0; }

Side dichotomy(const GradeElement& a) {
  const WeightSystem& ws = a.weights();
  Specials sp = specials(ws);
  GradeElement bound = sp.c * (ws.n() - 2) + sp.omega;
  bool nonneg = a.level() >= 0;
  bool below = leq(a, bound);
  if (nonneg == below) throw std::logic_error("dichotomy violated for " + a.to_string());
  return nonneg ? Side::NonNegative : Side::BelowBound;
}

Specials specials(const WeightSystem& ws) {
  std::vector<std::int64_t> ones(static_cast<size_t>(ws.n()), 1);
  std::vector<std::int64_t> d(static_cast<size_t>(ws.n()));
  for (int i = 0; i < ws.n(); ++i) d[static_cast<size_t>(i)] = ws.p(i) - 2;
  GradeElement s = GradeElement::from_raw(ws, std::span<const std::int64_t>(ones), 0);
  GradeElement c = GradeElement::c(ws);
  return Specials{c, c - s, GradeElement::from_raw(ws, std::span<const std::int64_t>(d), 0), s};
}

int sigma(const GradeElement& a) {
  const WeightSystem& ws = a.weights();
  if (a.level() != 0) throw std::invalid_argument("sigma needs 0 <= a <= delta");
  int total = 0;
  for (int i = 0; i < ws.n(); ++i) {
    if (a.coeff(i) > ws.p(i) - 2) throw std::invalid_argument("sigma needs 0 <= a <= delta");
    total += a.coeff(i);
  }
  return total;
}

std::vector<GradeElement> box(const WeightSystem& ws, const std::vector<int>& lo,
                              const std::vector<int>& hi) {
  const int n = ws.n();
  if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n) {
    throw std::invalid_argument("box bounds do not match weight system");
  }
  std::vector<int> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<size_t>(i)] = std::max(lo[static_cast<size_t>(i)], 0);
    b[static_cast<size_t>(i)] = std::min(hi[static_cast<size_t>(i)], ws.p(i) - 1);
    if (a[static_cast<size_t>(i)] > b[static_cast<size_t>(i)]) return {};
  }
  std::vector<GradeElement> out;
  std::vector<std::int64_t> cur(a.begin(), a.end());
  while (true) {
    out.push_back(GradeElement::from_raw(ws, std::span<const std::int64_t>(cur), 0));
    int i = n - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == b[static_cast<size_t>(i)]) {
      cur[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t dim_R(const GradeElement& a) {
  const int n = a.weights().n();
  if (a.level() < 0) return 0;
  if (n == 1) return a.level() == 0 ? 1 : 0;
  return binomial(a.level() + n - 2, n - 2);
}

std::int64_t dim_S(const GradeElement& a) {
  const int n = a.weights().n();
  if (a.level() < 0) return 0;
  return binomial(a.level() + n - 1, n - 1);
}

GroupEmbedding GroupEmbedding::make(const WeightSystem& full, int p1n, int j) {
  const int n = full.n();
  const int pn = full.p(n - 1);
  if (j != 1 && j != 2) throw std::invalid_argument("embedding index must be 1 or 2");
  if (pn < 3) throw std::invalid_argument("splitting needs p_n >= 3");
  if (p1n < 2 || p1n > pn - 1) throw std::invalid_argument("split value out of range");
  int p2n = pn + 1 - p1n;
  std::vector<int> w = full.weights();
  w.back() = (j == 1) ? p1n : p2n;
  return GroupEmbedding(WeightSystem(std::move(w)), full, j, p1n, p2n);
}

GradeElement GroupEmbedding::theta(const GradeElement& a) const {
  require_same_weights(a.weights(), source_);
  std::vector<std::int64_t> v(a.coeffs().begin(), a.coeffs().end());
  return GradeElement::from_raw(target_, std::span<const std::int64_t>(v), a.level());
}

bool GroupEmbedding::in_image(const GradeElement& b) const {
  require_same_weights(b.weights(), target_);
  return b.coeffs().back() < pjn();
}

GradeElement GroupEmbedding::theta_inv(const GradeElement& b) const {
  if (!in_image(b)) {
    throw NotInImage("element " + b.to_string() + " is not in the image of theta_" +
                     std::to_string(j_));
  }
  std::vector<std::int64_t> v(b.coeffs().begin(), b.coeffs().end());
  return GradeElement::from_raw(source_, std::span<const std::int64_t>(v), b.level());
}

}  // namespace bpw
