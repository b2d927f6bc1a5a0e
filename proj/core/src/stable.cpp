#include "bpw/stable.hpp"

#include "bpw/functor.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace bpw {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
  }
  return out;
}

}  // namespace

StableObject StableObject::zero(const WeightSystem& ws) {
  return StableObject(GradeElement(ws), GradeElement(ws), 0, true);
}

StableObject StableObject::U(const GradeElement& ell, const GradeElement& twist, int shift) {
  const WeightSystem& ws = ell.weights();
  require_same_weights(ws, twist.weights());
  if (ell.level() != 0) throw std::invalid_argument("ell must lie in [s, s + delta]");
  for (int i = 0; i < ws.n(); ++i) {
    if (ell.coeff(i) < 1 || ell.coeff(i) > ws.p(i) - 1) {
      throw std::invalid_argument("ell must lie in [s, s + delta]");
    }
  }
  return StableObject(ell, twist, shift, false);
}

StableObject StableObject::rho_k(const WeightSystem& ws, const GradeElement& y, int shift) {
  return U(specials(ws).s, y, shift);
}

StableObject StableObject::parse(const WeightSystem& ws, std::string_view text) {
  std::string t(text);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t == "0") return zero(ws);
  static const std::regex re(R"(^U\[([-0-9,]+)\](?:\(([-0-9,]+);(-?[0-9]+)\))?(?:\[(-?[0-9]+)\])?$)");
  std::smatch m;
  if (!std::regex_match(t, m, re)) throw std::invalid_argument("cannot parse object '" + t + "'");
  std::vector<int> ell = parse_int_list(m[1].str());
  if (static_cast<int>(ell.size()) != ws.n()) throw std::invalid_argument("ell has wrong length");
  std::vector<std::int64_t> e(ell.begin(), ell.end());
  GradeElement ell_el = GradeElement::from_raw(ws, std::span<const std::int64_t>(e), 0);
  for (int i = 0; i < ws.n(); ++i) {
    if (ell[static_cast<size_t>(i)] < 1 || ell[static_cast<size_t>(i)] > ws.p(i) - 1) {
      throw std::invalid_argument("ell must lie in [s, s + delta]");
    }
  }
  GradeElement tw(ws);
  if (m[2].matched) {
    std::vector<int> c = parse_int_list(m[2].str());
    if (static_cast<int>(c.size()) != ws.n()) throw std::invalid_argument("twist has wrong length");
    std::vector<std::int64_t> cc(c.begin(), c.end());
    tw = GradeElement::from_raw(ws, std::span<const std::int64_t>(cc), std::stoll(m[3].str()));
  }
  int shift = m[4].matched ? std::stoi(m[4].str()) : 0;
  return U(ell_el, tw, shift);
}

std::string StableObject::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << "U[";
  for (int i = 0; i < ell_.weights().n(); ++i) os << (i ? "," : "") << ell_.coeff(i);
  os << "](";
  for (int i = 0; i < twist_.weights().n(); ++i) os << (i ? "," : "") << twist_.coeff(i);
  os << ';' << twist_.level() << ")[" << shift_ << ']';
  return os.str();
}

bool operator<(const StableObject& a, const StableObject& b) {
  if (a.zero_ != b.zero_) return a.zero_;
  if (a.ell_ != b.ell_) return a.ell_ < b.ell_;
  if (a.twist_ != b.twist_) return a.twist_ < b.twist_;
  return a.shift_ < b.shift_;
}

StableObject reflect(const StableObject& obj, int i) {
  if (obj.is_zero()) throw std::invalid_argument("reflect needs a nonzero object");
  const WeightSystem& ws = obj.weights();
  if (i < 0 || i >= ws.n()) throw std::out_of_range("reflect coordinate out of range");
  int li = ws.p(i) - obj.ell().coeff(i);
  std::vector<std::int64_t> e(obj.ell().coeffs().begin(), obj.ell().coeffs().end());
  e[static_cast<size_t>(i)] = li;
  GradeElement ell = GradeElement::from_raw(ws, std::span<const std::int64_t>(e), 0);
  return StableObject::U(ell, obj.twist() + GradeElement::x(ws, i) * li, obj.shift() - 1);
}

StableObject canonicalize(const StableObject& obj) {
  if (obj.is_zero()) return obj;
  const WeightSystem& ws = obj.weights();
  const int n = ws.n();
  const GradeElement c = GradeElement::c(ws);
  // Fold the twist level into the shift.
  const int lvl = obj.twist().level();
  const GradeElement base = obj.twist() - c * lvl;
  const int shift = obj.shift() + 2 * lvl;

  std::optional<StableObject> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int flips = __builtin_popcount(mask);
    if (floor_mod(shift - flips, 2) != 0) continue;
    std::vector<std::int64_t> ell(static_cast<size_t>(n));
    std::vector<std::int64_t> tw(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      int l = obj.ell().coeff(i);
      tw[static_cast<size_t>(i)] = base.coeff(i);
      if (mask & (1u << i)) {
        l = ws.p(i) - l;
        tw[static_cast<size_t>(i)] += l;
      }
      ell[static_cast<size_t>(i)] = l;
    }
    const int rest = (shift - flips) / 2;
    StableObject cand = StableObject::U(
        GradeElement::from_raw(ws, std::span<const std::int64_t>(ell), 0),
        GradeElement::from_raw(ws, std::span<const std::int64_t>(tw), rest), 0);
    if (!best || cand < *best) best = cand;
  }
  return *best;
}

bool same_object(const StableObject& a, const StableObject& b) {
  return canonicalize(a) == canonicalize(b);
}

StableObject suspend(const StableObject& obj, int m) {
  if (obj.is_zero()) return obj;
  return canonicalize(StableObject::U(obj.ell(), obj.twist(), obj.shift() + m));
}

StableObject twist_obj(const StableObject& obj, const GradeElement& y) {
  if (obj.is_zero()) return obj;
  return canonicalize(StableObject::U(obj.ell(), obj.twist() + y, obj.shift()));
}

StableObject serre(const StableObject& obj) {
  if (obj.is_zero()) return obj;
  const WeightSystem& ws = obj.weights();
  return canonicalize(
      StableObject::U(obj.ell(), obj.twist() - specials(ws).s, obj.shift() + ws.n()));
}

StableObject serre_inv(const StableObject& obj) {
  if (obj.is_zero()) return obj;
  const WeightSystem& ws = obj.weights();
  return canonicalize(
      StableObject::U(obj.ell(), obj.twist() + specials(ws).s, obj.shift() - ws.n()));
}

std::set<int> match_values(const StableObject& a, const StableObject& b) {
  require_same_weights(a.weights(), b.weights());
  if (a.is_zero() || b.is_zero()) return {0};
  const WeightSystem& ws = a.weights();
  const int n = ws.n();
  // Write A = U^{ell}(x + t)[-sigma(x) + d + j], B = U^{z}(y + t)[-sigma(y) + d' + j]
  // up to reflections and folds. Per coordinate the choices are independent and
  // contribute additively to d - d'; track reachable sums with the conjunction
  // of the local "ell >= z and x - y in {0,1}" conditions.
  const GradeElement g = a.twist() - b.twist();
  const int target = -(a.shift() - b.shift()) - 2 * g.level();

  struct Option {
    int contrib;
    bool ok;
  };
  std::set<int> values;
  for (unsigned subset = 0; subset < (1u << n); ++subset) {
    // sum -> bit 0 set if a false conjunction is reachable, bit 1 if true.
    std::map<int, unsigned> dp{{0, 2u}};
    for (int i = 0; i < n && !dp.empty(); ++i) {
      const int p = ws.p(i);
      const bool in_i = subset & (1u << i);
      std::vector<Option> opts;
      for (int fa = 0; fa < 2; ++fa) {
        for (int fb = 0; fb < 2; ++fb) {
          int la = fa ? p - a.ell().coeff(i) : a.ell().coeff(i);
          int lb = fb ? p - b.ell().coeff(i) : b.ell().coeff(i);
          std::int64_t r = g.coeff(i) + (fa ? la : 0) - (fb ? lb : 0);
          std::int64_t gi = floor_mod(r, p);
          std::int64_t carry = floor_div(r, p);
          int base = -fa + fb + 2 * static_cast<int>(carry);
          if (in_i) {
            if (gi == 0) opts.push_back({base, la >= lb});
          } else {
            if (la != 1 || lb != 1) continue;
            for (std::int64_t e : {gi, gi - p}) {
              if (e > p - 2 || e < -(p - 2)) continue;
              int contrib = base + (e < 0 ? 2 : 0) + static_cast<int>(e);
              opts.push_back({contrib, e == 0 || e == 1});
            }
          }
        }
      }
      std::map<int, unsigned> next;
      for (auto& [sum, bits] : dp) {
        for (const Option& o : opts) {
          unsigned nb = 0;
          if (bits & 2u) nb |= o.ok ? 2u : 1u;
          if (bits & 1u) nb |= 1u;
          next[sum + o.contrib] |= nb;
        }
      }
      dp = std::move(next);
    }
    for (auto& [sum, bits] : dp) {
      if (sum != target) {
        values.insert(0);
      } else {
        if (bits & 1u) values.insert(0);
        if (bits & 2u) values.insert(1);
      }
    }
  }
  return values;
}

HomAnswer configuration_hom_dim(const StableObject& a, const StableObject& b) {
  require_same_weights(a.weights(), b.weights());
  std::set<int> v = match_values(a, b);
  if (v.empty() && !a.is_zero()) v = match_values(b, serre(a));
  if (v.empty() && !b.is_zero()) v = match_values(serre_inv(b), a);
  if (v.empty()) return HomAnswer::unknown();
  if (v.size() > 1) {
    throw std::logic_error("inconsistent Hom configurations for " + a.to_string() + " and " +
                           b.to_string());
  }
  return HomAnswer::of(*v.begin());
}

namespace {

// Moves coordinate i of every element to the last position.
GradeElement move_last(const GradeElement& a, const WeightSystem& target, int i) {
  std::vector<std::int64_t> c;
  for (int k = 0; k < a.weights().n(); ++k) {
    if (k != i) c.push_back(a.coeff(k));
  }
  c.push_back(a.coeff(i));
  return GradeElement::from_raw(target, std::span<const std::int64_t>(c), a.level());
}

StableObject move_last(const StableObject& o, const WeightSystem& target, int i) {
  if (o.is_zero()) return StableObject::zero(target);
  return StableObject::U(move_last(o.ell(), target, i), move_last(o.twist(), target, i), o.shift());
}

}  // namespace

HomAnswer ladder_hom_dim(const StableObject& a, const StableObject& b) {
  require_same_weights(a.weights(), b.weights());
  if (a.is_zero() || b.is_zero()) return HomAnswer::of(0);
  const WeightSystem& ws = a.weights();
  const int n = ws.n();
  int pick = -1;
  for (int i = 0; i < n; ++i) {
    if (ws.p(i) >= 3 && (pick < 0 || ws.p(i) >= ws.p(pick))) pick = i;
  }
  // All weights 2: every U-object is exceptional and Homs detect isomorphism.
  if (pick < 0) return HomAnswer::of(same_object(a, b) ? 1 : 0);

  std::vector<int> p;
  for (int k = 0; k < n; ++k) {
    if (k != pick) p.push_back(ws.p(k));
  }
  p.push_back(ws.p(pick));
  const WeightSystem moved(std::move(p));
  const StableObject ma = move_last(a, moved, pick);
  const StableObject mb = move_last(b, moved, pick);
  const Ladder ladder = Ladder::build(moved, moved.p(n - 1) - 1);

  // A = psi_{j,k}(A'), then Hom(A, B) = Hom(A', phi_{j,k+1}(B)).
  const Decomposition d = decompose(ladder, ma.ell());
  const WeightSystem& red = ladder.reduced(d.j);
  const int yn = ma.twist().coeff(n - 1);
  std::vector<std::int64_t> tw;
  for (int k = 0; k < n; ++k) tw.push_back(ma.twist().coeff(k));
  const GradeElement twist = GradeElement::from_raw(red, std::span<const std::int64_t>(tw), ma.twist().level());
  const StableObject pre = StableObject::U(d.source.ell(), twist, ma.shift());
  const int k = d.k - yn;
  if (!same_object(insert(ladder, d.j, k, pre), ma)) {
    throw std::logic_error("no insertion preimage found for " + a.to_string());
  }
  return hom_dim(pre, reduce(ladder, d.j, k + 1, mb));
}

HomAnswer hom_dim(const StableObject& a, const StableObject& b) {
  HomAnswer h = configuration_hom_dim(a, b);
  if (h.known()) return h;
  return ladder_hom_dim(a, b);
}

WeightSystem knorrer_weights(const WeightSystem& ws) {
  std::vector<int> p{2};
  p.insert(p.end(), ws.weights().begin(), ws.weights().end());
  return WeightSystem(std::move(p));
}

StableObject knorrer_transport(const StableObject& obj) {
  WeightSystem big = knorrer_weights(obj.weights());
  if (obj.is_zero()) return StableObject::zero(big);
  std::vector<std::int64_t> ell{1};
  std::vector<std::int64_t> tw{0};
  for (int i = 0; i < obj.weights().n(); ++i) {
    ell.push_back(obj.ell().coeff(i));
    tw.push_back(obj.twist().coeff(i));
  }
  return StableObject::U(GradeElement::from_raw(big, std::span<const std::int64_t>(ell), 0),
                         GradeElement::from_raw(big, std::span<const std::int64_t>(tw),
                                                obj.twist().level()),
                         obj.shift());
}

}  // namespace bpw
