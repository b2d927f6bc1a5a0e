#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bpw {

// Weights (p_1, ..., p_n) of the hypersurface sum_i X_i^{p_i}. Identity is
// structural: two systems are equal iff their weight lists are equal.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<int> p);

  // Parses "3,4" or "(3,4)".
  static WeightSystem parse(std::string_view text);

  int n() const { return static_cast<int>(p_->size()); }
  int p(int i) const { return (*p_)[static_cast<size_t>(i)]; }
  const std::vector<int>& weights() const { return *p_; }

  // prod_i (p_i - 1), the number of summands of every tilting family.
  std::int64_t cuboid_size() const;

  std::string to_string() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.p_ == b.p_ || *a.p_ == *b.p_;
  }

 private:
  std::shared_ptr<const std::vector<int>> p_;
};

// Element sum_i lambda_i x_i + lambda c of the grading group, always stored in
// normal form 0 <= lambda_i < p_i. Coordinates are 0-based.
class GradeElement {
 public:
  explicit GradeElement(const WeightSystem& ws);

  static GradeElement from_raw(const WeightSystem& ws,
                               std::span<const std::int64_t> x_coeffs,
                               std::int64_t c_coeff = 0);
  static GradeElement from_raw(const WeightSystem& ws,
                               std::initializer_list<std::int64_t> x_coeffs,
                               std::int64_t c_coeff = 0);
  static GradeElement zero(const WeightSystem& ws) { return GradeElement(ws); }
  static GradeElement x(const WeightSystem& ws, int i);
  static GradeElement c(const WeightSystem& ws);

  const WeightSystem& weights() const { return ws_; }
  const std::vector<int>& coeffs() const { return coeffs_; }
  int coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  int level() const { return level_; }
  bool is_zero() const;

  GradeElement operator+(const GradeElement& o) const;
  GradeElement operator-(const GradeElement& o) const;
  GradeElement operator-() const;
  GradeElement operator*(std::int64_t k) const;
  GradeElement& operator+=(const GradeElement& o) { return *this = *this + o; }
  GradeElement& operator-=(const GradeElement& o) { return *this = *this - o; }

  friend bool operator==(const GradeElement& a, const GradeElement& b) {
    return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
  }
  // Total order for use as a map key: coefficients, then level.
  friend std::strong_ordering operator<=>(const GradeElement& a, const GradeElement& b) {
    if (auto r = a.coeffs_ <=> b.coeffs_; r != 0) return r;
    return a.level_ <=> b.level_;
  }

  // "(1,2;-1)" style: coefficients then level.
  std::string to_string() const;
  // Human form such as "x1+2x2-c".
  std::string pretty() const;

 private:
  WeightSystem ws_;
  std::vector<int> coeffs_;
  int level_ = 0;
};

inline GradeElement operator*(std::int64_t k, const GradeElement& a) { return a * k; }

void require_same_weights(const WeightSystem& a, const WeightSystem& b);

// a <= b iff b - a has nonnegative level.
bool leq(const GradeElement& a, const GradeElement& b);

enum class Side { NonNegative, BelowBound };

// Exactly one of a >= 0 or a <= (n-2)c + omega holds.
Side dichotomy(const GradeElement& a);

struct Specials {
  GradeElement c;
  GradeElement omega;
  GradeElement delta;
  GradeElement s;
};

Specials specials(const WeightSystem& ws);

// Sum of coefficients for 0 <= a <= delta; throws std::invalid_argument otherwise.
int sigma(const GradeElement& a);

// Level-0 elements sum v_i x_i with lo_i <= v_i <= hi_i (coefficients clamped
// to [0, p_i - 1]), in lexicographic order with coordinate 0 most significant.
std::vector<GradeElement> box(const WeightSystem& ws, const std::vector<int>& lo,
                              const std::vector<int>& hi);

// Degree pieces of R = S/(f) and of S = k[X_1..X_n].
std::int64_t dim_R(const GradeElement& a);
std::int64_t dim_S(const GradeElement& a);

std::int64_t binomial(std::int64_t n, std::int64_t k);

class NotInImage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// theta_j : L_j -> L for the split p_{1,n} + p_{2,n} = p_n + 1, copying
// coefficients and level.
class GroupEmbedding {
 public:
  // j in {1, 2}; p1n is the first split value.
  static GroupEmbedding make(const WeightSystem& full, int p1n, int j);

  const WeightSystem& source() const { return source_; }
  const WeightSystem& target() const { return target_; }
  int j() const { return j_; }
  int p1n() const { return p1n_; }
  int p2n() const { return p2n_; }
  int pjn() const { return j_ == 1 ? p1n_ : p2n_; }
  // p_n - p_{j,n}
  int gap() const { return target_.p(target_.n() - 1) - pjn(); }

  GradeElement theta(const GradeElement& a) const;
  bool in_image(const GradeElement& b) const;
  GradeElement theta_inv(const GradeElement& b) const;

 private:
  GroupEmbedding(WeightSystem source, WeightSystem target, int j, int p1n, int p2n)
      : source_(std::move(source)), target_(std::move(target)), j_(j), p1n_(p1n), p2n_(p2n) {}

  WeightSystem source_;
  WeightSystem target_;
  int j_;
  int p1n_;
  int p2n_;
};

}  // namespace bpw
