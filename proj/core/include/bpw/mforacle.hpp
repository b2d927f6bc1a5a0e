#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpw/grading.hpp"
#include "bpw/linalg.hpp"
#include "bpw/stable.hpp"

namespace bpw {

struct Term {
  std::int64_t coef;
  std::vector<int> exp;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial in X_1..X_n; terms kept sorted by exponent with no zeros.
using Poly = std::vector<Term>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, std::int64_t k);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Poly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  PolyMatrix operator*(const PolyMatrix& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> a_;
};

// L-graded matrix factorization (F0, F1, d0 : F1 -> F0, d1 : F0 -> F1(c)).
// Generator degrees are listed per parity; an entry of d0 from odd generator b
// to even generator a is homogeneous of degree odd[b] - even[a], an entry of
// d1 from even a to odd b of degree even[a] - odd[b] + c.
struct GradedMF {
  WeightSystem weights;
  std::vector<GradeElement> even;
  std::vector<GradeElement> odd;
  PolyMatrix d0;
  PolyMatrix d1;
  Poly potential;

  // Throws std::logic_error on a failed factorization or homogeneity check.
  void check() const;
};

Poly hypersurface(const WeightSystem& ws);

GradedMF rank1_mf(const WeightSystem& ws, int i, int a);
GradedMF tensor_mf(const GradedMF& f, const GradedMF& g);
GradedMF twist_mf(const GradedMF& f, const GradeElement& y);
GradedMF shift_mf(const GradedMF& f, int m);
GradedMF zero_mf(const WeightSystem& ws);

// Tensor of rank1(i, ell_i), then twist, then shift. Built straight from the
// parameters of the representation, without canonicalization.
GradedMF mf_of(const StableObject& obj);

// dim of H^0 of the degree-0 Hom complex Hom(F, G[m]).
int stable_hom_dim_oracle(const GradedMF& f, const GradedMF& g, int m,
                          const WorkingField& field = WorkingField{});

// Hom dimensions against the probe objects: cuboid objects twisted by
// sum eps_i x_i with eps_i in {-1, 0, 1}, at shifts 0 and 1, in both directions.
struct HomProfile {
  std::vector<std::string> probes;
  std::vector<int> out;  // dim Hom(F, probe)
  std::vector<int> in;   // dim Hom(probe, F)
  friend bool operator==(const HomProfile&, const HomProfile&) = default;
};

std::vector<StableObject> profile_probes(const WeightSystem& ws);
HomProfile hom_profile(const GradedMF& f, const WorkingField& field = WorkingField{});

// Twists sum eps_i x_i with eps_i in {-1, 0, 1}, duplicates removed.
std::vector<GradeElement> unit_twists(const WeightSystem& ws);

// Pairs A = U^a(u + lambda c)[m], B = U^b over cuboid a, b, unit twists u,
// |lambda| <= level_radius and m in [shift_min, shift_max].
struct AuditWindow {
  int level_radius = 2;
  int shift_min = -4;
  int shift_max = 4;
};

struct AuditDisagreement {
  std::string a;
  std::string b;
  int calculus;
  int oracle;
  bool oracle_field_stable;  // same oracle value over F_65537 and Q
};

struct AuditReport {
  std::string weights;
  std::string field;
  long pairs = 0;
  long agree = 0;
  long disagree = 0;
  long unknown = 0;                // hom_dim Unknown
  long configuration_unknown = 0;  // no extended-cuboid configuration fits
  std::vector<AuditDisagreement> disagreements;

  double unknown_rate() const;
  bool passed() const { return disagree == 0 && unknown_rate() < 0.2; }
};

// hom_dim against stable_hom_dim_oracle on every pair of the window.
AuditReport audit_calculus(const WeightSystem& ws, const AuditWindow& window = AuditWindow{},
                           const WorkingField& field = WorkingField{});

}  // namespace bpw
