#pragma once

#include <map>
#include <vector>

#include "bpw/grading.hpp"
#include "bpw/linalg.hpp"

namespace bpw {

// Finite-dimensional L-graded module over R = S/(f). The action of X_i on the
// fiber at x is a matrix M_x -> M_{x + x_i}; absent entries are zero maps.
// Construction checks that the actions commute and that sum_i X_i^{p_i} = 0.
class GradedModule {
 public:
  using ActionMap = std::map<GradeElement, IntMatrix>;

  explicit GradedModule(const WeightSystem& ws);
  GradedModule(const WeightSystem& ws, std::map<GradeElement, int> support,
               std::vector<ActionMap> actions);

  const WeightSystem& weights() const { return ws_; }
  const std::map<GradeElement, int>& support() const { return support_; }
  int fiber(const GradeElement& x) const;
  std::int64_t total_dim() const;

  // X_i : M_x -> M_{x + x_i}, zero matrix if not stored.
  IntMatrix action(int i, const GradeElement& x) const;
  // X_i^k starting at x.
  IntMatrix power(int i, const GradeElement& x, int k) const;

 private:
  void validate() const;

  WeightSystem ws_;
  std::map<GradeElement, int> support_;
  std::vector<ActionMap> actions_;
};

// k(y): one-dimensional, concentrated in degree -y.
GradedModule make_simple(const WeightSystem& ws, const GradeElement& y);

// R/(X_i^{b_i}) twisted by y, for bounds 1 <= b_i <= p_i. Fibers sit at w - y
// with 0 <= w_i < b_i and X_i moves along the box.
GradedModule make_box(const WeightSystem& ws, const std::vector<int>& bounds, const GradeElement& y);

// E^ell(y) for 1 <= ell_i <= p_i - 1 (ell given as a level-0 element).
GradedModule make_E(const GradeElement& ell, const GradeElement& y);

GradedModule twist_module(const GradedModule& m, const GradeElement& y);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

// Dimension of the degree-0 R-linear maps M -> N.
int module_hom_dim(const GradedModule& m, const GradedModule& n,
                   const WorkingField& field = WorkingField{});

// Same fiber dimensions and same action ranks in every degree.
bool graded_equivalent(const GradedModule& a, const GradedModule& b,
                       const WorkingField& field = WorkingField{});

// Reduction functor phi_{j,0} (to the reduced system) and insertion functor
// psi_{j,0} (to the full system).
GradedModule phi0_module(const GroupEmbedding& emb, const GradedModule& m);
GradedModule psi0_module(const GroupEmbedding& emb, const GradedModule& n);

// General k by twist conjugation:
// phi_{j,k} = (-k x_{j,n}) phi_{j,0} (k x_n), psi_{j,k} = (-k x_n) psi_{j,0} (k x_{j,n}).
GradedModule phi_module(const GroupEmbedding& emb, int k, const GradedModule& m);
GradedModule psi_module(const GroupEmbedding& emb, int k, const GradedModule& n);

// dim Hom(phi_{j,0} M, N) == dim Hom(M, psi_{j,0} N).
bool adjunction_check(const GroupEmbedding& emb, const GradedModule& m, const GradedModule& n,
                      const WorkingField& field = WorkingField{});

}  // namespace bpw
