#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "bpw/grading.hpp"

namespace bpw {

// U^ell(twist)[shift] in the stable category, or the zero object.
class StableObject {
 public:
  static StableObject zero(const WeightSystem& ws);
  // Throws std::invalid_argument unless 1 <= ell_i <= p_i - 1 and level(ell) = 0.
  static StableObject U(const GradeElement& ell, const GradeElement& twist, int shift = 0);
  static StableObject U(const GradeElement& ell) { return U(ell, GradeElement::zero(ell.weights())); }
  // rho(k)(y) = U^s(y).
  static StableObject rho_k(const WeightSystem& ws, const GradeElement& y, int shift = 0);

  // "U[1,2](0,1;0)[0]", shorter forms "U[1,2]" and "U[1,2](0,1;0)" are
  // accepted, as is "0" for the zero object.
  static StableObject parse(const WeightSystem& ws, std::string_view text);

  bool is_zero() const { return zero_; }
  const WeightSystem& weights() const { return ell_.weights(); }
  const GradeElement& ell() const { return ell_; }
  const GradeElement& twist() const { return twist_; }
  int shift() const { return shift_; }

  std::string to_string() const;

  // Equality of representations (not of isomorphism classes).
  friend bool operator==(const StableObject& a, const StableObject& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_ && a.weights() == b.weights();
    return a.ell_ == b.ell_ && a.twist_ == b.twist_ && a.shift_ == b.shift_;
  }
  friend bool operator<(const StableObject& a, const StableObject& b);

 private:
  StableObject(GradeElement ell, GradeElement twist, int shift, bool zero)
      : ell_(std::move(ell)), twist_(std::move(twist)), shift_(shift), zero_(zero) {}

  GradeElement ell_;
  GradeElement twist_;
  int shift_ = 0;
  bool zero_ = false;
};

// Rewrites U^ell(x)[k] as U^{ell'}(x + (p_i - ell_i) x_i)[k - 1] with
// ell'_i = p_i - ell_i; the same object. Coordinate i is 0-based.
StableObject reflect(const StableObject& obj, int i);

// Deterministic representative of the orbit under reflections at every
// coordinate and the fold (c) = [2]: shift 0, lexicographically least
// (ell, twist). Idempotent.
StableObject canonicalize(const StableObject& obj);

// Equality of canonical forms.
bool same_object(const StableObject& a, const StableObject& b);

StableObject suspend(const StableObject& obj, int m);
StableObject twist_obj(const StableObject& obj, const GradeElement& y);
// S = (omega)[n-2] = (-s)[n].
StableObject serre(const StableObject& obj);
StableObject serre_inv(const StableObject& obj);

struct HomAnswer {
  std::optional<int> dim;

  static HomAnswer unknown() { return HomAnswer{}; }
  static HomAnswer of(int d) { return HomAnswer{d}; }
  bool known() const { return dim.has_value(); }
  friend bool operator==(const HomAnswer&, const HomAnswer&) = default;
  std::string to_string() const { return dim ? std::to_string(*dim) : std::string("?"); }
};

// Values of every extended-cuboid configuration containing the pair (A, B)
// after reflections on either side; empty when no configuration fits. A
// sound calculus yields at most one value.
std::set<int> match_values(const StableObject& a, const StableObject& b);

// dim Hom(A, B) by the configuration rule, falling back to
// D Hom(B, S A) and then D Hom(S^{-1} B, A); Unknown when no configuration
// fits. Throws std::logic_error if two configurations disagree.
HomAnswer configuration_hom_dim(const StableObject& a, const StableObject& b);

// Writes A = psi_{j,k}(A') along the ladder of the largest weight >= 3 and
// returns dim Hom(A', phi_{j,k+1}(B)) in the reduced category; with all
// weights 2, Homs between U-objects detect isomorphism.
HomAnswer ladder_hom_dim(const StableObject& a, const StableObject& b);

// configuration_hom_dim, with ladder_hom_dim for the pairs it leaves Unknown.
HomAnswer hom_dim(const StableObject& a, const StableObject& b);

// Prefixes a coordinate of weight 2 (ell-coordinate 1, twist coefficient 0).
WeightSystem knorrer_weights(const WeightSystem& ws);
StableObject knorrer_transport(const StableObject& obj);

}  // namespace bpw
