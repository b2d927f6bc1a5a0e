#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bpw/grading.hpp"
#include "bpw/stable.hpp"

namespace bpw::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Raw combination sum v_i x_i + level c with |v_i| <= 2 p_i.
inline GradeElement random_element(std::mt19937& rng, const WeightSystem& ws, int level_radius = 3) {
  std::vector<std::int64_t> v;
  for (int i = 0; i < ws.n(); ++i) v.push_back(uniform(rng, -2 * ws.p(i), 2 * ws.p(i)));
  return GradeElement::from_raw(ws, std::span<const std::int64_t>(v), uniform(rng, -level_radius, level_radius));
}

inline GradeElement random_ell(std::mt19937& rng, const WeightSystem& ws) {
  std::vector<std::int64_t> v;
  for (int i = 0; i < ws.n(); ++i) v.push_back(uniform(rng, 1, ws.p(i) - 1));
  return GradeElement::from_raw(ws, std::span<const std::int64_t>(v), 0);
}

inline StableObject random_object(std::mt19937& rng, const WeightSystem& ws, int level_radius = 2,
                                  int shift_radius = 3) {
  return StableObject::U(random_ell(rng, ws), random_element(rng, ws, level_radius),
                         uniform(rng, -shift_radius, shift_radius));
}

inline std::vector<int> cuboid_lo(const WeightSystem& ws) { return std::vector<int>(static_cast<size_t>(ws.n()), 1); }

inline std::vector<int> cuboid_hi(const WeightSystem& ws) {
  std::vector<int> hi;
  for (int i = 0; i < ws.n(); ++i) hi.push_back(ws.p(i) - 1);
  return hi;
}

inline GradeElement el(const WeightSystem& ws, std::initializer_list<std::int64_t> x, std::int64_t level = 0) {
  return GradeElement::from_raw(ws, x, level);
}

}  // namespace bpw::testing
