#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpw/functor.hpp"
#include "bpw/linalg.hpp"
#include "bpw/qalg.hpp"
#include "bpw/stable.hpp"

namespace bpw {

enum class FamilyKind { Cuboid, Koszul, Extended, Replicated };

// Kind plus parameter: the subset I (0-based coordinates) for Extended, the
// coordinate t (0-based) for Replicated.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Cuboid;
  std::vector<int> subset;
  int t = 0;

  static FamilySpec cuboid() { return {FamilyKind::Cuboid, {}, 0}; }
  static FamilySpec koszul() { return {FamilyKind::Koszul, {}, 0}; }
  static FamilySpec extended(std::vector<int> subset) { return {FamilyKind::Extended, std::move(subset), 0}; }
  static FamilySpec replicated(int t) { return {FamilyKind::Replicated, {}, t}; }
  // "cuboid", "koszul", "extended:0,1", "extended:" (empty I), "replicated:0".
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

struct TiltingFamily {
  WeightSystem weights;
  FamilySpec spec;
  std::vector<StableObject> objects;  // canonical, in exceptional order
};

// Throws std::invalid_argument for an invalid subset or coordinate.
TiltingFamily make_family(const WeightSystem& ws, const FamilySpec& spec);

// Cartan matrix the endomorphism algebra should have, in family order.
IntMatrix expected_cartan(const WeightSystem& ws, const FamilySpec& spec);

class UnknownHom : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// H[a][b] = dim Hom(fam[a], fam[b]); throws UnknownHom naming the pair.
IntMatrix hom_matrix(const TiltingFamily& fam);

struct ShiftWindow {
  int lo;
  int hi;
  // [-2n - 4, 2n + 4].
  static ShiftWindow for_weights(const WeightSystem& ws);
};

struct TiltingReport {
  bool rigid = true;
  bool exceptional = true;
  bool ordered = true;
  std::vector<std::string> rigidity_failures;
  std::vector<std::string> unknown_pairs;
  std::vector<std::string> endo_failures;
  std::vector<std::string> backward_homs;

  bool passed() const { return rigid && exceptional && ordered && unknown_pairs.empty(); }
};

TiltingReport verify_tilting(const std::vector<StableObject>& objects, const ShiftWindow& window);
TiltingReport verify_tilting(const TiltingFamily& fam);

// Gluing along a recollement with i_* = psi_{1,k1} and j_* = psi_{2,k2}, where
// k1 = k2 + q - 1. Condition (b): Hom(i^* j_* T2, T1[m]) = 0 with
// i^* = phi_{1,k1}; condition (b'): Hom(T2, j^# i_* T1[m]) = 0 with
// j^# = phi_{2,k2+1}; both for m != 0 in the window.
struct GlueReport {
  int k1 = 0;
  int k2 = 0;
  std::vector<StableObject> image1;
  std::vector<StableObject> image2;
  std::vector<StableObject> left_reduced;   // i^* j_* T2
  std::vector<StableObject> right_reduced;  // j^# i_* T1
  bool condition_b = true;
  bool condition_b_prime = true;
  std::vector<std::string> obstructions;
  std::vector<std::string> unknown_pairs;

  bool passed() const { return condition_b && condition_b_prime && unknown_pairs.empty(); }
};

struct GlueResult {
  std::vector<StableObject> objects;
  GlueReport report;
};

GlueResult glue(const Ladder& ladder, const std::vector<StableObject>& t1,
                const std::vector<StableObject>& t2, int k1, int k2);

// Same objects up to order (canonical forms compared as multisets).
bool same_family(const std::vector<StableObject>& a, const std::vector<StableObject>& b);

// Ready-made gluings over (3,4) with split (3,2): "cuboid" inserts the
// cuboid families of (3,3) and (3,2) with k1 = 2, k2 = 0; "koszul" inserts the
// Koszul families with k1 = 1, k2 = -1. `expect` names the resulting family.
struct GluePreset {
  Ladder ladder;
  std::vector<StableObject> t1;
  std::vector<StableObject> t2;
  int k1;
  int k2;
  FamilySpec expect;
};
GluePreset glue_preset(const std::string& name);

}  // namespace bpw
