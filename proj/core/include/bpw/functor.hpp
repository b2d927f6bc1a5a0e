#pragma once

#include <string>
#include <vector>

#include "bpw/grading.hpp"
#include "bpw/linalg.hpp"
#include "bpw/stable.hpp"

namespace bpw {

// Split p_{1,n} + p_{2,n} = p_n + 1 of the last weight together with the two
// reduced weight systems and their embeddings into the full grading group.
class Ladder {
 public:
  // Throws std::invalid_argument unless p_n >= 3 and 2 <= p1n <= p_n - 1.
  static Ladder build(const WeightSystem& full, int p1n);

  const WeightSystem& full() const { return full_; }
  const WeightSystem& reduced(int j) const { return embedding(j).source(); }
  const GroupEmbedding& embedding(int j) const;
  int q() const { return emb1_.p1n(); }
  int pjn(int j) const { return embedding(j).pjn(); }
  int period() const { return full_.p(full_.n() - 1); }

 private:
  Ladder(WeightSystem full, GroupEmbedding e1, GroupEmbedding e2)
      : full_(std::move(full)), emb1_(std::move(e1)), emb2_(std::move(e2)) {}
  WeightSystem full_;
  GroupEmbedding emb1_;
  GroupEmbedding emb2_;
};

// phi_{j,k} on U-objects of the full system; result canonicalized.
StableObject reduce(const Ladder& ladder, int j, int k, const StableObject& obj);
// psi_{j,k} on U-objects of the j-th reduced system; result canonicalized.
StableObject insert(const Ladder& ladder, int j, int k, const StableObject& obj);

enum class Direction { Reduce, Insert };

// Twist of the projective image: phi_{j,k}(R(y)) = R^j(result) for Reduce
// (y in the full group), psi_{j,k}(R^j(y)) = R(result) for Insert (y in the
// j-th reduced group).
GradeElement predict_projective_image(const Ladder& ladder, Direction dir, int j, int k,
                                      const GradeElement& y);

// U^ell as the image of a reduced cuboid object: insert(j, k, source) == U^ell.
struct Decomposition {
  int j;
  int k;
  StableObject source;
};
Decomposition decompose(const Ladder& ladder, const GradeElement& ell);

// Sampling parameters for check_recollement. A negative level radius gives an
// empty window.
struct RecollementWindow {
  int level_radius = 2;
  int k_min = -1;
  int k_max = 1;
  int adjunction_samples = 50;
  unsigned seed = 1;

  static RecollementWindow empty() { return RecollementWindow{-1, 0, -1, 0, 1}; }
};

// Hom dimensions before and after insertion. Pairs the calculus leaves
// Unknown are settled by the matrix-factorization oracle.
struct HomSample {
  int j;
  int k;
  std::string a;
  std::string b;
  int reduced;
  int inserted;
  bool via_oracle;
  bool ok() const { return reduced == inserted; }
};

struct AdjunctionSample {
  int j;
  std::string m;
  std::string n;
  int left_lhs;   // dim Hom(phi_{j,0} M, N)
  int left_rhs;   // dim Hom(M, psi_{j,0} N)
  int right_lhs;  // dim Hom(psi_{j,0} N, M)
  int right_rhs;  // dim Hom(N, phi_{j,1} M)
  bool ok() const { return left_lhs == left_rhs && right_lhs == right_rhs; }
};

struct RecollementReport {
  std::string weights;
  int p1n = 0;
  int p2n = 0;
  bool composite_zero = true;
  std::vector<std::string> composite_failures;
  std::vector<HomSample> fully_faithful_samples;
  bool periodicity = true;
  std::vector<std::string> periodicity_failures;
  bool partition = true;
  std::vector<AdjunctionSample> adjunction;

  bool fully_faithful() const;
  bool adjunction_ok() const;
  bool passed() const;
};

RecollementReport check_recollement(const Ladder& ladder,
                                    const RecollementWindow& window = RecollementWindow{},
                                    const WorkingField& field = WorkingField{});

// Cuboid objects U^ell, s <= ell <= s + delta, lexicographic in ell.
std::vector<StableObject> cuboid_objects(const WeightSystem& ws);

}  // namespace bpw
