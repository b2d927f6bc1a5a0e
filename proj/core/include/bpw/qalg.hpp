#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpw/grading.hpp"
#include "bpw/linalg.hpp"

namespace bpw {

struct Arrow {
  int from;
  int to;
  std::string label;
};

enum class RelationKind { Commutativity, Nilpotency, Connecting };

// Commutativity: the four corners (a, b, c, d) of a square a -> b -> d, a -> c -> d.
// Nilpotency and Connecting: the vertices of a path that composes to zero.
struct Relation {
  RelationKind kind;
  std::vector<int> vertices;
};

// Quiver with relations plus its Cartan matrix. C[i][j] is the dimension of
// the space of paths from i to j modulo relations, so C[i][j] != 0 requires a
// path i -> j.
struct AlgebraPresentation {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  IntMatrix cartan;

  int size() const { return static_cast<int>(vertices.size()); }
  int count(RelationKind kind) const;
  // Throws std::logic_error unless every arrow carries a nonzero Cartan entry
  // and every nonzero Cartan entry is supported by a path of the quiver.
  void check_support() const;
};

// Polynomial with integer coefficients, lowest degree first.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_string() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// Linear A_n modulo paths of length m.
AlgebraPresentation nakayama(int n, int m);
AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);
// Vertices [0, delta] in lexicographic order, arrows x_i, commutativity squares
// and X_i^{q_i} = 0. Throws std::invalid_argument unless 1 <= q_i <= p_i - 1.
AlgebraPresentation lambda_q(const WeightSystem& ws, const std::vector<int>& q);
// (m + 1) copies of A; block (i, i + 1) of the Cartan matrix is C_A transposed.
// Only the arrows inside each copy are listed.
AlgebraPresentation replicated(const AlgebraPresentation& a, int m);
// Quiver of the (p_t - 2)-replicated algebra of the tensor product of the
// linear quivers A_{p_i - 1}, i != t (t is 0-based). Vertices (x, i), x in
// [s + (p_t - 2) x_t, s + delta], slab i ascending, then x lexicographic.
AlgebraPresentation gamma_quiver(const WeightSystem& ws, int t);

enum class DynkinType { A, D4, D4Alt, E6, E8 };
// A_k linear; D_4 with all arrows into the center (D4Alt: out of it); E_6 and
// E_8 with the long arm oriented linearly and the short arm into the branch.
AlgebraPresentation dynkin_path_algebra(DynkinType type, int k = 0);

// Characteristic polynomial of -C^{-T} C over the rationals. Throws
// std::domain_error for a singular Cartan matrix and std::logic_error if the
// result is not integral or differs from that of -C^{-1} C^T.
IntPolynomial coxeter_polynomial(const AlgebraPresentation& a);
std::int64_t cartan_determinant(const IntMatrix& c);

std::string to_dot(const AlgebraPresentation& a);
// With labels: a header row "object,<labels>" and the label leading each row.
std::string to_csv(const IntMatrix& m, const std::vector<std::string>& labels = {});

// Algebras expected to be derived equivalent, compared through their Coxeter
// polynomials and |det C|.
struct InvariantCheck {
  std::string label;
  std::vector<std::string> names;
  std::vector<IntPolynomial> polys;
  std::vector<std::int64_t> abs_dets;
  bool equal() const;
};

enum class CoxeterSuite { HappelSeidel, Replicated, Dynkin };
// "happel-seidel", "replicated", "dynkin"; throws std::invalid_argument.
CoxeterSuite parse_suite(const std::string& name);
std::vector<InvariantCheck> coxeter_suite(CoxeterSuite suite);

}  // namespace bpw
