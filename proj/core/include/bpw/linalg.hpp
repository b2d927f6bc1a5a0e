#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bpw {

// Field used for rank computations: F_q for a prime q, or exact rationals.
struct WorkingField {
  enum class Kind { Prime, Rational };

  Kind kind = Kind::Prime;
  std::uint32_t modulus = 32003;

  static WorkingField prime(std::uint32_t q);
  static WorkingField rational() { return WorkingField{Kind::Rational, 0}; }
  // F_32003 unless BPW_MODULUS names another prime (or "rational").
  static WorkingField from_env();

  std::string to_string() const;
};

bool is_prime(std::uint64_t q);

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Kronecker product.
  static IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

int rank(const IntMatrix& m, const WorkingField& field);

}  // namespace bpw
