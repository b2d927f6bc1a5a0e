#include "bpw/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace bpw {

namespace {

using boost::multiprecision::cpp_rational;

int rank_mod_p(const IntMatrix& m, std::uint32_t q) {
  const int rows = m.rows();
  const int cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  const std::uint64_t p = q;
  std::vector<std::uint64_t> a(static_cast<size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::int64_t v = m.at(r, c) % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      a[static_cast<size_t>(r) * cols + c] = static_cast<std::uint64_t>(v);
    }
  }
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int k = c; k < cols; ++k) {
        std::swap(a[static_cast<size_t>(piv) * cols + k], a[static_cast<size_t>(rank) * cols + k]);
      }
    }
    std::uint64_t* prow = &a[static_cast<size_t>(rank) * cols];
    std::uint64_t iv = inv(prow[c]);
    for (int k = c; k < cols; ++k) prow[k] = prow[k] * iv % p;
    for (int r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = &a[static_cast<size_t>(r) * cols];
      std::uint64_t f = row[c];
      if (f == 0) continue;
      for (int k = c; k < cols; ++k) {
        if (prow[k] == 0) continue;
        row[k] = (row[k] + (p - f) * prow[k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

int rank_rational(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<cpp_rational>> a(static_cast<size_t>(rows),
                                           std::vector<cpp_rational>(static_cast<size_t>(cols)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      cpp_rational f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

WorkingField WorkingField::prime(std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("field modulus must be prime");
  if (q > (1u << 31)) throw std::invalid_argument("field modulus too large");
  return WorkingField{Kind::Prime, q};
}

WorkingField WorkingField::from_env() {
  const char* v = std::getenv("BPW_MODULUS");
  if (v == nullptr || *v == '\0') return WorkingField{};
  std::string s(v);
  if (s == "rational" || s == "Q") return rational();
  unsigned long q = 0;
  try {
    q = std::stoul(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("BPW_MODULUS must be a prime or 'rational'");
  }
  return prime(static_cast<std::uint32_t>(q));
}

std::string WorkingField::to_string() const {
  return kind == Kind::Rational ? std::string("Q") : "F_" + std::to_string(modulus);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (auto v : a_) {
    if (v != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) {
      for (int k = 0; k < b.rows_; ++k) {
        for (int l = 0; l < b.cols_; ++l) {
          r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return r;
}

int rank(const IntMatrix& m, const WorkingField& field) {
  if (field.kind == WorkingField::Kind::Rational) return rank_rational(m);
  return rank_mod_p(m, field.modulus);
}

}  // namespace bpw
