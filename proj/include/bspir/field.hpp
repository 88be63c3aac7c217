// Exact arithmetic in GF(q) for prime q, and dense linear algebra over it.
// Everything here is exact: no tolerances exist over a finite field.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bspir {

using Fp = std::uint64_t;  // canonical representative in [0, q)

struct ZeroInverseError : std::domain_error {
  ZeroInverseError() : std::domain_error("inverse of zero in GF(q)") {}
};

struct SingularMatrixError : std::domain_error {
  SingularMatrixError() : std::domain_error("singular matrix over GF(q)") {}
};

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

bool is_prime_u64(std::uint64_t n);

// Field context for GF(q). Cheap to copy; all ops are pure.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  Fp reduce(std::uint64_t x) const { return x % q_; }
  Fp add(Fp a, Fp b) const { Fp s = a + b; return s >= q_ ? s - q_ : s; }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + q_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : q_ - a; }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(static_cast<unsigned __int128>(a) * b % q_);
  }
  Fp pow(Fp a, std::uint64_t e) const;

  // Multiplicative inverse via extended Euclid. Throws ZeroInverseError on 0.
  Fp inv(Fp a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.q_ == b.q_;
  }

 private:
  std::uint64_t q_;
};

using FVector = std::vector<Fp>;

Fp dot(const PrimeField& f, const FVector& a, const FVector& b);

// Row-major dense matrix over one field.
class FMatrix {
 public:
  FMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FMatrix identity(PrimeField field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Fp& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FVector column(std::size_t c) const;
  FVector row(std::size_t r) const;

  // Submatrix picking the given rows/cols (0-based, any order).
  FMatrix select(const std::vector<std::size_t>& rs,
                 const std::vector<std::size_t>& cs) const;

  friend bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Fp> data_;
};

FMatrix mat_mul(const FMatrix& a, const FMatrix& b);
FVector mat_vec(const FMatrix& a, const FVector& x);

// Gauss-Jordan inverse with first-nonzero pivoting. Throws SingularMatrixError.
FMatrix mat_inv(const FMatrix& m);

// Some x with M x = y, if y lies in the column space of M; nullopt otherwise.
// Free variables are set to 0 after row reduction with lowest-index pivoting,
// so the answer is deterministic even for rank-deficient M.
std::optional<FVector> solve_in_colspace(const FMatrix& m, const FVector& y);

}  // namespace bspir
