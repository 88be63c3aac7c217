#include "bspir/field.hpp"

namespace bspir {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (!is_prime_u64(q)) {
    throw std::invalid_argument("field modulus " + std::to_string(q) +
                                " is not prime");
  }
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp r = 1 % q_;
  Fp base = a % q_;
  while (e != 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fp PrimeField::inv(Fp a) const {
  a %= q_;
  if (a == 0) throw ZeroInverseError();
  // extended Euclid on (q, a); q prime so gcd is 1
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(q_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(q_);
  return static_cast<Fp>(t);
}

Fp dot(const PrimeField& f, const FVector& a, const FVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Fp acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

FMatrix FMatrix::identity(PrimeField field, std::size_t n) {
  FMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FVector FMatrix::column(std::size_t c) const {
  FVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

FVector FMatrix::row(std::size_t r) const {
  FVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

FMatrix FMatrix::select(const std::vector<std::size_t>& rs,
                        const std::vector<std::size_t>& cs) const {
  FMatrix out(field_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] >= rows_) throw DimensionError("select: row index out of range");
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] >= cols_) throw DimensionError("select: col index out of range");
      out.at(i, j) = at(rs[i], cs[j]);
    }
  }
  return out;
}

FMatrix mat_mul(const FMatrix& a, const FMatrix& b) {
  if (!(a.field() == b.field())) throw DimensionError("mat_mul: modulus mismatch");
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimension mismatch");
  const PrimeField& f = a.field();
  FMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Fp aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  return c;
}

FVector mat_vec(const FMatrix& a, const FVector& x) {
  if (a.cols() != x.size()) throw DimensionError("mat_vec: dimension mismatch");
  const PrimeField& f = a.field();
  FVector y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Fp acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a.at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

FMatrix mat_inv(const FMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("mat_inv: matrix not square");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  FMatrix a = m;
  FMatrix inv = FMatrix::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    // first nonzero pivot at or below the diagonal
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrixError();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Fp scale = f.inv(a.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), scale);
      inv.at(col, j) = f.mul(inv.at(col, j), scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Fp factor = a.at(r, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::optional<FVector> solve_in_colspace(const FMatrix& m, const FVector& y) {
  if (m.rows() != y.size()) throw DimensionError("solve_in_colspace: rhs length mismatch");
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  // augmented [M | y], reduced to RREF with lowest-index pivoting
  FMatrix aug(f, rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, cols) = y[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && aug.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j <= cols; ++j) std::swap(aug.at(piv, j), aug.at(lead, j));
    }
    Fp scale = f.inv(aug.at(lead, col));
    for (std::size_t j = 0; j <= cols; ++j) aug.at(lead, j) = f.mul(aug.at(lead, j), scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      Fp factor = aug.at(r, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        aug.at(r, j) = f.sub(aug.at(r, j), f.mul(factor, aug.at(lead, j)));
      }
    }
    pivot_col.push_back(col);
    ++lead;
  }
  // inconsistent iff some zero row has nonzero rhs
  for (std::size_t r = pivot_col.size(); r < rows; ++r) {
    if (aug.at(r, cols) != 0) return std::nullopt;
  }
  FVector x(cols, 0);  // free variables stay 0
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug.at(i, cols);
  return x;
}

}  // namespace bspir
