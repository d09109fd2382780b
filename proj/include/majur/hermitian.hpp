#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "majur/errors.hpp"

namespace majur {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-9;

// d x d complex matrix equal to its conjugate transpose. The property is
// checked once at construction and violating inputs are rejected, never
// symmetrized. Immutable afterwards.
class HermitianOperator {
 public:
  HermitianOperator(int dim, std::vector<Complex> entries)
      : dim_(dim), data_(std::move(entries)) {
    if (dim_ <= 0 ||
        data_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_)) {
      throw DimensionMismatch("operator entries do not form a square matrix of the stated dimension");
    }
    validate();
  }

  explicit HermitianOperator(const std::vector<std::vector<Complex>>& rows)
      : HermitianOperator(static_cast<int>(rows.size()), flatten_rows(rows)) {}

  static HermitianOperator identity(int dim) {
    std::vector<Complex> e(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
    for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = Complex(1.0, 0.0);
    return HermitianOperator(dim, std::move(e));
  }

  static HermitianOperator zero(int dim) {
    return HermitianOperator(dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim));
  }

  int dim() const { return dim_; }

  const Complex& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return data_; }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += at(i, i).real();
    return t;
  }

  HermitianOperator operator+(const HermitianOperator& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("operator dimensions differ in sum");
    std::vector<Complex> e(data_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.data_[i];
    return HermitianOperator(dim_, std::move(e));
  }

  HermitianOperator scaled(double w) const {
    std::vector<Complex> e(data_);
    for (auto& z : e) z *= w;
    return HermitianOperator(dim_, std::move(e));
  }

 private:
  static std::vector<Complex> flatten_rows(const std::vector<std::vector<Complex>>& rows) {
    std::vector<Complex> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size()) {
        throw DimensionMismatch("operator rows have inconsistent lengths");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }

  void validate() const {
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        const Complex& z = at(i, j);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
          throw NotHermitian("operator entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not finite");
        }
      }
      if (std::abs(at(i, i).imag()) > kHermitianTol) {
        throw NotHermitian("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                           ") has imaginary part beyond tolerance");
      }
      for (int j = i + 1; j < dim_; ++j) {
        Complex diff = at(i, j) - std::conj(at(j, i));
        if (std::abs(diff) > kHermitianTol) {
          throw NotHermitian("entries (" + std::to_string(i) + "," + std::to_string(j) +
                             ") and conjugate transpose differ beyond tolerance");
        }
      }
    }
  }

  int dim_;
  std::vector<Complex> data_;
};

// |v><v| for the normalized v. Idempotent, trace 1.
inline HermitianOperator projector_from_vector(const std::vector<Complex>& v) {
  double norm2 = 0.0;
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ZeroVector("projector vector has non-finite entries");
    }
    norm2 += std::norm(z);
  }
  double norm = std::sqrt(norm2);
  if (norm < 1e-12) throw ZeroVector("projector vector has vanishing norm");
  const int d = static_cast<int>(v.size());
  std::vector<Complex> e(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    Complex vi = v[i] / norm;
    for (int j = 0; j < d; ++j) {
      e[static_cast<std::size_t>(i) * d + j] = vi * std::conj(v[j] / norm);
    }
  }
  return HermitianOperator(d, std::move(e));
}

// Entrywise sum of w_i * op_i. Weights must be non-negative.
inline HermitianOperator weighted_sum(const std::vector<std::pair<double, HermitianOperator>>& terms) {
  if (terms.empty()) throw EmptySet("weighted_sum requires at least one term");
  const int d = terms.front().second.dim();
  std::vector<Complex> acc(static_cast<std::size_t>(d) * d, Complex(0.0, 0.0));
  for (const auto& [w, op] : terms) {
    if (w < 0.0 || !std::isfinite(w)) throw InvalidArgument("weighted_sum weight must be a non-negative real");
    if (op.dim() != d) throw DimensionMismatch("weighted_sum operators have mixed dimensions");
    const auto& e = op.entries();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * e[i];
  }
  return HermitianOperator(d, std::move(acc));
}

inline std::vector<Complex> apply(const HermitianOperator& h, const std::vector<Complex>& v) {
  if (static_cast<int>(v.size()) != h.dim()) throw DimensionMismatch("operator/vector dimension mismatch");
  std::vector<Complex> out(v.size(), Complex(0.0, 0.0));
  for (int i = 0; i < h.dim(); ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < h.dim(); ++j) acc += h.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

// <v|H|v>; real for Hermitian H and the imaginary part is dropped.
inline double expectation(const HermitianOperator& h, const std::vector<Complex>& v) {
  std::vector<Complex> hv = apply(h, v);
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * hv[i];
  return acc.real();
}

namespace detail {

// Cyclic Jacobi on a dense real symmetric matrix (flat row-major storage).
// Rotates until the off-diagonal Frobenius norm drops below `tol`.
inline void jacobi_symmetric(std::vector<double>& a, int n, double tol, int max_sweeps) {
  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(2.0 * s);
  };
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() < tol) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[idx(p, q)];
        if (apq == 0.0) continue;
        double theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        double app = a[idx(p, p)], aqq = a[idx(q, q)];
        a[idx(p, p)] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a[idx(q, q)] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a[idx(p, q)] = a[idx(q, p)] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = a[idx(i, p)], aiq = a[idx(i, q)];
          a[idx(i, p)] = a[idx(p, i)] = c * aip - s * aiq;
          a[idx(i, q)] = a[idx(q, i)] = s * aip + c * aiq;
        }
      }
    }
  }
  if (off_norm() >= tol) {
    throw NotConverged("Jacobi eigenvalue sweep limit reached before convergence");
  }
}

}  // namespace detail

// Eigenvalues of a complex Hermitian operator, ascending. Works on the real
// symmetric embedding [[Re H, -Im H], [Im H, Re H]]; every eigenvalue of H
// appears twice there, so the sorted doubled list is thinned by taking every
// other entry. The embedding is built from the lower triangle so it is
// exactly symmetric even when the input only passes the tolerance check.
inline std::vector<double> eigenvalues(const HermitianOperator& h) {
  const int d = h.dim();
  const int n = 2 * d;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  auto put = [&](int i, int j, double v) { a[static_cast<std::size_t>(i) * n + j] = v; };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      Complex z = (i == j) ? Complex(h.at(i, i).real(), 0.0) : h.at(i, j);
      double re = z.real(), im = z.imag();
      put(i, j, re);
      put(j, i, re);
      put(d + i, d + j, re);
      put(d + j, d + i, re);
      // B = Im H is antisymmetric with zero diagonal
      put(i, d + j, -im);
      put(d + j, i, -im);
      put(j, d + i, im);
      put(d + i, j, im);
    }
  }
  detail::jacobi_symmetric(a, n, 1e-13, 100);

  std::vector<double> doubled(n);
  for (int i = 0; i < n; ++i) doubled[i] = a[static_cast<std::size_t>(i) * n + i];
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> values(d);
  for (int i = 0; i < d; ++i) values[i] = doubled[2 * i];
  return values;
}

inline double max_eigenvalue(const HermitianOperator& h) { return eigenvalues(h).back(); }

inline double min_eigenvalue(const HermitianOperator& h) { return eigenvalues(h).front(); }

}  // namespace majur
