#include "qsl/qmatrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

void require_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw InputError("matrix dimension " + std::to_string(dim) + " outside [1, " + std::to_string(kMaxDim) + "]");
  }
}

void require_same_dim(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InputError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

std::size_t qubit_count(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw InputError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

double hermiticity_defect(const CMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

double off_diagonal_mass(const CMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

CMatrix::CMatrix(std::size_t dim, std::initializer_list<Complex> entries) : CMatrix(dim) {
  if (entries.size() != dim * dim) {
    throw InputError("expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(entries.size()));
  }
  auto it = entries.begin();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) (*this)(i, j) = *it++;
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

Complex CMatrix::trace() const noexcept {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

bool CMatrix::is_finite() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex& z = (*this)(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += rhs(i, j);
  }
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) -= rhs(i, j);
  }
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) *= scale;
  }
  return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da * db > kMaxDim) {
    throw InputError("kron: product dimension " + std::to_string(da * db) + " exceeds " + std::to_string(kMaxDim));
  }
  CMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = 0; k < da; ++k) {
      for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + j, k * db + l) = a(i, k) * b(j, l);
      }
    }
  }
  return out;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

double hs_norm(const CMatrix& a) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) sum += std::norm(a(i, j));
  }
  return std::sqrt(sum);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

CMatrix partial_trace(const CMatrix& a, std::size_t which) {
  const std::size_t qubits = qubit_count(a.dim());
  if (which >= qubits) {
    throw InputError("partial_trace: qubit " + std::to_string(which) + " out of range for " + std::to_string(qubits) +
                     " qubits");
  }
  const std::size_t bit = qubits - 1 - which;
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  // Inserts the traced bit back into a reduced index.
  auto expand = [&](std::size_t reduced, std::size_t traced) {
    return ((reduced & ~low_mask) << 1) | (traced << bit) | (reduced & low_mask);
  };
  const std::size_t out_dim = a.dim() / 2;
  CMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i) {
    for (std::size_t j = 0; j < out_dim; ++j) {
      out(i, j) = a(expand(i, 0), expand(j, 0)) + a(expand(i, 1), expand(j, 1));
    }
  }
  return out;
}

CMatrix partial_trace_projector(std::span<const Complex> ket, std::size_t which) {
  if (ket.size() > 2 * kMaxDim) {
    throw InputError("partial_trace_projector: ket of " + std::to_string(ket.size()) + " amplitudes is too large");
  }
  const std::size_t qubits = qubit_count(ket.size());
  if (which >= qubits) {
    throw InputError("partial_trace_projector: qubit " + std::to_string(which) + " out of range");
  }
  const std::size_t bit = qubits - 1 - which;
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  auto expand = [&](std::size_t reduced, std::size_t traced) {
    return ((reduced & ~low_mask) << 1) | (traced << bit) | (reduced & low_mask);
  };
  const std::size_t out_dim = ket.size() / 2;
  CMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i) {
    for (std::size_t j = 0; j < out_dim; ++j) {
      for (std::size_t t = 0; t < 2; ++t) out(i, j) += ket[expand(i, t)] * std::conj(ket[expand(j, t)]);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& input) {
  constexpr double kInputTolerance = 1e-10;
  constexpr double kOffDiagonalTolerance = 1e-12;
  constexpr int kMaxSweeps = 100;

  if (input.dim() == 0) throw InputError("hermitian_eigenvalues: empty matrix");
  if (!input.is_finite()) throw InputError("hermitian_eigenvalues: non-finite entries");
  const double defect = hermiticity_defect(input);
  if (defect > kInputTolerance) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: matrix is not Hermitian (defect " << defect << ")";
    throw InputError(msg.str());
  }

  const std::size_t n = input.dim();
  // Symmetrize so rounding noise in the input cannot stall the sweeps.
  CMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  const double threshold = kOffDiagonalTolerance * std::max(1.0, hs_norm(a));
  int sweep = 0;
  while (off_diagonal_mass(a) > threshold) {
    if (++sweep > kMaxSweeps) throw NumericalError("hermitian_eigenvalues: Jacobi sweeps did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double magnitude = std::abs(a(p, q));
        if (magnitude == 0.0) continue;
        // Phase e^{-i phi} on column q makes the pivot real, then a real
        // Givens rotation annihilates it.
        const Complex phase = a(p, q) / magnitude;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * magnitude);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Unitary G with columns p, q: G(p,p)=c, G(p,q)=s, G(q,p)=-s e^{-i phi}, G(q,q)=c e^{-i phi}.
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        // a <- a G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        // a <- G^dagger a
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

namespace pauli {

CMatrix identity() { return CMatrix::identity(2); }
CMatrix x() { return CMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix y() { return CMatrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
CMatrix z() { return CMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

CMatrix sigma(std::size_t index) {
  switch (index) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw InputError("pauli::sigma: index " + std::to_string(index) + " outside 0..3");
  }
}

}  // namespace pauli

std::string DensityViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::dimension: out << "density matrix must be 8x8"; break;
    case Kind::non_finite: out << "density matrix has non-finite entries"; break;
    case Kind::hermiticity: out << "density matrix is not Hermitian"; break;
    case Kind::trace: out << "density matrix trace differs from 1"; break;
    case Kind::positivity: out << "density matrix has a negative eigenvalue"; break;
  }
  out << " (magnitude " << magnitude << ")";
  return out.str();
}

std::variant<DensityMatrix, DensityViolation> validate_density(const CMatrix& m) {
  using Kind = DensityViolation::Kind;
  if (m.dim() != BasisConvention::kDim) {
    return DensityViolation{Kind::dimension, static_cast<double>(m.dim())};
  }
  if (!m.is_finite()) return DensityViolation{Kind::non_finite, 0.0};

  const double defect = hermiticity_defect(m);
  if (defect > kHermiticityTolerance) return DensityViolation{Kind::hermiticity, defect};

  const Complex tr = m.trace();
  const double trace_error = std::abs(tr - 1.0);
  if (trace_error > kTraceTolerance) return DensityViolation{Kind::trace, trace_error};

  const double lowest = hermitian_eigenvalues(m).front();
  if (lowest < -kPositivityTolerance) return DensityViolation{Kind::positivity, -lowest};

  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from(const CMatrix& m) {
  auto checked = validate_density(m);
  if (auto* violation = std::get_if<DensityViolation>(&checked)) throw InputError(violation->describe());
  return std::get<DensityMatrix>(std::move(checked));
}

}  // namespace qsl
