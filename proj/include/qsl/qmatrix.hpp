#pragma once

// Dense complex matrices for up to three qubits.
//
// Everything in this artifact lives in a Hilbert space of dimension 2, 4 or 8,
// so matrices are stored inline in a fixed 8x8 buffer and copied by value.
// Qubit 0 is the most significant bit of the row/column index: the ket
// |abc> sits at index 4a + 2b + c.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qsl {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 8;

class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  // Row-major entries; the list length must be dim * dim.
  CMatrix(std::size_t dim, std::initializer_list<Complex> entries);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> values);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * kMaxDim + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * kMaxDim + col];
  }

  [[nodiscard]] Complex trace() const noexcept;
  [[nodiscard]] bool is_finite() const noexcept;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex scale) noexcept;

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix lhs, Complex scale) noexcept { return lhs *= scale; }
  friend CMatrix operator*(Complex scale, CMatrix rhs) noexcept { return rhs *= scale; }
  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

// Kronecker product; rejects results larger than kMaxDim.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);

// Hilbert-Schmidt (Frobenius) norm sqrt(tr(A^dagger A)).
double hs_norm(const CMatrix& a) noexcept;

// Largest elementwise modulus of a - b. Dimensions must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Traces out qubit `which` (0 = most significant) of a 2^k x 2^k matrix.
CMatrix partial_trace(const CMatrix& a, std::size_t which);

// Reduced state of the projector |psi><psi| after tracing out qubit `which`
// of the 2^k-amplitude ket. Kets may hold up to 2 * kMaxDim amplitudes, so a
// three-qubit register entangled with one ancilla reduces to an 8x8 result
// without a 16x16 matrix type.
CMatrix partial_trace_projector(std::span<const Complex> ket, std::size_t which);

// Eigenvalues of a Hermitian matrix in ascending order (cyclic complex Jacobi).
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
// sigma_0 .. sigma_3
CMatrix sigma(std::size_t index);
}  // namespace pauli

// Maps the descending labels |1> = |111> ... |8> = |000> used for
// three-qubit output states onto internal indices.
struct BasisConvention {
  static constexpr std::size_t kDim = 8;
  static constexpr std::size_t internal_index(std::size_t label) noexcept { return kDim - label; }
  static constexpr std::size_t label(std::size_t internal) noexcept { return kDim - internal; }
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

struct DensityViolation {
  enum class Kind { dimension, non_finite, hermiticity, trace, positivity };
  Kind kind;
  // Size of the violation: max |rho - rho^dagger|, |tr rho - 1| or -lambda_min.
  double magnitude;

  [[nodiscard]] std::string describe() const;
};

class DensityMatrix;

std::variant<DensityMatrix, DensityViolation> validate_density(const CMatrix& m);

// Three-qubit density operator that passed validate_density.
class DensityMatrix {
 public:
  [[nodiscard]] const CMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return matrix_(row, col); }

  // Throws InputError naming the violated invariant.
  static DensityMatrix from(const CMatrix& m);

 private:
  explicit DensityMatrix(const CMatrix& m) : matrix_(m) {}
  friend std::variant<DensityMatrix, DensityViolation> validate_density(const CMatrix& m);

  CMatrix matrix_;
};

}  // namespace qsl
