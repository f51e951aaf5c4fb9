#pragma once

// Dense complex linear algebra for small qubit registers (dim <= 16).
//
// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
// computational-basis index. Every routine in the library uses that order.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/// Thrown when an input violates a numerical precondition (shape, hermiticity,
/// positivity, normalization). The message carries the offending quantity.
class NumericError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Square dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    /// Largest elementwise |a(i,j) - b(i,j)|. Dimensions must agree.
    double max_abs_diff(const ComplexMatrix& other) const;
    /// Largest elementwise |h - h^dagger|.
    double hermitian_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// |ket><ket|
ComplexMatrix outer(std::span<const Complex> ket);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the qubits in `keep` (strictly increasing, non-empty).
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep);
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                                   std::initializer_list<int> keep) {
    return partial_trace(rho, n_qubits, std::span<const int>(keep.begin(), keep.size()));
}

/// Transpose on a single qubit's indices. Applying it twice is the identity.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int n_qubits, int subsystem);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kNegativeClip = 1e-8;

/// Cyclic complex Jacobi. Rejects inputs with |h - h^dagger| > 1e-9 and
/// symmetrizes the rest before rotating.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

/// Entropy in bits. Requires trace within 1e-9 of one.
double von_neumann_entropy(const ComplexMatrix& rho);
/// Entropy in bits of an already computed spectrum; applies the clip rule.
double entropy_of_spectrum(std::span<const double> eigenvalues);

double binary_entropy(double x);

double trace_norm_hermitian(const ComplexMatrix& h);

}  // namespace qcorr
