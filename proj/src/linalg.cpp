#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qcorr {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch " << a.dim() << " vs " << b.dim();
        throw NumericError(msg.str());
    }
}

void require_register(const ComplexMatrix& rho, int n_qubits, const char* what) {
    if (n_qubits < 1 || n_qubits > 4 || rho.dim() != (std::size_t{1} << n_qubits)) {
        std::ostringstream msg;
        msg << what << ": matrix of dim " << rho.dim() << " is not a " << n_qubits
            << "-qubit operator";
        throw NumericError(msg.str());
    }
}

// Full basis index from the bits of the kept and traced qubits.
std::size_t compose_index(int n_qubits, std::span<const int> qubits, std::size_t bits) {
    std::size_t index = 0;
    const auto count = qubits.size();
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t bit = (bits >> (count - 1 - k)) & 1U;
        index |= bit << (n_qubits - 1 - qubits[k]);
    }
    return index;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw NumericError("ComplexMatrix: row length " + std::to_string(row.size()) +
                               " does not match row count " + std::to_string(dim_));
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    ComplexMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw NumericError("ComplexMatrix: row " + std::to_string(i) + " has length " +
                               std::to_string(rows[i].size()) + ", expected " +
                               std::to_string(rows.size()));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.dim_);
    }
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(*this);
    for (auto& z : out.data_) z = std::conj(z);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(*this, other, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs, "operator*");
    const auto n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix outer(std::span<const Complex> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const auto na = a.dim();
    const auto nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep) {
    require_register(rho, n_qubits, "partial_trace");
    if (keep.empty()) throw NumericError("partial_trace: keep set is empty");
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= n_qubits || (k > 0 && keep[k] <= keep[k - 1])) {
            throw NumericError("partial_trace: keep indices must be strictly increasing in [0, " +
                               std::to_string(n_qubits) + ")");
        }
    }
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    const std::size_t kept_dim = std::size_t{1} << keep.size();
    const std::size_t traced_dim = std::size_t{1} << traced.size();
    ComplexMatrix out(kept_dim);
    for (std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t offset = compose_index(n_qubits, traced, t);
        for (std::size_t i = 0; i < kept_dim; ++i) {
            const std::size_t row = offset | compose_index(n_qubits, keep, i);
            for (std::size_t j = 0; j < kept_dim; ++j)
                out(i, j) += rho(row, offset | compose_index(n_qubits, keep, j));
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int n_qubits, int subsystem) {
    require_register(rho, n_qubits, "partial_transpose");
    if (subsystem < 0 || subsystem >= n_qubits) {
        throw NumericError("partial_transpose: subsystem " + std::to_string(subsystem) +
                           " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    const std::size_t mask = std::size_t{1} << (n_qubits - 1 - subsystem);
    const auto n = rho.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // swap the subsystem bit between row and column
            const std::size_t row = (i & ~mask) | (j & mask);
            const std::size_t col = (j & ~mask) | (i & mask);
            out(row, col) = rho(i, j);
        }
    return out;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
    const auto n = h.dim();
    if (n == 0) throw NumericError("hermitian_eigensystem: empty matrix");
    const double defect = h.hermitian_defect();
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "hermitian_eigensystem: max |h - h^dagger| = " << defect << " exceeds "
            << kHermitianTolerance;
        throw NumericError(msg.str());
    }

    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (const auto& z : a.data()) scale = std::max(scale, std::abs(z));
    const double threshold = 1e-13 * std::max(1.0, scale);

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < threshold) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g < 1e-300) continue;
                const Complex phase = a(p, q) / g;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex conj_phase = std::conj(phase);

                // a <- a J, with J = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * conj_phase * akq;
                    a(k, q) = s * akp + c * conj_phase * akq;
                }
                // a <- J^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * conj_phase * vkq;
                    v(k, q) = s * vkp + c * conj_phase * vkq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    EigenSystem result{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        result.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) result.vectors(r, k) = v(r, order[k]);
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    return hermitian_eigensystem(h).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
    const auto es = hermitian_eigensystem(rho);
    const auto n = rho.dim();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = es.values[k];
        if (lambda < -kNegativeClip) {
            std::ostringstream msg;
            msg << "psd_sqrt: eigenvalue " << lambda << " below -" << kNegativeClip;
            throw NumericError(msg.str());
        }
        roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += es.vectors(i, k) * roots[k] * std::conj(es.vectors(j, k));
            out(i, j) = sum;
        }
    return out;
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda < -kNegativeClip) {
            std::ostringstream msg;
            msg << "entropy: eigenvalue " << lambda << " below -" << kNegativeClip;
            throw NumericError(msg.str());
        }
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "von_neumann_entropy: trace " << tr.real() << " deviates from 1";
        throw NumericError(msg.str());
    }
    const auto values = hermitian_eigenvalues(rho);
    return std::min(entropy_of_spectrum(values), std::log2(static_cast<double>(rho.dim())));
}

double binary_entropy(double x) {
    if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
        throw NumericError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double trace_norm_hermitian(const ComplexMatrix& h) {
    double norm = 0.0;
    for (double lambda : hermitian_eigenvalues(h)) norm += std::abs(lambda);
    return norm;
}

}  // namespace qcorr
