#include "qcube/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qcube/errors.hpp"

namespace qcube {

namespace {

double off_diagonal_mass(const Matrix& m) {
    double sum = 0.0;
    const std::size_t dim = m.dim();
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (r != c) sum += std::norm(m(r, c));
    return std::sqrt(sum);
}

}  // namespace

EigenDecomposition hermitian_eigen(const Matrix& h) {
    const std::size_t dim = h.dim();
    // Work on the Hermitian average; kills the (<= 1e-12) storage noise that
    // the Hermitian flag tolerates.
    Matrix a = (h + h.adjoint()) * cplx(0.5, 0.0);
    Matrix v = Matrix::identity(dim);

    const double scale = a.frobenius_norm();
    const double target = 1e-12 * scale;
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    double off = off_diagonal_mass(a);
    while (off > target && sweep < kMaxSweeps) {
        for (std::size_t p = 0; p + 1 < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const cplx beta = a(p, q);
                const double rho = std::abs(beta);
                if (rho < 1e-300) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const cplx phase = beta / rho;  // e^{i phi}
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double chi = (gamma - alpha) / (2.0 * rho);
                const double t = (chi >= 0.0 ? 1.0 : -1.0) / (std::abs(chi) + std::sqrt(1.0 + chi * chi));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx s_phase = s * phase;
                const cplx s_conj = s * std::conj(phase);

                // rows: A <- G^* A
                for (std::size_t i = 0; i < dim; ++i) {
                    const cplx ap = a(p, i);
                    const cplx aq = a(q, i);
                    a(p, i) = c * ap - s_phase * aq;
                    a(q, i) = s_conj * ap + c * aq;
                }
                // columns: A <- A G, and accumulate V <- V G
                for (std::size_t i = 0; i < dim; ++i) {
                    const cplx ap = a(i, p);
                    const cplx aq = a(i, q);
                    a(i, p) = c * ap - s_conj * aq;
                    a(i, q) = s_phase * ap + c * aq;
                    const cplx vp = v(i, p);
                    const cplx vq = v(i, q);
                    v(i, p) = c * vp - s_conj * vq;
                    v(i, q) = s_phase * vp + c * vq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
            }
        }
        ++sweep;
        off = off_diagonal_mass(a);
    }

    std::vector<double> eigenvalues(dim);
    for (std::size_t i = 0; i < dim; ++i) eigenvalues[i] = a(i, i).real();

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return eigenvalues[x] > eigenvalues[y]; });

    EigenDecomposition out;
    out.eigenvalues.resize(dim);
    out.eigenvectors = Matrix(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        out.eigenvalues[k] = eigenvalues[order[k]];
        for (std::size_t i = 0; i < dim; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    out.off_diagonal_residual = off;
    out.sweeps = sweep;
    return out;
}

EigenDecomposition hermitian_eigen(const QOperator& a) {
    if (!a.is_hermitian()) throw contract_error("hermitian_eigen requires a Hermitian operator");
    return hermitian_eigen(a.matrix());
}

Matrix spectral_function(const EigenDecomposition& eig, const std::function<double(double)>& fn) {
    const std::size_t dim = eig.eigenvectors.dim();
    std::vector<double> mapped(dim);
    for (std::size_t k = 0; k < dim; ++k) mapped[k] = fn(eig.eigenvalues[k]);
    Matrix out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (mapped[k] == 0.0) continue;
        for (std::size_t r = 0; r < dim; ++r) {
            const cplx vr = eig.eigenvectors(r, k) * mapped[k];
            if (vr == cplx{}) continue;
            for (std::size_t c = 0; c < dim; ++c)
                out(r, c) += vr * std::conj(eig.eigenvectors(c, k));
        }
    }
    return out;
}

std::vector<double> singular_values(const QOperator& a) {
    std::vector<double> values;
    if (a.is_hermitian()) {
        EigenDecomposition eig = hermitian_eigen(a.matrix());
        values = std::move(eig.eigenvalues);
        for (double& v : values) v = std::abs(v);
    } else {
        const Matrix& m = a.matrix();
        EigenDecomposition eig = hermitian_eigen(m.adjoint() * m);
        values = std::move(eig.eigenvalues);
        for (double& v : values) v = std::sqrt(std::max(v, 0.0));
    }
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

double schatten_norm(const QOperator& a, double p) {
    if (std::isnan(p) || p < 1.0) throw domain_error("Schatten norm requires p >= 1");
    const std::vector<double> sv = singular_values(a);
    if (std::isinf(p)) return sv.empty() ? 0.0 : sv.front();
    double sum = 0.0;
    for (double v : sv) sum += std::pow(v, p);
    sum /= static_cast<double>(sv.size());  // normalized trace
    return std::pow(sum, 1.0 / p);
}

double operator_norm(const QOperator& a) {
    return schatten_norm(a, std::numeric_limits<double>::infinity());
}

}  // namespace qcube
