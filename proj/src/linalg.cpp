#include "netrob/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netrob/error.hpp"

namespace netrob {

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

double default_rank_tolerance(const DenseMatrix& a) {
    return 1e-8 * static_cast<double>(std::max(a.rows(), a.cols())) * a.max_abs();
}

std::size_t numeric_rank(DenseMatrix a, std::optional<double> tolerance) {
    const double tol = tolerance.value_or(default_rank_tolerance(a));
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        double best = std::abs(a(rank, c));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (std::abs(a(r, c)) > best) {
                best = std::abs(a(r, c));
                pivot = r;
            }
        }
        if (best <= tol) continue;
        if (pivot != rank) {
            for (std::size_t k = c; k < cols; ++k) std::swap(a(pivot, k), a(rank, k));
        }
        const double p = a(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const double f = a(r, c) / p;
            if (f == 0.0) continue;
            a(r, c) = 0.0;
            for (std::size_t k = c + 1; k < cols; ++k) a(r, k) -= f * a(rank, k);
        }
        ++rank;
    }
    return rank;
}

SymmetricEigen jacobi_eigen(DenseMatrix a, double tol, int max_sweeps) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ContractViolation("jacobi_eigen needs a square matrix");
    DenseMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
    const double target = tol * std::sqrt(total);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(2.0 * off) <= target) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace netrob
