#include "singcurve/linalg.hpp"

namespace singcurve {

int exact_rank(RationalMatrix m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        for (int i = row + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            mpq_class f = m.at(i, col) / m.at(row, col);
            m.at(i, col) = 0;
            for (int j = col + 1; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<mpq_class>> solve_linear(RationalMatrix a, std::vector<mpq_class> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n) return std::nullopt;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            mpq_class f = a.at(i, col) / a.at(col, col);
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<mpq_class> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = b[i] / a.at(i, i);
        x[i].canonicalize();
    }
    return x;
}

std::vector<mpz_class> leading_principal_minors(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);

    // Bareiss fraction-free elimination; after step k the pivot m[k][k]
    // equals the (k+1)-st leading principal minor.
    std::vector<mpz_class> minors;
    bool zero_pivot = false;
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        minors.push_back(m[k][k]);
        if (m[k][k] == 0 && k < n - 1) {
            zero_pivot = true;
            break;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;
            }
        prev = m[k][k];
    }
    if (zero_pivot || static_cast<int>(minors.size()) < n) {
        // Fallback (rare, zero minor): rational LU per minor.
        minors.clear();
        for (int k = 1; k <= n; ++k) {
            RationalMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = static_cast<long>(a[i][j]);
            // determinant via elimination
            mpq_class det = 1;
            bool singular = false;
            for (int col = 0; col < k && !singular; ++col) {
                int pivot = -1;
                for (int i = col; i < k; ++i)
                    if (sub.at(i, col) != 0) {
                        pivot = i;
                        break;
                    }
                if (pivot < 0) {
                    singular = true;
                    break;
                }
                if (pivot != col) {
                    for (int j = 0; j < k; ++j) std::swap(sub.at(pivot, j), sub.at(col, j));
                    det = -det;
                }
                det *= sub.at(col, col);
                for (int i = col + 1; i < k; ++i) {
                    if (sub.at(i, col) == 0) continue;
                    mpq_class f = sub.at(i, col) / sub.at(col, col);
                    for (int j = col; j < k; ++j) sub.at(i, j) -= f * sub.at(col, j);
                }
            }
            if (singular) det = 0;
            det.canonicalize();
            minors.push_back(det.get_num());
        }
    }
    return minors;
}

bool is_negative_definite(const std::vector<std::vector<long long>>& a) {
    auto minors = leading_principal_minors(a);
    for (size_t k = 0; k < minors.size(); ++k) {
        bool odd = (k % 2 == 0);  // minor of size k+1
        if (odd && minors[k] >= 0) return false;
        if (!odd && minors[k] <= 0) return false;
    }
    return true;
}

}  // namespace singcurve
