#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace singcurve {

// Dense exact rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& at(int i, int j) { return data_[i * cols_ + j]; }
    const mpq_class& at(int i, int j) const { return data_[i * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<mpq_class> data_;
};

// Rank by exact Gaussian elimination (destroys a copy).
int exact_rank(RationalMatrix m);

// Solves A x = b exactly; nullopt when A is singular.
std::optional<std::vector<mpq_class>> solve_linear(RationalMatrix a, std::vector<mpq_class> b);

// Leading principal minors det(A[0..k][0..k]) of an integer matrix,
// computed by fraction-free (Bareiss) elimination.
std::vector<mpz_class> leading_principal_minors(const std::vector<std::vector<long long>>& a);

// Negative definiteness of a symmetric integer matrix: leading principal
// minors alternate in sign starting negative.
bool is_negative_definite(const std::vector<std::vector<long long>>& a);

}  // namespace singcurve
