#pragma once

#include "solhnn/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace solhnn {

using IntVector = std::vector<Int>;

class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("matrix dimensions must be positive");
    }
    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<IntVector> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int &at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int &at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    Int trace() const;
    Int det() const; // Bareiss fraction-free elimination; square only
    IntMatrix pow(long long n) const; // n >= 0, square
    IntMatrix mod(const Int &q) const;

    // coefficients c_0..c_n of det(xI - M), monic: c_n = 1
    std::vector<Int> charpoly() const;

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
    friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    IntVector apply(const IntVector &v) const; // M * v

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// basis of the integer solutions of M * x = 0
std::vector<IntVector> integer_kernel(const IntMatrix &M);

// unique rational solution of M * x = v for square nonsingular M,
// kept only when it is integral
std::optional<IntVector> solve_integral(const IntMatrix &M, const IntVector &v);

// integer eigenvalue data of a 2x2 matrix
struct EigenInfo {
    Int trace;
    Int det;
    Int disc; // trace^2 - 4 det
    std::vector<std::pair<Int, IntVector>> eigenpairs; // (m, primitive a) with M a = m a
};
EigenInfo int_eigen(const IntMatrix &M);

IntVector primitive(const IntVector &v); // divide by gcd, first nonzero entry > 0

} // namespace solhnn
