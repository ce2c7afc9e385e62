#include "solhnn/matrix.hpp"

#include "solhnn/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace solhnn {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector> &rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("from_rows: empty input");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Int IntMatrix::trace() const {
    if (rows_ != cols_)
        throw std::invalid_argument("trace: matrix not square");
    Int s = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        s += at(i, i);
    return s;
}

Int IntMatrix::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("det: matrix not square");
    // Bareiss fraction-free elimination
    IntMatrix a = *this;
    std::size_t n = rows_;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix IntMatrix::pow(long long n) const {
    if (rows_ != cols_)
        throw std::invalid_argument("pow: matrix not square");
    if (n < 0)
        throw std::invalid_argument("pow: negative exponent");
    IntMatrix r = identity(rows_);
    IntMatrix b = *this;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

IntMatrix IntMatrix::mod(const Int &q) const {
    IntMatrix r = *this;
    for (auto &x : r.a_)
        x = mod_floor(x, q);
    return r;
}

std::vector<Int> IntMatrix::charpoly() const {
    if (rows_ != cols_)
        throw std::invalid_argument("charpoly: matrix not square");
    // Faddeev-LeVerrier; all divisions are exact over Z
    std::size_t n = rows_;
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix Nk = identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix ANk = (*this) * Nk;
        Int t = ANk.trace();
        if (t % Int(k) != 0)
            throw std::logic_error("charpoly: inexact division");
        c[n - k] = -t / Int(k);
        if (k < n) {
            Nk = ANk;
            for (std::size_t i = 0; i < n; ++i)
                Nk.at(i, i) += c[n - k];
        }
    }
    return c;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int &aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] += b.a_[i];
    return r;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] -= b.a_[i];
    return r;
}

IntVector IntMatrix::apply(const IntVector &v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("apply: dimension mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

std::vector<IntVector> integer_kernel(const IntMatrix &M) {
    // row HNF of M^T with transform: U * M^T = H; rows of U against zero
    // rows of H span the kernel of M
    IntMatrix t = M.transpose();
    std::vector<IntVector> rows(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        rows[i].resize(t.cols());
        for (std::size_t j = 0; j < t.cols(); ++j)
            rows[i][j] = t.at(i, j);
    }
    HnfTransform ht = hnf_with_transform(t.cols(), rows);
    std::vector<IntVector> kernel;
    for (std::size_t i = ht.rank; i < ht.u.size(); ++i)
        kernel.push_back(ht.u[i]);
    return kernel;
}

std::optional<IntVector> solve_integral(const IntMatrix &M, const IntVector &v) {
    if (M.rows() != M.cols() || v.size() != M.rows())
        throw std::invalid_argument("solve_integral: dimension mismatch");
    std::size_t n = M.rows();
    // rational Gaussian elimination on the augmented system
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(M.at(i, j));
        a[i][n] = Rat(v[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("solve_integral: singular matrix");
        std::swap(a[c], a[p]);
        Rat piv = a[c][c];
        for (std::size_t j = c; j <= n; ++j)
            a[c][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j <= n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    IntVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (boost::multiprecision::denominator(a[i][n]) != 1)
            return std::nullopt;
        x[i] = boost::multiprecision::numerator(a[i][n]);
    }
    return x;
}

IntVector primitive(const IntVector &v) {
    Int g = 0;
    for (auto &x : v)
        g = boost::multiprecision::gcd(g, x);
    if (g == 0)
        throw std::invalid_argument("primitive: zero vector");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] / g;
    for (auto &x : r) {
        if (x != 0) {
            if (x < 0)
                for (auto &y : r)
                    y = -y;
            break;
        }
    }
    return r;
}

EigenInfo int_eigen(const IntMatrix &M) {
    if (M.rows() != 2 || M.cols() != 2)
        throw std::invalid_argument("int_eigen: 2x2 matrix required");
    EigenInfo info{M.trace(), M.det(), 0, {}};
    info.disc = info.trace * info.trace - 4 * info.det;
    auto s = exact_sqrt(info.disc);
    if (!s)
        return info; // char poly irreducible over Q: no integer eigenvalues
    std::vector<Int> roots;
    for (int sign : {1, -1}) {
        Int num = info.trace + Int(sign) * *s;
        if (num % 2 == 0) {
            Int m = num / 2;
            if (roots.empty() || roots[0] != m)
                roots.push_back(m);
        }
    }
    for (const Int &m : roots) {
        IntMatrix A = M - IntMatrix::identity(2);
        for (std::size_t i = 0; i < 2; ++i)
            A.at(i, i) = M.at(i, i) - m;
        bool zero = true;
        for (std::size_t i = 0; i < 2 && zero; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (A.at(i, j) != 0)
                    zero = false;
        if (zero) {
            info.eigenpairs.emplace_back(m, IntVector{1, 0}); // scalar matrix: canonical representative
            continue;
        }
        auto kern = integer_kernel(A);
        if (!kern.empty())
            info.eigenpairs.emplace_back(m, primitive(kern.front()));
    }
    return info;
}

} // namespace solhnn
