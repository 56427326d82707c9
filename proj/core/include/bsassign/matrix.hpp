#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace bsassign {

/// Dense rectangular matrix with value semantics.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& init)
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// C = A * B; `zero` supplies the additive identity of the entry ring.
template <class T, class U, class R>
Matrix<R> matmul(const Matrix<T>& a, const Matrix<U>& b, const R& zero) {
    assert(a.cols() == b.rows());
    Matrix<R> c(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
    return c;
}

template <class T, class F>
auto map_entries(const Matrix<T>& m, F f) -> Matrix<decltype(f(m.at(0, 0)))> {
    using R = decltype(f(m.at(0, 0)));
    Matrix<R> out(m.rows(), m.cols(), m.rows() && m.cols() ? f(m.at(0, 0)) : R{});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = f(m.at(i, j));
    return out;
}

}  // namespace bsassign
