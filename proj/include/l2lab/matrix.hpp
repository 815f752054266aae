#ifndef L2LAB_MATRIX_HPP
#define L2LAB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace l2lab {

template <class T>
bool is_zero_value(const T& x) {
    return x.is_zero();
}
inline bool is_zero_value(int x) { return x == 0; }

// Dense rectangular matrix over any ring-like value type. Entries default to
// value-initialized T, which every ring type here treats as zero.
template <class T>
class matrix {
public:
    matrix() : rows_(0), cols_(0) {}
    matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw error("ragged matrix initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : data_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    friend bool operator==(const matrix& a, const matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k])) return false;
        return true;
    }
    friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

    friend matrix operator+(const matrix& a, const matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix shape mismatch");
        matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }

    friend matrix operator-(const matrix& a, const matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix shape mismatch");
        matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_) throw error("matrix shape mismatch in product");
        matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (is_zero_value(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (is_zero_value(b(k, j))) continue;
                    out(i, j) += x * b(k, j);
                }
            }
        }
        return out;
    }

    matrix transposed() const {
        matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    static matrix identity(std::size_t n, const T& one) {
        matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
        return out;
    }

    template <class F>
    auto map(F&& f) const -> matrix<decltype(f(std::declval<const T&>()))> {
        matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

template <class T>
matrix<T> hstack(const matrix<T>& a, const matrix<T>& b) {
    if (a.rows() != b.rows()) throw error("hstack row mismatch");
    matrix<T> out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

template <class T>
matrix<T> vstack(const matrix<T>& a, const matrix<T>& b) {
    if (a.cols() != b.cols()) throw error("vstack column mismatch");
    matrix<T> out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

// [[a, c],[0, b]]; the coupling block c may be empty for a plain block sum.
template <class T>
matrix<T> block_triangular(const matrix<T>& a, const matrix<T>& b, const matrix<T>& coupling) {
    if (coupling.rows() != a.rows() || coupling.cols() != b.cols())
        throw error("coupling block shape mismatch");
    matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = coupling(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

template <class T>
matrix<T> block_diagonal(const matrix<T>& a, const matrix<T>& b) {
    return block_triangular(a, b, matrix<T>(a.rows(), b.cols()));
}

} // namespace l2lab

#endif
