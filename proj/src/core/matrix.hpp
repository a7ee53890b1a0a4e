#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace mnc {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw invalid("matrix data size does not match shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const { return data_; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Matrix transpose() const {
        std::vector<T> t;
        t.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) t.push_back((*this)(r, c));
        return Matrix(cols_, rows_, std::move(t));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Builds a rational matrix from nested integer/rational literals.
inline RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Rational> d;
    d.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw invalid("ragged matrix literal");
        d.insert(d.end(), row.begin(), row.end());
    }
    return RationalMatrix(r, c, std::move(d));
}

}  // namespace mnc
