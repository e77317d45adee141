#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "harmonia/label.hpp"

namespace harmonia {

// Small dense matrix over exact integers. Used wherever a claim must hold
// exactly (transfer dynamics, Jordan identities); numeric work goes through
// Eigen instead.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Label& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Label& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Label& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<Label> apply(const std::vector<Label>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
        std::vector<Label> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Label acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            r[i] = std::move(acc);
        }
        return r;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Label> data_;
};

}  // namespace harmonia
