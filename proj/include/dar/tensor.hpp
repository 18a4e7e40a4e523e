#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dar {

// Dense row-major matrix. The core deliberately uses plain loops instead of
// an external BLAS so that results are reproducible bit-for-bit from source.
template <typename T>
struct Tensor2 {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Tensor2() = default;
    Tensor2(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, T(0)) {}

    T& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    std::span<T> row(int r) { return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
    std::span<const T> row(int r) const {
        return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
    }

    size_t size() const { return data.size(); }

    void fill(T value) { std::fill(data.begin(), data.end(), value); }
};

// y = A x
template <typename T>
void matvec(const Tensor2<T>& a, std::span<const T> x, std::span<T> y) {
    if (static_cast<int>(x.size()) != a.cols || static_cast<int>(y.size()) != a.rows)
        throw std::invalid_argument("matvec: shape mismatch");
    for (int r = 0; r < a.rows; ++r) {
        const T* arow = a.data.data() + static_cast<size_t>(r) * a.cols;
        T acc = T(0);
        for (int c = 0; c < a.cols; ++c) acc += arow[c] * x[c];
        y[r] = acc;
    }
}

// y += A x
template <typename T>
void matvec_add(const Tensor2<T>& a, std::span<const T> x, std::span<T> y) {
    if (static_cast<int>(x.size()) != a.cols || static_cast<int>(y.size()) != a.rows)
        throw std::invalid_argument("matvec_add: shape mismatch");
    for (int r = 0; r < a.rows; ++r) {
        const T* arow = a.data.data() + static_cast<size_t>(r) * a.cols;
        T acc = T(0);
        for (int c = 0; c < a.cols; ++c) acc += arow[c] * x[c];
        y[r] += acc;
    }
}

// y += A^T x
template <typename T>
void matvec_transpose_add(const Tensor2<T>& a, std::span<const T> x, std::span<T> y) {
    if (static_cast<int>(x.size()) != a.rows || static_cast<int>(y.size()) != a.cols)
        throw std::invalid_argument("matvec_transpose_add: shape mismatch");
    for (int r = 0; r < a.rows; ++r) {
        const T* arow = a.data.data() + static_cast<size_t>(r) * a.cols;
        const T xr = x[r];
        if (xr == T(0)) continue;
        for (int c = 0; c < a.cols; ++c) y[c] += arow[c] * xr;
    }
}

// A += u v^T
template <typename T>
void add_outer(Tensor2<T>& a, std::span<const T> u, std::span<const T> v) {
    if (static_cast<int>(u.size()) != a.rows || static_cast<int>(v.size()) != a.cols)
        throw std::invalid_argument("add_outer: shape mismatch");
    for (int r = 0; r < a.rows; ++r) {
        T* arow = a.data.data() + static_cast<size_t>(r) * a.cols;
        const T ur = u[r];
        if (ur == T(0)) continue;
        for (int c = 0; c < a.cols; ++c) arow[c] += ur * v[c];
    }
}

// Straightforward triple-loop product, C = A B.
template <typename T>
Tensor2<T> matmul(const Tensor2<T>& a, const Tensor2<T>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    Tensor2<T> c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const T aik = a.at(i, k);
            if (aik == T(0)) continue;
            const T* brow = b.data.data() + static_cast<size_t>(k) * b.cols;
            T* crow = c.data.data() + static_cast<size_t>(i) * c.cols;
            for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

template <typename T>
bool all_finite(std::span<const T> v) {
    for (T x : v)
        if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
}

template <typename T>
bool all_finite(const Tensor2<T>& t) {
    return all_finite(std::span<const T>(t.data));
}

template <typename T>
void require_finite(const Tensor2<T>& t, const std::string& name) {
    if (!all_finite(t)) throw std::runtime_error("non-finite values in tensor " + name);
}

}  // namespace dar
