#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace dar {

// Numerically stable softmax: the max is subtracted before exponentiation so
// large logits cannot overflow. Preserves the argmax.
template <typename T>
void softmax_inplace(std::span<T> z) {
    if (z.empty()) throw std::invalid_argument("softmax: empty input");
    T zmax = z[0];
    for (T v : z) zmax = std::max(zmax, v);
    T sum = T(0);
    for (T& v : z) {
        v = std::exp(v - zmax);
        sum += v;
    }
    for (T& v : z) v /= sum;
}

template <typename T>
std::vector<T> softmax(std::span<const T> z) {
    std::vector<T> out(z.begin(), z.end());
    softmax_inplace(std::span<T>(out));
    return out;
}

// -log p[y], with p[y] floored at 1e-12 so degenerate outputs stay finite.
template <typename T>
T cross_entropy(std::span<const T> p, int y) {
    if (y < 0 || y >= static_cast<int>(p.size()))
        throw std::out_of_range("cross_entropy: class index out of range");
    T py = std::max(p[y], T(1e-12));
    return -std::log(py);
}

// Central-difference gradient of a scalar function of a flat parameter
// vector. Verification oracle only; the function must be deterministic.
template <typename T>
std::vector<T> finite_diff_grad(const std::function<T(std::span<const T>)>& f,
                                std::vector<T> theta, T eps = T(1e-5)) {
    std::vector<T> grad(theta.size(), T(0));
    for (size_t i = 0; i < theta.size(); ++i) {
        const T saved = theta[i];
        theta[i] = saved + eps;
        const T f_plus = f(theta);
        theta[i] = saved - eps;
        const T f_minus = f(theta);
        theta[i] = saved;
        grad[i] = (f_plus - f_minus) / (T(2) * eps);
    }
    return grad;
}

}  // namespace dar
