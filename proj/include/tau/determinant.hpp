#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tau/errors.hpp"
#include "tau/polynomial.hpp"

namespace tau {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Division-free determinant by Laplace expansion along rows, memoized over the set of
/// columns still available. Costs O(2^n n) ring multiplications at worst; zero entries are
/// skipped, so banded and Hessenberg matrices are far cheaper. The memo is local to the call.
///
/// `is_zero` decides which entries to skip; `combine` receives the signed products of one
/// expansion step and returns their sum, which lets fraction types share a single common
/// denominator per minor.
template <class T, class IsZero, class Combine>
T laplace_determinant(const Matrix<T>& m, const T& one, IsZero&& is_zero, Combine&& combine) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw NonSquare();
    if (n == 0) return one;
    if (n > 24) throw std::length_error("laplace_determinant: matrix larger than 24x24");

    std::unordered_map<std::uint32_t, T> memo;
    // minor(S) = det of rows [n-|S|, n) restricted to the column set S (ascending order).
    std::function<T(std::uint32_t)> minor = [&](std::uint32_t cols) -> T {
        const std::size_t k = static_cast<std::size_t>(std::popcount(cols));
        if (k == 0) return one;
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        const std::size_t row = n - k;
        std::vector<std::pair<bool, T>> parts;  // (negate, entry * subminor)
        std::size_t position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols & (1U << c))) continue;
            const T& entry = m[row][c];
            if (!is_zero(entry)) {
                T sub = minor(cols & ~(1U << c));
                if (!is_zero(sub)) parts.emplace_back(position % 2 == 1, entry * sub);
            }
            ++position;
        }
        T result = combine(parts);
        memo.emplace(cols, result);
        return result;
    };
    return minor((1U << n) - 1U);
}

/// Exact determinant of a square polynomial matrix; the empty matrix has determinant 1.
inline Polynomial det_polynomial(const Matrix<Polynomial>& m) {
    return laplace_determinant(
        m, Polynomial(1), [](const Polynomial& p) { return p.is_zero(); },
        [](std::vector<std::pair<bool, Polynomial>>& parts) {
            Polynomial sum;
            for (auto& [negate, value] : parts) sum = negate ? sum - value : sum + value;
            return sum;
        });
}

}  // namespace tau
