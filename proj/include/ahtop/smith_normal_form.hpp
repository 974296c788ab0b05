#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace ahtop {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace snf_detail {

inline std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    std::int64_t p = 0;
    std::int64_t r = 0;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r))
        throw std::overflow_error("int64 overflow in integer normal form");
    return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in integer normal form");
    return r;
}
inline std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("int64 overflow in integer normal form");
    return a < 0 ? -a : a;
}

inline BigInt checked_sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

template <typename Scalar>
Scalar gcd(Scalar a, Scalar b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Scalar r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace snf_detail

/**
 * Nonzero diagonal of the Smith normal form of m, positive and ordered so
 * that each entry divides the next. Pivots are chosen by smallest nonzero
 * absolute value, ties broken by (row, column). With a 64-bit Scalar every
 * operation is overflow checked and std::overflow_error is thrown instead
 * of wrapping.
 */
template <typename Scalar>
std::vector<Scalar> invariant_factors(IntMatrix<Scalar> m) {
    using namespace snf_detail;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Scalar> diagonal;
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            Eigen::Index pr = -1;
            Eigen::Index pc = -1;
            Scalar best = 0;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j) {
                    if (m(i, j) == 0) continue;
                    Scalar a = checked_abs(Scalar(m(i, j)));
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break;
            m.row(t).swap(m.row(pr));
            m.col(t).swap(m.col(pc));
            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Scalar q = Scalar(m(i, t) / m(t, t));
                for (Eigen::Index j = t; j < cols; ++j) m(i, j) = checked_sub_mul(Scalar(m(i, j)), q, Scalar(m(t, j)));
                if (m(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Scalar q = Scalar(m(t, j) / m(t, t));
                for (Eigen::Index i = t; i < rows; ++i) m(i, j) = checked_sub_mul(Scalar(m(i, j)), q, Scalar(m(i, t)));
                if (m(t, j) != 0) clean = false;
            }
            if (clean) {
                diagonal.push_back(checked_abs(Scalar(m(t, t))));
                break;
            }
        }
        if (diagonal.size() <= static_cast<std::size_t>(t)) break;
    }
    // Restore the divisibility chain: (a, b) -> (gcd, lcm) keeps the group unchanged.
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            if (diagonal[j] % diagonal[i] == 0) continue;
            Scalar g = gcd(diagonal[i], diagonal[j]);
            Scalar l = diagonal[i] / g;
            Scalar lcm = checked_sub_mul(Scalar(0), Scalar(-l), diagonal[j]);
            diagonal[i] = g;
            diagonal[j] = lcm;
        }
    return diagonal;
}

/// Rank of m over the integers (equivalently the rationals).
template <typename Scalar>
std::size_t integer_rank(const IntMatrix<Scalar>& m) {
    return invariant_factors<Scalar>(m).size();
}

}  // namespace ahtop
