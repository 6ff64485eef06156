#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tau/combinatorics.hpp"
#include "tau/rational_function.hpp"

namespace tau {

/// A fraction whose denominator is kept factored as a product of positive roots
/// v_a - v_b = alpha_a + ... + alpha_{b-1} (a < b). Every denominator met by the
/// determinant formulas has this shape, so least common denominators and cancellation are
/// multiset operations plus trial division by linear forms; no polynomial gcd is needed.
class RootFraction {
public:
    using Roots = std::map<VDifference, int>;

    RootFraction() = default;
    RootFraction(Polynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)

    RootFraction(Polynomial num, const std::vector<VDifference>& den) : num_(std::move(num)) {
        for (VDifference r : den) divide_by(r);
    }

    [[nodiscard]] const Polynomial& num() const noexcept { return num_; }
    [[nodiscard]] const Roots& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

    [[nodiscard]] RootFraction shifted(int j) const {
        RootFraction out;
        out.num_ = num_.renamed([j](VarId v) { return VarId{v.kind, v.index + j}; });
        for (const auto& [r, k] : den_) out.den_[r.shifted(j)] = k;
        return out;
    }

    friend RootFraction operator*(const RootFraction& x, const RootFraction& y) {
        RootFraction out;
        out.num_ = x.num_ * y.num_;
        out.den_ = x.den_;
        for (const auto& [r, k] : y.den_) out.den_[r] += k;
        return out;
    }

    friend RootFraction operator-(RootFraction x) {
        x.num_ = -x.num_;
        return x;
    }

    /// Signed sum over a common (least) root denominator, followed by cancellation.
    static RootFraction sum(const std::vector<std::pair<bool, RootFraction>>& parts) {
        RootFraction out;
        for (const auto& [neg, x] : parts)
            for (const auto& [r, k] : x.den_) out.den_[r] = std::max(out.den_[r], k);
        for (const auto& [neg, x] : parts) {
            Polynomial scaled = x.num_;
            for (const auto& [r, k] : out.den_) {
                auto it = x.den_.find(r);
                const int missing = k - (it == x.den_.end() ? 0 : it->second);
                if (missing > 0) scaled *= root_polynomial(r).pow(static_cast<unsigned>(missing));
            }
            out.num_ = neg ? out.num_ - scaled : out.num_ + scaled;
        }
        out.cancel();
        return out;
    }

    /// Removes every root factor of the denominator that divides the numerator.
    void cancel() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            const Polynomial root = root_polynomial(it->first);
            while (it->second > 0) {
                auto q = try_exact_div(num_, root);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    /// num * prod(factors) / den as a polynomial. Factors are cancelled against the
    /// denominator as a multiset first; any leftover denominator must divide exactly.
    [[nodiscard]] std::optional<Polynomial> times_roots(const std::vector<VDifference>& factors) const {
        Roots remaining = den_;
        Polynomial out = num_;
        std::vector<VDifference> extra;
        for (VDifference r : factors) {
            auto [root, sign] = oriented(r);
            if (sign < 0) out = -out;
            auto it = remaining.find(root);
            if (it != remaining.end() && it->second > 0) {
                if (--it->second == 0) remaining.erase(it);
            } else {
                extra.push_back(root);
            }
        }
        for (const auto& [r, k] : remaining) {
            for (int n = 0; n < k; ++n) {
                auto q = try_exact_div(out, root_polynomial(r));
                if (!q) return std::nullopt;
                out = std::move(*q);
            }
        }
        for (VDifference r : extra) out *= root_polynomial(r);
        return out;
    }

    [[nodiscard]] Polynomial expanded_den() const {
        Polynomial d(1);
        for (const auto& [r, k] : den_) d *= root_polynomial(r).pow(static_cast<unsigned>(k));
        return d;
    }

    [[nodiscard]] RationalFunction to_rational() const { return RationalFunction(num_, expanded_den()); }

    static Polynomial root_polynomial(VDifference r) { return r.to_polynomial(); }

private:
    /// (v_a - v_b) as (root with a < b, sign).
    static std::pair<VDifference, int> oriented(VDifference r) {
        if (r.a == r.b) throw DivisionByZero();
        return r.a < r.b ? std::pair{r, 1} : std::pair{VDifference{r.b, r.a}, -1};
    }

    void divide_by(VDifference r) {
        auto [root, sign] = oriented(r);
        if (sign < 0) num_ = -num_;
        ++den_[root];
    }

    Polynomial num_;
    Roots den_;
};

}  // namespace tau
