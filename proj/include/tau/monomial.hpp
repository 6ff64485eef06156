#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

#include <boost/container/small_vector.hpp>

namespace tau {

/// The three families of indeterminates: parameters alpha_i, dependent variables f_i and
/// tau-functions tau_i. The enumerator order is the variable order.
enum class VarKind : std::uint8_t { Alpha = 0, F = 1, Tau = 2 };

struct VarId {
    VarKind kind = VarKind::Alpha;
    std::int32_t index = 0;

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

    [[nodiscard]] std::string name() const {
        static constexpr const char* prefixes[] = {"a_", "f_", "t_"};
        return prefixes[static_cast<int>(kind)] + std::to_string(index);
    }
};

constexpr VarId alpha_var(int i) { return {VarKind::Alpha, i}; }
constexpr VarId f_var(int i) { return {VarKind::F, i}; }
constexpr VarId tau_var(int i) { return {VarKind::Tau, i}; }

struct Factor {
    VarId var;
    std::uint32_t exp = 0;

    friend constexpr bool operator==(const Factor&, const Factor&) = default;
};

/// A power product of variables. Factors are kept sorted by variable with positive exponents,
/// so the empty product is the unit monomial.
class Monomial {
public:
    using Storage = boost::container::small_vector<Factor, 6>;

    Monomial() = default;

    explicit Monomial(VarId v, std::uint32_t exp = 1) {
        if (exp > 0) push(v, exp);
    }

    Monomial(std::initializer_list<Factor> factors) {
        Storage raw(factors.begin(), factors.end());
        std::sort(raw.begin(), raw.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
        for (const Factor& f : raw) {
            if (f.exp == 0) continue;
            if (!factors_.empty() && factors_.back().var == f.var) {
                factors_.back().exp += f.exp;
                degree_ += f.exp;
                if (f.var.kind == VarKind::F) f_degree_ += f.exp;
            } else {
                push(f.var, f.exp);
            }
        }
    }

    [[nodiscard]] const Storage& factors() const noexcept { return factors_; }
    [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::uint32_t f_degree() const noexcept { return f_degree_; }

    [[nodiscard]] std::uint32_t exponent(VarId v) const noexcept {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, VarId x) { return f.var < x; });
        return (it != factors_.end() && it->var == v) ? it->exp : 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->var < j->var) {
                out.factors_.push_back(*i++);
            } else if (j->var < i->var) {
                out.factors_.push_back(*j++);
            } else {
                out.factors_.push_back({i->var, i->exp + j->exp});
                ++i;
                ++j;
            }
        }
        out.factors_.insert(out.factors_.end(), i, a.factors_.end());
        out.factors_.insert(out.factors_.end(), j, b.factors_.end());
        out.degree_ = a.degree_ + b.degree_;
        out.f_degree_ = a.f_degree_ + b.f_degree_;
        return out;
    }

    /// True when this monomial divides `other`.
    [[nodiscard]] bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_ || f_degree_ > other.f_degree_) return false;
        auto j = other.factors_.begin();
        for (const Factor& f : factors_) {
            while (j != other.factors_.end() && j->var < f.var) ++j;
            if (j == other.factors_.end() || j->var != f.var || j->exp < f.exp) return false;
        }
        return true;
    }

    /// other / *this; requires divides(other).
    [[nodiscard]] Monomial quotient_of(const Monomial& other) const {
        Monomial out;
        auto i = factors_.begin();
        for (const Factor& f : other.factors_) {
            std::uint32_t e = f.exp;
            if (i != factors_.end() && i->var == f.var) e -= (i++)->exp;
            if (e > 0) out.push(f.var, e);
        }
        return out;
    }

    /// Componentwise minimum of exponents.
    [[nodiscard]] static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto j = b.factors_.begin();
        for (const Factor& f : a.factors_) {
            while (j != b.factors_.end() && j->var < f.var) ++j;
            if (j != b.factors_.end() && j->var == f.var) out.push(f.var, std::min(f.exp, j->exp));
        }
        return out;
    }

    /// Renames every variable; the map need not be injective.
    template <class Fn>
    [[nodiscard]] Monomial renamed(Fn&& fn) const {
        Monomial out;
        for (const Factor& f : factors_) out.factors_.push_back({fn(f.var), f.exp});
        std::sort(out.factors_.begin(), out.factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.var < b.var; });
        Storage merged;
        for (const Factor& f : out.factors_) {
            if (!merged.empty() && merged.back().var == f.var) merged.back().exp += f.exp;
            else merged.push_back(f);
        }
        out.factors_ = std::move(merged);
        out.degree_ = 0;
        out.f_degree_ = 0;
        for (const Factor& f : out.factors_) {
            out.degree_ += f.exp;
            if (f.var.kind == VarKind::F) out.f_degree_ += f.exp;
        }
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.factors_ == b.factors_;
    }

    /// Canonical term order: f-degree, then total degree, then lexicographic with smaller
    /// variables more significant. `greater` means earlier in the printed (descending) order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.f_degree_ <=> b.f_degree_; c != 0) return c;
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
            if (i->var != j->var) {
                return i->var < j->var ? std::strong_ordering::greater : std::strong_ordering::less;
            }
            if (i->exp != j->exp) return i->exp <=> j->exp;
        }
        if (i != a.factors_.end()) return std::strong_ordering::greater;
        if (j != b.factors_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::size_t hash() const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (const Factor& f : factors_) {
            std::size_t v = (static_cast<std::size_t>(f.var.kind) << 40) ^
                            (static_cast<std::size_t>(static_cast<std::uint32_t>(f.var.index)) << 8) ^ f.exp;
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    [[nodiscard]] std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const Factor& f : factors_) {
            if (!out.empty()) out += '*';
            out += f.var.name();
            if (f.exp > 1) out += '^' + std::to_string(f.exp);
        }
        return out;
    }

private:
    void push(VarId v, std::uint32_t exp) {
        factors_.push_back({v, exp});
        degree_ += exp;
        if (v.kind == VarKind::F) f_degree_ += exp;
    }

    Storage factors_;
    std::uint32_t degree_ = 0;
    std::uint32_t f_degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace tau
