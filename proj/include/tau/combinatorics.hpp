#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tau/errors.hpp"
#include "tau/polynomial.hpp"

namespace tau {

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// A partition lambda_1 >= lambda_2 >= ... >= lambda_l > 0, identified with its Young diagram.
/// Rows and columns are 1-based.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("partition parts must be positive and weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// lambda_i, zero past the last row.
    [[nodiscard]] int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    [[nodiscard]] int cells() const noexcept {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }

    [[nodiscard]] bool contains(int row, int col) const noexcept {
        return row >= 1 && col >= 1 && col <= part(row);
    }

    [[nodiscard]] Partition conjugate() const {
        std::vector<int> out;
        for (int j = 1; j <= part(1); ++j) {
            int len = 0;
            while (part(len + 1) >= j) ++len;
            out.push_back(len);
        }
        return Partition(std::move(out));
    }

    /// Cells in row-major order.
    [[nodiscard]] std::vector<std::pair<int, int>> nodes() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i); ++j) out.emplace_back(i, j);
        return out;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// "2,2,1"; the empty partition prints as "".
    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string trimmed;
    for (char c : text)
        if (c != ' ' && c != '\t') trimmed += c;
    if (trimmed.empty() || trimmed == "0") return out;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw ParseError(what + ": bad integer '" + item + "'");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError(what + ": bad integer '" + item + "'");
        }
    }
    return out;
}

}  // namespace detail

inline Partition Partition::parse(const std::string& text) {
    std::vector<int> parts = detail::parse_int_list(text, "partition");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
}

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All partitions with at most max_cells cells, grouped by size.
inline std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_cells; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Frobenius symbols and Maya diagrams
// ---------------------------------------------------------------------------

struct FrobeniusSymbol {
    std::vector<int> arms;  // I: i_1 > ... > i_k > 0
    std::vector<int> legs;  // J: j_1 > ... > j_k >= 0

    FrobeniusSymbol() = default;
    FrobeniusSymbol(std::vector<int> i, std::vector<int> j) : arms(std::move(i)), legs(std::move(j)) {
        if (arms.size() != legs.size()) throw std::invalid_argument("Frobenius symbol needs |I| = |J|");
        for (std::size_t n = 0; n < arms.size(); ++n) {
            if (arms[n] <= 0 || legs[n] < 0 || (n > 0 && (arms[n] >= arms[n - 1] || legs[n] >= legs[n - 1])))
                throw std::invalid_argument("Frobenius symbol entries must be strictly decreasing, I > 0, J >= 0");
        }
    }

    [[nodiscard]] std::size_t rank() const noexcept { return arms.size(); }

    friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;

    /// "I=2,1;J=1,0"
    [[nodiscard]] std::string to_string() const {
        auto join = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        return "I=" + join(arms) + ";J=" + join(legs);
    }

    static FrobeniusSymbol parse(const std::string& text) {
        auto semi = text.find(';');
        if (semi == std::string::npos) throw ParseError("Frobenius symbol: expected 'I=...;J=...'");
        std::string left = text.substr(0, semi);
        std::string right = text.substr(semi + 1);
        auto strip = [](std::string s, const std::string& prefix) {
            s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
            if (s.rfind(prefix, 0) != 0) throw ParseError("Frobenius symbol: expected '" + prefix + "'");
            return s.substr(prefix.size());
        };
        std::string i_text = strip(left, "I=");
        std::string j_text = strip(right, "J=");
        // "0" is a legal leg, so parse lists without the empty-partition shortcut.
        auto list = [](const std::string& s) {
            std::vector<int> v;
            if (s.empty()) return v;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    v.push_back(std::stoi(item, &used));
                    if (used != item.size()) throw ParseError("Frobenius symbol: bad integer '" + item + "'");
                } catch (const std::logic_error&) {
                    throw ParseError("Frobenius symbol: bad integer '" + item + "'");
                }
            }
            return v;
        };
        try {
            return FrobeniusSymbol(list(i_text), list(j_text));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("Frobenius symbol: ") + e.what());
        }
    }
};

/// M = (Z_{<=0} \ removed) ∪ added, stored as the finite symmetric difference with Z_{<=0}.
struct MayaDiagram {
    std::set<int> added;    // elements >= 1
    std::set<int> removed;  // elements <= 0

    [[nodiscard]] bool contains(int i) const {
        return i <= 0 ? removed.count(i) == 0 : added.count(i) == 1;
    }

    /// The first `count` elements of M in decreasing order.
    [[nodiscard]] std::vector<int> top_elements(int count) const {
        std::vector<int> out;
        int i = added.empty() ? 0 : *added.rbegin();
        while (static_cast<int>(out.size()) < count) {
            if (contains(i)) out.push_back(i);
            --i;
        }
        return out;
    }

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
};

inline FrobeniusSymbol partition_to_frobenius(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<int> arms;
    std::vector<int> legs;
    for (int n = 1; lambda.part(n) >= n; ++n) {
        arms.push_back(lambda.part(n) - n + 1);
        legs.push_back(conj.part(n) - n);
    }
    return {std::move(arms), std::move(legs)};
}

inline Partition frobenius_to_partition(const FrobeniusSymbol& fs) {
    // The diagonal hooks determine the diagram: cell (i,j) with i <= j lies in row i's arm
    // when j - i < arms[i-1]; cell with i > j lies in column j's leg when i - j <= legs[j-1].
    const int k = static_cast<int>(fs.rank());
    if (k == 0) return {};
    const int rows = fs.legs[0] + 1;
    std::vector<int> parts;
    for (int i = 1; i <= rows; ++i) {
        int len = 0;
        if (i <= k) len = i - 1 + fs.arms[static_cast<std::size_t>(i - 1)];
        else
            for (int j = 1; j <= k; ++j)
                if (i - j <= fs.legs[static_cast<std::size_t>(j - 1)]) len = j;
        parts.push_back(len);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

inline MayaDiagram partition_to_maya(const Partition& lambda) {
    FrobeniusSymbol fs = partition_to_frobenius(lambda);
    MayaDiagram m;
    for (int i : fs.arms) m.added.insert(i);
    for (int j : fs.legs) m.removed.insert(-j);
    return m;
}

/// lambda_n = m_n + n - 1 where m_1 > m_2 > ... enumerates M.
inline Partition maya_to_partition(const MayaDiagram& m) {
    if (m.added.size() != m.removed.size()) throw std::invalid_argument("Maya diagram must have charge zero");
    const int depth = static_cast<int>(m.added.size()) + (m.removed.empty() ? 0 : -*m.removed.begin()) + 1;
    std::vector<int> elems = m.top_elements(depth);
    std::vector<int> parts;
    for (int n = 1; n <= depth; ++n) {
        int p = elems[static_cast<std::size_t>(n - 1)] + n - 1;
        if (p <= 0) break;
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

/// Nonzero coefficients m_i of w(Lambda_0) = sum m_i Lambda_i: m_i = [i in M] - [i+1 in M].
inline std::map<int, int> m_coefficients(const Partition& lambda) {
    MayaDiagram m = partition_to_maya(lambda);
    std::set<int> candidates;
    candidates.insert(0);
    for (int i : m.added) {
        candidates.insert(i);
        candidates.insert(i - 1);
    }
    for (int i : m.removed) {
        candidates.insert(i);
        candidates.insert(i - 1);
    }
    std::map<int, int> out;
    for (int i : candidates) {
        int v = static_cast<int>(m.contains(i)) - static_cast<int>(m.contains(i + 1));
        if (v != 0) out[i] = v;
    }
    return out;
}

inline int m_coefficient(const Partition& lambda, int i) {
    auto ms = m_coefficients(lambda);
    auto it = ms.find(i);
    return it == ms.end() ? 0 : it->second;
}

/// Color (content) of the node in row i, column j.
constexpr int node_color(int i, int j) noexcept { return j - i; }

/// s_i acting on the diagram: adds the color-i node when m_i = 1, removes it when m_i = -1,
/// and is the identity when m_i = 0. On the Maya diagram this swaps i and i+1.
inline Partition apply_generator_to_diagram(const Partition& lambda, int i) {
    MayaDiagram m = partition_to_maya(lambda);
    const bool has_i = m.contains(i);
    const bool has_next = m.contains(i + 1);
    if (has_i == has_next) return lambda;
    auto set_member = [&m](int x, bool present) {
        if (x <= 0) {
            if (present) m.removed.erase(x);
            else m.removed.insert(x);
        } else {
            if (present) m.added.insert(x);
            else m.added.erase(x);
        }
    };
    set_member(i, has_next);
    set_member(i + 1, has_i);
    return maya_to_partition(m);
}

inline std::map<int, int> color_multiplicities(const Partition& lambda) {
    std::map<int, int> out;
    for (auto [i, j] : lambda.nodes()) ++out[node_color(i, j)];
    return out;
}

// ---------------------------------------------------------------------------
// v-differences, hooks, normalization
// ---------------------------------------------------------------------------

/// v_a - v_b, materialized through alpha_k = v_k - v_{k+1}.
struct VDifference {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const VDifference&, const VDifference&) = default;

    [[nodiscard]] Polynomial to_polynomial() const {
        Polynomial sum;
        for (int k = std::min(a, b); k < std::max(a, b); ++k) sum += alpha(k);
        return a <= b ? sum : -sum;
    }

    [[nodiscard]] VDifference shifted(int j) const { return {a + j, b + j}; }
};

/// h((i,j)) = v_{j - lambda'_j} - v_{lambda_i - i + 1}.
inline VDifference hook_form(const Partition& lambda, int row, int col) {
    if (!lambda.contains(row, col)) throw NodeOutside(row, col);
    const Partition conj = lambda.conjugate();
    return {col - conj.part(col), lambda.part(row) - row + 1};
}

/// Hook forms of every node, row-major.
inline std::vector<VDifference> hook_forms(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<VDifference> out;
    for (auto [i, j] : lambda.nodes()) out.push_back({j - conj.part(j), lambda.part(i) - i + 1});
    return out;
}

/// N_w: product of the alpha-deformed hook lengths.
inline Polynomial normalization_factor(const Partition& lambda) {
    Polynomial n(1);
    for (const VDifference& h : hook_forms(lambda)) n *= h.to_polynomial();
    return n;
}

// ---------------------------------------------------------------------------
// Weyl words
// ---------------------------------------------------------------------------

/// pi^{pi_power} * s_{letters[0]} * ... * s_{letters[n-1]}: the last letter acts first.
struct WeylWord {
    std::vector<int> letters;
    int pi_power = 0;

    friend bool operator==(const WeylWord&, const WeylWord&) = default;

    /// Letters in the order they act.
    [[nodiscard]] std::vector<int> acting_order() const { return {letters.rbegin(), letters.rend()}; }

    /// The conjugate pi^k w pi^{-k}; every s_i becomes s_{i+k}.
    [[nodiscard]] WeylWord shifted(int k) const {
        WeylWord w = *this;
        for (int& i : w.letters) i += k;
        return w;
    }

    /// "pi^2 s0 s-1 s1 s0"; the identity prints as "id".
    [[nodiscard]] std::string to_string() const {
        std::string out;
        if (pi_power != 0) out = pi_power == 1 ? "pi" : "pi^" + std::to_string(pi_power);
        for (int i : letters) out += (out.empty() ? "s" : " s") + std::to_string(i);
        return out.empty() ? "id" : out;
    }

    /// Parses "s0 s-1 s1 s0", "pi^2 s1", "s1 pi". Written left to right, the rightmost token
    /// acts first; pi factors are moved to the left with s_i pi^k = pi^k s_{i-k}.
    static WeylWord parse(const std::string& text) {
        std::vector<std::string> tokens;
        std::stringstream ss(text);
        std::string tok;
        while (ss >> tok) {
            if (tok == "id") continue;
            tokens.push_back(tok);
        }
        WeylWord out;
        auto parse_int = [](const std::string& s, const std::string& tokn) {
            try {
                std::size_t used = 0;
                int v = std::stoi(s, &used);
                if (used != s.size()) throw ParseError("word: bad token '" + tokn + "'");
                return v;
            } catch (const std::logic_error&) {
                throw ParseError("word: bad token '" + tokn + "'");
            }
        };
        // Build right to left so that each prepended token sees the normalized suffix.
        std::vector<int> reversed_letters;
        for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
            const std::string& t = *it;
            if (t.rfind("pi", 0) == 0) {
                int k = 1;
                if (t.size() > 2) {
                    if (t[2] != '^') throw ParseError("word: bad token '" + t + "'");
                    k = parse_int(t.substr(3), t);
                }
                out.pi_power += k;
            } else if (t[0] == 's' && t.size() > 1) {
                reversed_letters.push_back(parse_int(t.substr(1), t) - out.pi_power);
            } else {
                throw ParseError("word: bad token '" + t + "'");
            }
        }
        out.letters.assign(reversed_letters.rbegin(), reversed_letters.rend());
        return out;
    }
};

/// The row-major word: nodes (1,1),(1,2),...,(2,1),... are added in that order, so every
/// prefix is a Young diagram and every step has m = 1.
inline WeylWord canonical_word(const Partition& lambda) {
    WeylWord w;
    for (auto [i, j] : lambda.nodes()) w.letters.push_back(node_color(i, j));
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

}  // namespace tau
