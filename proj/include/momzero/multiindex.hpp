#ifndef MOMZERO_MULTIINDEX_HPP
#define MOMZERO_MULTIINDEX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace momzero {

/// Exponent tuple of a monomial in n variables. Immutable value type.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}
    MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}

    static MultiIndex zeros(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }

    static MultiIndex unit(std::size_t n, std::size_t i) {
        std::vector<std::uint32_t> e(n, 0);
        e.at(i) = 1;
        return MultiIndex(std::move(e));
    }

    /// Parses the bracket form "[2,0,1]". Whitespace is not accepted.
    static MultiIndex parse(std::string_view text) {
        auto bad = [&] { throw std::runtime_error("bad multi-index: '" + std::string(text) + "'"); };
        if (text.size() < 2 || text.front() != '[' || text.back() != ']') bad();
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<std::uint32_t> e;
        if (!body.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = body.find(',', pos);
                std::string_view part = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
                if (part.empty()) bad();
                std::uint64_t v = 0;
                for (char c : part) {
                    if (c < '0' || c > '9') bad();
                    v = v * 10 + static_cast<std::uint64_t>(c - '0');
                    if (v > UINT32_MAX) bad();
                }
                e.push_back(static_cast<std::uint32_t>(v));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        return MultiIndex(std::move(e));
    }

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    unsigned degree() const {
        unsigned d = 0;
        for (std::uint32_t v : e_) d += v;
        return d;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("multi-index length mismatch in +");
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
        return MultiIndex(std::move(r));
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e_[i]);
        }
        s += ']';
        return s;
    }

  private:
    std::vector<std::uint32_t> e_;
};

/// Graded lexicographic comparison: degree first; within a degree, indices are
/// ranked as a dictionary ranks the corresponding words with variable 1 the
/// first letter of the alphabet. So in two variables the ascending order is
/// 1, X1, X2, X1^2, X1X2, X2^2: a larger exponent at the first differing
/// position sorts earlier.
inline std::strong_ordering glex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multi-index length mismatch in glex_compare");
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

inline bool glex_less(const MultiIndex& a, const MultiIndex& b) {
    return glex_compare(a, b) == std::strong_ordering::less;
}

struct GlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return glex_less(a, b); }
};

/// Componentwise (divisibility) partial order: X^a divides X^b.
inline bool fg_leq(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multi-index length mismatch in fg_leq");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Componentwise max; exponent of lcm(X^a, X^b).
inline MultiIndex lcm_max(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multi-index length mismatch in lcm_max");
    std::vector<std::uint32_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return MultiIndex(std::move(r));
}

/// All multi-indices of degree <= d in n variables, in ascending glex order.
/// This is the row/column index set of every truncated matrix in the library.
class GLexBasis {
  public:
    static GLexBasis enumerate(std::size_t n, unsigned d) {
        GLexBasis b;
        b.n_ = n;
        b.d_ = d;
        std::vector<std::uint32_t> cur(n, 0);
        gen(cur, 0, d, b.idx_);
        std::sort(b.idx_.begin(), b.idx_.end(), GlexLess{});
        for (std::size_t i = 0; i < b.idx_.size(); ++i) b.pos_.emplace(b.idx_[i], i);
        return b;
    }

    std::size_t variable_count() const { return n_; }
    unsigned max_degree() const { return d_; }
    std::size_t size() const { return idx_.size(); }
    const MultiIndex& at(std::size_t i) const { return idx_.at(i); }
    const std::vector<MultiIndex>& indices() const { return idx_; }

    std::size_t position(const MultiIndex& a) const {
        auto it = pos_.find(a);
        if (it == pos_.end())
            throw std::invalid_argument("multi-index " + a.str() + " outside basis");
        return it->second;
    }

    bool contains(const MultiIndex& a) const { return pos_.find(a) != pos_.end(); }

  private:
    static void gen(std::vector<std::uint32_t>& cur, std::size_t i, unsigned left,
                    std::vector<MultiIndex>& out) {
        if (i == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            cur[i] = v;
            gen(cur, i + 1, left - v, out);
        }
        cur[i] = 0;
    }

    std::size_t n_ = 0;
    unsigned d_ = 0;
    std::vector<MultiIndex> idx_;
    std::map<MultiIndex, std::size_t, GlexLess> pos_;
};

}  // namespace momzero

#endif
