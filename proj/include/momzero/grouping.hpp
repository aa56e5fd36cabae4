#ifndef MOMZERO_GROUPING_HPP
#define MOMZERO_GROUPING_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multiindex.hpp"

namespace momzero {

/// Ordered partition of the variable positions {0..n-1} into blocks.
/// Block order is significant: contiguous splits interact with the glex order.
/// Text form is 1-based, blocks separated by '|': "1|2,3".
class Grouping {
  public:
    Grouping(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
        : n_(n), blocks_(std::move(blocks)) {
        std::vector<bool> seen(n, false);
        if (blocks_.empty()) throw std::invalid_argument("grouping: no blocks");
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("grouping: empty block");
            for (std::size_t p : b) {
                if (p >= n) throw std::invalid_argument("grouping: position out of range");
                if (seen[p]) throw std::invalid_argument("grouping: repeated position");
                seen[p] = true;
            }
        }
        for (std::size_t p = 0; p < n; ++p)
            if (!seen[p]) throw std::invalid_argument("grouping: uncovered position");
    }

    static Grouping parse(std::size_t n, std::string_view text) {
        auto bad = [&] { throw std::runtime_error("bad grouping: '" + std::string(text) + "'"); };
        std::vector<std::vector<std::size_t>> blocks;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t bar = text.find('|', pos);
            std::string_view part =
                text.substr(pos, bar == std::string_view::npos ? text.size() - pos : bar - pos);
            std::vector<std::size_t> block;
            std::size_t q = 0;
            while (q <= part.size() && !part.empty()) {
                std::size_t comma = part.find(',', q);
                std::string_view num =
                    part.substr(q, comma == std::string_view::npos ? part.size() - q : comma - q);
                if (num.empty()) bad();
                std::size_t v = 0;
                for (char c : num) {
                    if (c < '0' || c > '9') bad();
                    v = v * 10 + static_cast<std::size_t>(c - '0');
                }
                if (v == 0) bad();  // 1-based in text form
                block.push_back(v - 1);
                if (comma == std::string_view::npos) break;
                q = comma + 1;
            }
            blocks.push_back(std::move(block));
            if (bar == std::string_view::npos) break;
            pos = bar + 1;
        }
        return Grouping(n, std::move(blocks));
    }

    static Grouping singletons(std::size_t n) {
        std::vector<std::vector<std::size_t>> blocks;
        for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
        return Grouping(n, std::move(blocks));
    }

    /// Two contiguous blocks [0..x_count) and [x_count..n).
    static Grouping contiguous_pair(std::size_t n, std::size_t x_count) {
        if (x_count == 0 || x_count >= n)
            throw std::invalid_argument("grouping: contiguous pair needs two nonempty blocks");
        std::vector<std::size_t> a, b;
        for (std::size_t i = 0; i < x_count; ++i) a.push_back(i);
        for (std::size_t i = x_count; i < n; ++i) b.push_back(i);
        return Grouping(n, {a, b});
    }

    std::size_t variable_count() const { return n_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::size_t>& block(std::size_t j) const { return blocks_.at(j); }

    /// Subvector of a restricted to block j, in block position order.
    MultiIndex extract(const MultiIndex& a, std::size_t j) const {
        if (a.size() != n_) throw std::invalid_argument("grouping: index length mismatch");
        std::vector<std::uint32_t> e;
        e.reserve(blocks_.at(j).size());
        for (std::size_t p : blocks_[j]) e.push_back(a[p]);
        return MultiIndex(std::move(e));
    }

    /// True when there are exactly two blocks, each a run of consecutive
    /// positions, first block starting at 0. Required by the conditional
    /// triangularity checks, where the second block plays the role of the
    /// glex-trailing variables.
    bool is_contiguous_pair() const {
        if (blocks_.size() != 2) return false;
        std::size_t want = 0;
        for (const auto& b : blocks_)
            for (std::size_t p : b)
                if (p != want++) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            if (j) s += '|';
            for (std::size_t k = 0; k < blocks_[j].size(); ++k) {
                if (k) s += ',';
                s += std::to_string(blocks_[j][k] + 1);
            }
        }
        return s;
    }

  private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> blocks_;
};

}  // namespace momzero

#endif
