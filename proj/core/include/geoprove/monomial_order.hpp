#pragma once

#include "geoprove/monomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geoprove {

/// Admissible monomial order.  Plain lex and grevlex treat index 0 as the
/// most significant variable.  Block orders compare one variable block at a
/// time (grevlex within each block), so the front block is eliminated by a
/// Groebner basis computed under the order.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex(std::size_t nvars) {
        return MonomialOrder(Kind::Lex, nvars, {});
    }
    static MonomialOrder grevlex(std::size_t nvars) {
        return MonomialOrder(Kind::Grevlex, nvars, {});
    }
    /// Order eliminating the variables in `front`: every monomial containing
    /// one of them exceeds every monomial free of all of them.
    static MonomialOrder elimination(std::size_t nvars, const std::vector<int>& front) {
        std::vector<bool> in_front(nvars, false);
        for (int v : front) in_front[static_cast<std::size_t>(v)] = true;
        std::vector<int> rest;
        for (std::size_t i = 0; i < nvars; ++i)
            if (!in_front[i]) rest.push_back(static_cast<int>(i));
        MonomialOrder ord(Kind::Block, nvars, {});
        ord.blocks_.push_back(front);
        ord.blocks_.push_back(rest);
        return ord;
    }

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// +1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Lex:
            for (std::size_t i = 0; i < nvars_; ++i) {
                unsigned ea = a.exp(static_cast<int>(i)), eb = b.exp(static_cast<int>(i));
                if (ea != eb) return ea > eb ? 1 : -1;
            }
            return 0;
        case Kind::Grevlex:
            return cmp_grevlex(a, b);
        case Kind::Block:
            for (const auto& block : blocks_) {
                unsigned da = 0, db = 0;
                for (int v : block) { da += a.exp(v); db += b.exp(v); }
                if (da != db) return da > db ? 1 : -1;
                for (std::size_t i = block.size(); i-- > 0;) {
                    unsigned ea = a.exp(block[i]), eb = b.exp(block[i]);
                    if (ea != eb) return ea < eb ? 1 : -1;
                }
            }
            return 0;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && nvars_ == o.nvars_ && blocks_ == o.blocks_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    /// Stable textual key, used for caching and diagnostics.
    std::string key() const {
        switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Block: {
            std::string s = "block";
            for (const auto& block : blocks_) {
                s += ':';
                for (std::size_t i = 0; i < block.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(block[i]);
                }
            }
            return s;
        }
        }
        return "";
    }

private:
    MonomialOrder(Kind kind, std::size_t nvars, std::vector<std::vector<int>> blocks)
        : kind_(kind), nvars_(nvars), blocks_(std::move(blocks)) {}

    Kind kind_;
    std::size_t nvars_;
    std::vector<std::vector<int>> blocks_;
};

} // namespace geoprove
