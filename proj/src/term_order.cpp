#include "framecert/term_order.hpp"

namespace framecert {

namespace {

// Compare restricted to positions where mask[i] == keep (mask empty = all).
// Lex: first difference decides, larger exponent ranks higher.
int lex_compare(const Monomial& a, const Monomial& b, const std::vector<uint8_t>& mask,
                uint8_t keep) {
    for (size_t i = 0; i < a.nvars(); ++i) {
        if (!mask.empty() && mask[i] != keep) continue;
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
}

// GrevLex: total degree first; ties broken at the last differing position,
// where the smaller exponent ranks higher.
int grevlex_compare(const Monomial& a, const Monomial& b, const std::vector<uint8_t>& mask,
                    uint8_t keep) {
    uint64_t da = 0, db = 0;
    if (mask.empty()) {
        da = a.total_degree();
        db = b.total_degree();
    } else {
        for (size_t i = 0; i < a.nvars(); ++i) {
            if (mask[i] != keep) continue;
            da += a.exponent(i);
            db += b.exponent(i);
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.nvars(); i-- > 0;) {
        if (!mask.empty() && mask[i] != keep) continue;
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

int sub_compare(TermOrder::Kind kind, const Monomial& a, const Monomial& b,
                const std::vector<uint8_t>& mask, uint8_t keep) {
    return kind == TermOrder::Kind::Lex ? lex_compare(a, b, mask, keep)
                                        : grevlex_compare(a, b, mask, keep);
}

}  // namespace

TermOrder TermOrder::block(std::vector<uint8_t> elim_mask, Kind inner, Kind outer) {
    TermOrder o(Kind::Block);
    o.inner_ = inner;
    o.outer_ = outer;
    o.elim_mask_ = std::move(elim_mask);
    return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return lex_compare(a, b, {}, 1);
        case Kind::GrevLex:
            return grevlex_compare(a, b, {}, 1);
        case Kind::Block: {
            if (int c = sub_compare(inner_, a, b, elim_mask_, 1)) return c;
            return sub_compare(outer_, a, b, elim_mask_, 0);
        }
    }
    return 0;
}

std::string TermOrder::describe() const {
    auto name = [](Kind k) { return k == Kind::Lex ? "lex" : "grevlex"; };
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::GrevLex:
            return "grevlex";
        case Kind::Block: {
            std::string s = "block[";
            for (uint8_t m : elim_mask_) s += m ? '1' : '0';
            s += "](";
            s += name(inner_);
            s += ",";
            s += name(outer_);
            s += ")";
            return s;
        }
    }
    return "?";
}

}  // namespace framecert
