#ifndef FRAMECERT_TERM_ORDER_HPP
#define FRAMECERT_TERM_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "framecert/monomial.hpp"

namespace framecert {

/// Admissible monomial order: lex, graded reverse lex, or a block
/// (elimination) order that ranks any monomial containing an eliminated
/// variable above every monomial free of them.
class TermOrder {
public:
    enum class Kind : uint8_t { Lex, GrevLex, Block };

    static TermOrder lex() { return TermOrder(Kind::Lex); }
    static TermOrder grevlex() { return TermOrder(Kind::GrevLex); }
    static TermOrder block(std::vector<uint8_t> elim_mask, Kind inner = Kind::GrevLex,
                           Kind outer = Kind::GrevLex);

    Kind kind() const { return kind_; }
    Kind inner() const { return inner_; }
    Kind outer() const { return outer_; }
    const std::vector<uint8_t>& elim_mask() const { return elim_mask_; }

    /// <0 when a ranks below b, 0 on equality, >0 when a ranks above b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind_ == b.kind_ && a.inner_ == b.inner_ && a.outer_ == b.outer_ &&
               a.elim_mask_ == b.elim_mask_;
    }

private:
    explicit TermOrder(Kind kind) : kind_(kind) {}

    Kind kind_;
    Kind inner_ = Kind::GrevLex;
    Kind outer_ = Kind::GrevLex;
    std::vector<uint8_t> elim_mask_;  // per-variable flag, Block only
};

}  // namespace framecert

#endif
