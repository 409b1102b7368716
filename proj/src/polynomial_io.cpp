#include <cctype>
#include <sstream>

#include "framecert/polynomial.hpp"

namespace framecert {

namespace {

struct Lexer {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    std::string number() {
        skip_ws();
        size_t start = pos;
        bool seen_slash = false, seen_dot = false;
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '/' && !seen_slash && !seen_dot) {
                seen_slash = true;
                ++pos;
            } else if (c == '.' && !seen_dot && !seen_slash) {
                seen_dot = true;
                ++pos;
            } else {
                break;
            }
        }
        if (pos == start) fail("expected a number");
        return std::string(src.substr(start, pos - start));
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return std::string(src.substr(start, pos - start));
    }
};

class PolyParser {
public:
    PolyParser(VariableTablePtr table, std::string_view text) : table_(std::move(table)) {
        lex_.src = text;
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (!lex_.at_end()) lex_.fail("trailing input");
        return p;
    }

private:
    Polynomial expr() {
        bool negate = false;
        if (lex_.consume('-'))
            negate = true;
        else
            lex_.consume('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (!lex_.at_end()) {
            char c = lex_.peek();
            if (c == '+') {
                lex_.consume('+');
                acc += term();
            } else if (c == '-') {
                lex_.consume('-');
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (!lex_.at_end()) {
            char c = lex_.peek();
            if (c == '*') {
                lex_.consume('*');
                acc = acc * factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
                // implicit multiplication, e.g. "2x" or "x y"
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lex_.consume('^')) {
            std::string n = lex_.number();
            if (n.find('/') != std::string::npos || n.find('.') != std::string::npos)
                lex_.fail("exponent must be a non-negative integer");
            unsigned long e = std::stoul(n);
            Polynomial p = Polynomial::constant(table_, GaussRational(1L));
            for (unsigned long k = 0; k < e; ++k) p = p * base;
            return p;
        }
        return base;
    }

    Polynomial atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.consume('(');
            Polynomial p = expr();
            if (!lex_.consume(')')) lex_.fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return Polynomial::constant(table_, GaussRational(BigRational::parse(lex_.number())));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex_.identifier();
            if (name == "i" && !table_->contains("i"))
                return Polynomial::constant(table_, GaussRational::i());
            if (!table_->contains(name)) lex_.fail("unknown variable '" + name + "'");
            return Polynomial::variable(table_, name);
        }
        lex_.fail("unexpected character");
    }

    VariableTablePtr table_;
    Lexer lex_;
};

void print_monomial(std::ostream& os, const Monomial& m, const VariableTable& table) {
    bool first = true;
    for (size_t v = 0; v < m.nvars(); ++v) {
        uint32_t e = m.exponent(v);
        if (e == 0) continue;
        if (!first) os << "*";
        os << table.name(v);
        if (e > 1) os << "^" << e;
        first = false;
    }
}

}  // namespace

Polynomial Polynomial::parse(VariableTablePtr table, std::string_view text) {
    return PolyParser(std::move(table), text).parse();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        const GaussRational& c = t.coeff;
        bool negative_real = c.is_real() && c.re().sign() < 0;
        if (first) {
            if (negative_real) os << "-";
        } else {
            os << (negative_real ? " - " : " + ");
        }
        first = false;
        GaussRational mag = negative_real ? -c : c;
        bool unit_mono = t.mono.is_unit();
        if (mag.is_one() && !unit_mono) {
            print_monomial(os, t.mono, *table_);
        } else {
            if (mag.is_real() || unit_mono)
                os << mag.to_string();
            else
                os << "(" << mag.to_string() << ")";
            if (!unit_mono) {
                os << "*";
                print_monomial(os, t.mono, *table_);
            }
        }
    }
    return os.str();
}

}  // namespace framecert
