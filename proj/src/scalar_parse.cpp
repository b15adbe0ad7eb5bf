// Recursive-descent parser for the scalar grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := atom ("^" signed-int)?
//   atom   := rational | "q" | "s" | "i" | symbol | "(" expr ")" | "-" atom
//   rational := int ("/" int)?
// Unary minus binds looser than "^", so "-q^2" reads as -(q^2); parenthesize
// for the other reading. Registered symbol names are accepted as atoms.
#include "scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace qsu2 {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    mpz_class read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) fail("expected an integer");
        return mpz_class(text.substr(start, pos - start));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    int read_signed_int() {
        bool neg = eat('-');
        mpz_class v = read_int();
        if (!v.fits_sint_p()) fail("exponent out of range");
        int e = (int)v.get_si();
        return neg ? -e : e;
    }

    ScalarQ parse_expr() {
        ScalarQ out = parse_term();
        for (;;) {
            if (eat('+')) out += parse_term();
            else if (eat('-')) out -= parse_term();
            else return out;
        }
    }

    ScalarQ parse_term() {
        ScalarQ out = parse_factor();
        for (;;) {
            if (eat('*')) out *= parse_factor();
            else if (eat('/')) {
                ScalarQ d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                out /= d;
            } else return out;
        }
    }

    ScalarQ parse_factor() {
        if (eat('-')) return -parse_factor();
        ScalarQ base = parse_atom();
        skip_ws();
        if (eat('^')) return base.pow(read_signed_int());
        return base;
    }

    ScalarQ parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            ScalarQ inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            mpz_class n = read_int();
            // Maximal-munch rational literal: int "/" int.
            size_t save = pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                    mpz_class d = read_int();
                    if (d == 0) fail("division by zero");
                    mpq_class v(n, d);
                    v.canonicalize();
                    return ScalarQ(GausRat(v));
                }
                pos = save; // "/" followed by a non-integer: term-level division
            } else {
                pos = save;
            }
            return ScalarQ(GausRat(mpq_class(n)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t at = pos;
            std::string name = read_ident();
            if (name == "q") return ScalarQ::q_var();
            if (name == "s") return ScalarQ::s_var();
            if (name == "i") return ScalarQ::unit_i();
            int v = SymbolTable::instance().lookup(name);
            if (v < 0) {
                pos = at;
                fail("unknown symbol '" + name + "'");
            }
            return ScalarQ::symbol(v);
        }
        fail("expected a value");
    }
};

} // namespace

ScalarQ ScalarQ::parse(const std::string& text) {
    register_standard_symbols();
    Parser p(text);
    ScalarQ out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return out;
}

} // namespace qsu2
