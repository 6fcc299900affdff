#include <lvcert/algebra/poly_io.hpp>

#include <cctype>

namespace lvcert {

namespace {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := atom ['^' integer]
// atom   := integer | 't' | 'r' | '(' expr ')'
class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    BiPoly parse()
    {
        BiPoly value = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing input");
        return value;
    }

private:
    BiPoly expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        else if (peek() == '+') {
            ++pos_;
        }
        BiPoly value = term();
        if (negate)
            value = -value;
        while (true) {
            skip_space();
            char c = peek();
            if (c == '+') {
                ++pos_;
                value += term();
            }
            else if (c == '-') {
                ++pos_;
                value -= term();
            }
            else {
                return value;
            }
        }
    }

    BiPoly term()
    {
        BiPoly value = factor();
        while (true) {
            skip_space();
            char c = peek();
            if (c == '*') {
                ++pos_;
                value *= factor();
            }
            else if (c == '(' || c == 't' || c == 'r' || std::isdigit(static_cast<unsigned char>(c))) {
                value *= factor();
            }
            else {
                return value;
            }
        }
    }

    BiPoly factor()
    {
        BiPoly base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            BigInt e = integer();
            if (!e.fits_uint_p())
                fail("exponent out of range");
            return pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    BiPoly atom()
    {
        skip_space();
        char c = peek();
        if (c == 't') {
            ++pos_;
            return BiPoly::t();
        }
        if (c == 'r') {
            ++pos_;
            return BiPoly::r();
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            skip_space();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return BiPoly(integer());
        fail("unexpected character");
    }

    BigInt integer()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const char* what) const
    {
        throw AlgebraError(std::string("expression parse error: ") + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace lvcert
