#include "weylpi/parser.hpp"

#include <cctype>

namespace weylpi {

namespace {

constexpr unsigned kMaxVariable = 999;

class Parser {
public:
    Parser(std::string_view text, const FieldSpec& field) : s_(text), field_(field) {}

    NCPoly run() {
        skip();
        if (pos_ == s_.size()) throw SyntaxError("empty expression", pos_);
        NCPoly r = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        }
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    NCPoly expr() {
        NCPoly r = term();
        for (;;) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    NCPoly term() {
        NCPoly r = unary();
        while (accept('*')) r = r * unary();
        return r;
    }

    NCPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    NCPoly power() {
        NCPoly base = primary();
        if (accept('^')) {
            skip();
            const std::size_t at = pos_;
            const auto d = digits();
            if (d.empty()) throw SyntaxError("expected nonnegative integer exponent", at);
            if (d.size() > 4) throw SyntaxError("exponent too large", at);
            return weylpi::power(base, static_cast<unsigned>(std::stoul(std::string(d))));
        }
        return base;
    }

    NCPoly primary() {
        skip();
        if (pos_ == s_.size()) throw SyntaxError("unexpected end of input", pos_);
        const std::size_t at = pos_;
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit(digits());
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                const std::size_t den_at = pos_;
                const auto den = digits();
                if (den.empty()) throw SyntaxError("expected denominator", den_at);
                if (den.find_first_not_of('0') == std::string_view::npos)
                    throw SyntaxError("zero denominator", den_at);
                lit += "/";
                lit += den;
            }
            return NCPoly::constant(field_, Scalar::parse(field_, lit));
        }
        if (c == 'x') {
            ++pos_;
            const auto d = digits();
            const std::string name = "x" + std::string(d);
            if (d.empty() || d.front() == '0' || d.size() > 3) throw UnknownVariable(name, at);
            const auto idx = static_cast<unsigned>(std::stoul(std::string(d)));
            if (idx < 1 || idx > kMaxVariable) throw UnknownVariable(name, at);
            return NCPoly::variable(field_, static_cast<Letter>(idx));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
            throw UnknownVariable(std::string(s_.substr(pos_, end - pos_)), at);
        }
        if (accept('(')) {
            NCPoly r = expr();
            expect(')');
            return r;
        }
        if (accept('[')) {
            NCPoly a = expr();
            expect(',');
            NCPoly b = expr();
            expect(']');
            return commutator(a, b);
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", at);
    }

    std::string_view s_;
    FieldSpec field_;
    std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse(std::string_view text, const FieldSpec& field) { return Parser(text, field).run(); }

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(w.letters[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string format(const NCPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        const bool neg = c.is_negative();
        const Scalar mag = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (w.empty()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += format_word(w);
        }
    }
    return out;
}

}  // namespace weylpi
