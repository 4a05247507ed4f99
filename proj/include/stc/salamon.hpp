#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "stc/lie_algebra.hpp"

// Parser and renderer for the Salamon tuple notation,
// e.g. "(e^{23}, e^{34}, -e^{24},0,0,0)".
//
// Grammar (frozen):
//   algebra := "(" slot ("," slot)* ")"
//   slot    := "0" | term (("+"|"-") term)*
//   term    := [coeff "*"] "e^{" digit digit "}"
//   coeff   := integer | integer "/" integer
// Whitespace is ignored; a sign may precede the first term.  Input e^{ji}
// with j > i is normalized to -e^{ij} (the notation fixes no ordering
// convention for user input).

namespace stc {

class SalamonError : public std::runtime_error {
  public:
    explicit SalamonError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class SalamonParser {
  public:
    explicit SalamonParser(const std::string& text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    RealLieAlgebra parse() {
        expect('(');
        std::vector<ExtForm<Rational>> slots;
        slots.push_back(parse_slot());
        while (peek() == ',') {
            ++pos_;
            slots.push_back(parse_slot());
        }
        expect(')');
        if (pos_ != s_.size()) throw SalamonError("trailing input after ')'");
        RealLieAlgebra g(int(slots.size()));
        if (g.dim > 9) throw SalamonError("more than 9 slots");
        g.d = std::move(slots);
        for (int k = 0; k < g.dim; ++k)
            for (const auto& [mask, c] : g.d[k].terms) {
                (void)c;
                if (mask >> g.dim) throw SalamonError("index exceeds declared dimension");
            }
        return g;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        if (peek() != c) throw SalamonError(std::string("expected '") + c + "'");
        ++pos_;
    }

    ExtForm<Rational> parse_slot() {
        if (peek() == '0' && (pos_ + 1 == s_.size() || s_[pos_ + 1] == ',' || s_[pos_ + 1] == ')')) {
            ++pos_;
            return {};
        }
        ExtForm<Rational> slot;
        std::set<std::pair<int, int>> seen;
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                break;
            }
            auto [coeff, i, j] = parse_term();
            if (sign < 0) coeff = -coeff;
            int a = i, b = j;
            if (a > b) {
                std::swap(a, b);
                coeff = -coeff;
            }
            if (!seen.insert({a, b}).second)
                throw SalamonError("duplicate e^{ij} within one slot");
            slot.add_term((Mask(1) << a) | (Mask(1) << b), coeff);
            first = false;
        }
        return slot;
    }

    // returns (coefficient, i, j) with 0-based indices
    std::tuple<Rational, int, int> parse_term() {
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_number();
            if (peek() == '/') {
                ++pos_;
                Rational den = parse_number();
                if (den == 0) throw SalamonError("zero denominator in coefficient");
                coeff /= den;
            }
            expect('*');
        }
        expect('e');
        expect('^');
        expect('{');
        int i = parse_digit();
        int j = parse_digit();
        expect('}');
        if (i == j) throw SalamonError("e^{ii} is zero");
        return {coeff, i - 1, j - 1};
    }

    Rational parse_number() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
        if (digits.empty()) throw SalamonError("expected number");
        return Rational(Integer(digits));
    }

    int parse_digit() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SalamonError("expected index digit");
        int v = s_[pos_++] - '0';
        if (v == 0) throw SalamonError("index 0 out of range");
        return v;
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline RealLieAlgebra parse_salamon(const std::string& text) {
    return detail::SalamonParser(text).parse();
}

inline std::string render_salamon(const RealLieAlgebra& g) {
    std::string out = "(";
    for (int k = 0; k < g.dim; ++k) {
        if (k) out += ", ";
        if (g.d[k].is_zero_form()) {
            out += "0";
            continue;
        }
        std::vector<std::tuple<int, int, Rational>> entries;
        for (const auto& [mask, coeff] : g.d[k].terms) {
            int i = -1, j = -1;
            for (int b = 0; b < g.dim; ++b)
                if (mask & (Mask(1) << b)) (i < 0 ? i : j) = b;
            entries.emplace_back(i, j, coeff);
        }
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return std::pair(std::get<0>(a), std::get<1>(a)) <
                   std::pair(std::get<0>(b), std::get<1>(b));
        });
        bool first = true;
        for (const auto& [i, j, coeff] : entries) {
            Rational c = coeff;
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            } else if (!first) {
                out += "+";
            }
            if (c != 1) out += to_text(c) + "*";
            out += "e^{" + std::to_string(i + 1) + std::to_string(j + 1) + "}";
            first = false;
        }
    }
    out += ")";
    return out;
}

}  // namespace stc
