#include "roots/rational.hpp"

#include <cctype>

namespace roots {

namespace {

Int parse_int(const std::string& text, const std::string& context) {
    if (text.empty())
        throw std::invalid_argument("bad rational '" + context + "': empty integer part");
    const bool negative = text[0] == '-';
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("bad rational '" + context + "': sign without digits");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad rational '" + context + "': unexpected character '" +
                                        std::string(1, text[i]) + "'");
    Int value(text.substr(start));
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text, text));
    const Int num = parse_int(text.substr(0, slash), text);
    const Int den = parse_int(text.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument("bad rational '" + text + "': zero denominator");
    return make_rational(num, den);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace roots
