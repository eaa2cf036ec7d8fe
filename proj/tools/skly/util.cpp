// SPDX-License-Identifier: Apache-2.0
#include "util.hpp"

#include <cctype>
#include <sstream>

namespace skly::tool {

namespace {

// number := [+-]? digits [. digits]? ; returns NaN marker when the cursor
// sits directly on 'i' (an implicit coefficient of 1)
double read_number(const std::string& s, std::size_t& pos, bool& implicit_one) {
    implicit_one = false;
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits_from = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
        ++pos;
    if (digits_from == pos) {
        if (pos < s.size() && s[pos] == 'i') {
            implicit_one = true;
            return (start < s.size() && s[start] == '-') ? -1.0 : 1.0;
        }
        throw ParseError("expected a number at position " + std::to_string(start), start,
                         s.substr(start, 1));
    }
    try {
        return std::stod(s.substr(start, pos - start));
    } catch (const std::exception&) {
        throw ParseError("malformed number at position " + std::to_string(start), start,
                         s.substr(start, pos - start));
    }
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty complex literal", 0, text);

    double re = 0, im = 0;
    std::size_t pos = 0;
    bool implicit_one = false;
    double first = read_number(s, pos, implicit_one);
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        im = first;
    } else {
        re = first;
        if (pos < s.size()) {
            if (s[pos] != '+' && s[pos] != '-')
                throw ParseError("expected '+', '-' or 'i' at position " + std::to_string(pos), pos,
                                 s.substr(pos, 1));
            double second = read_number(s, pos, implicit_one);
            if (pos >= s.size() || s[pos] != 'i')
                throw ParseError("expected trailing 'i' at position " + std::to_string(pos), pos,
                                 s.substr(pos, 1));
            ++pos;
            im = second;
        }
    }
    if (pos != s.size())
        throw ParseError("trailing characters at position " + std::to_string(pos), pos, s.substr(pos));
    return {re, im};
}

std::string format_complex(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real();
    if (z.imag() >= 0)
        os << "+" << z.imag() << "i";
    else
        os << z.imag() << "i";
    return os.str();
}

} // namespace skly::tool
