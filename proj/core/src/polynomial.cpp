// SPDX-License-Identifier: Apache-2.0
#include "skly/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace skly {

// ---------------------------------------------------------------------------
// JPoly

JPoly JPoly::monomial(JMono m, Rational c) {
    JPoly p;
    if (c != 0) p.terms_[m] = std::move(c);
    return p;
}

JPoly& JPoly::operator+=(const JPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

JPoly& JPoly::operator-=(const JPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

JPoly JPoly::operator*(const JPoly& o) const {
    JPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            JMono m{ma.e31 + mb.e31, ma.e32 + mb.e32};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (c != 0) r.terms_.emplace(m, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

JPoly JPoly::operator-() const {
    JPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

cplx JPoly::eval(cplx j31, cplx j32) const {
    cplx acc = 0;
    for (const auto& [m, c] : terms_) {
        cplx v = static_cast<double>(c);
        for (unsigned i = 0; i < m.e31; ++i) v *= j31;
        for (unsigned i = 0; i < m.e32; ++i) v *= j32;
        acc += v;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// ParamPolynomial

ParamPolynomial ParamPolynomial::from_jpoly(JPoly c) {
    ParamPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(TMono{}, std::move(c));
    return p;
}

ParamPolynomial ParamPolynomial::variable(int a) {
    if (a < 0 || a > 3) throw InvalidInput("variable index out of range");
    TMono m;
    m.e[static_cast<std::size_t>(a)] = 1;
    return monomial(m, JPoly(Rational(1)));
}

ParamPolynomial ParamPolynomial::monomial(TMono m, JPoly c) {
    ParamPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ParamPolynomial ParamPolynomial::operator*(const ParamPolynomial& o) const {
    ParamPolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            TMono m;
            for (std::size_t i = 0; i < 4; ++i) m.e[i] = ma.e[i] + mb.e[i];
            JPoly c = ca * cb;
            if (c.is_zero()) continue;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

ParamPolynomial ParamPolynomial::operator-() const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamPolynomial ParamPolynomial::derivative(int a) const {
    if (a < 0 || a > 3) throw InvalidInput("variable index out of range");
    auto ai = static_cast<std::size_t>(a);
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.e[ai] == 0) continue;
        TMono dm = m;
        dm.e[ai] -= 1;
        JPoly dc = c * JPoly(Rational(m.e[ai]));
        auto it = r.terms_.find(dm);
        if (it == r.terms_.end())
            r.terms_.emplace(dm, std::move(dc));
        else
            it->second += dc;
    }
    return r;
}

bool ParamPolynomial::is_homogeneous(unsigned d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

cplx ParamPolynomial::eval(const std::array<cplx, 4>& t, cplx j31, cplx j32) const {
    cplx acc = 0;
    for (const auto& [m, c] : terms_) {
        cplx v = c.eval(j31, j32);
        for (std::size_t i = 0; i < 4; ++i)
            for (unsigned p = 0; p < m.e[i]; ++p) v *= t[i];
        acc += v;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Canonical text form

namespace {

void append_power(std::ostream& os, const char* name, unsigned e) {
    if (e == 0) return;
    os << "*" << name;
    if (e > 1) os << "^" << e;
}

} // namespace

std::string ParamPolynomial::to_string() const {
    if (terms_.empty()) return "(0)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [tm, jp] : terms_) {
        for (const auto& [jm, c] : jp.terms()) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            append_power(os, "J31", jm.e31);
            append_power(os, "J32", jm.e32);
            append_power(os, "t0", tm.e[0]);
            append_power(os, "t1", tm.e[1]);
            append_power(os, "t2", tm.e[2]);
            append_power(os, "t3", tm.e[3]);
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at, std::string tok) const {
        throw ParseError(msg + " at position " + std::to_string(at), at, std::move(tok));
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    bool accept(char c) {
        if (!eof() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'", pos, eof() ? "" : std::string(1, peek()));
    }
};

Rational parse_rational(Cursor& cur) {
    std::size_t start = cur.pos;
    while (!cur.eof() && (std::isdigit(static_cast<unsigned char>(cur.peek())) ||
                          cur.peek() == '-' || cur.peek() == '/'))
        ++cur.pos;
    std::string tok = cur.s.substr(start, cur.pos - start);
    if (tok.empty()) cur.fail("expected rational coefficient", start, "");
    try {
        return Rational(tok);
    } catch (const std::exception&) {
        cur.fail("malformed rational", start, tok);
    }
}

} // namespace

ParamPolynomial ParamPolynomial::parse(const std::string& text) {
    Cursor cur{text};
    ParamPolynomial out;
    for (;;) {
        cur.skip_ws();
        cur.expect('(');
        Rational coef = parse_rational(cur);
        cur.expect(')');
        JMono jm;
        TMono tm;
        while (cur.accept('*')) {
            std::size_t start = cur.pos;
            while (!cur.eof() && (std::isalnum(static_cast<unsigned char>(cur.peek()))))
                ++cur.pos;
            std::string name = cur.s.substr(start, cur.pos - start);
            unsigned power = 1;
            if (cur.accept('^')) {
                std::size_t pstart = cur.pos;
                while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                    ++cur.pos;
                if (pstart == cur.pos) cur.fail("expected exponent", pstart, "");
                power = static_cast<unsigned>(std::stoul(cur.s.substr(pstart, cur.pos - pstart)));
            }
            if (name == "J31")
                jm.e31 += power;
            else if (name == "J32")
                jm.e32 += power;
            else if (name.size() == 2 && name[0] == 't' && name[1] >= '0' && name[1] <= '3')
                tm.e[static_cast<std::size_t>(name[1] - '0')] += power;
            else
                cur.fail("unknown factor", start, name);
        }
        if (coef != 0) out += monomial(tm, JPoly::monomial(jm, coef));
        cur.skip_ws();
        if (cur.eof()) break;
        cur.expect('+');
    }
    return out;
}

} // namespace skly
