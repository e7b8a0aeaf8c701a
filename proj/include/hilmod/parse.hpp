#pragma once

// Text formats:
//
//   polynomial   z1^2 - 2*z1*z2 + 1/4*z2^3 + (1+i)*z1
//     expr   := ['+'|'-'] term (('+'|'-') term)*
//     term   := factor ('*' factor)*
//     factor := atom ['^' integer]
//     atom   := integer ['/' integer] | 'i' | 'z'k | '(' expr ')'
//   Juxtaposition is rejected: write 2*z1, not 2z1.
//
//   ideal file   "dim m" header, then one generator per line; '#' starts a comment.
//
//   point        comma separated coordinates, each a constant expression
//                ("1/2,-1+i").

#include "errors.hpp"
#include "poly.hpp"
#include "scalar.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hilmod {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t dim) : s_(text), dim_(dim) {}

    Poly parse()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("polynomial '" + std::string(s_) + "' at column "
                         + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit()
    {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    Poly expr()
    {
        Poly acc(dim_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Poly t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = acc * factor();
                continue;
            }
            if (pos_ < s_.size()) {
                char c = s_[pos_];
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                    fail("juxtaposition is not allowed, use '*'");
            }
            break;
        }
        return acc;
    }

    Poly factor()
    {
        Poly base = atom();
        if (accept('^')) {
            std::string e = digits();
            if (e.size() > 4)
                fail("exponent too large");
            base = pow(base, static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    Poly atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (accept('/'))
                den = digits();
            Rational r{Integer{num}, Integer{den}};
            if (sgn(r.get_den()) == 0)
                fail("zero denominator");
            r.canonicalize();
            return Poly::constant(dim_, GaussRat(r));
        }
        if (c == 'i') {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                fail("unknown identifier");
            return Poly::constant(dim_, GaussRat::i());
        }
        if (c == 'z') {
            ++pos_;
            if (!peek_digit())
                fail("variable needs an index, e.g. z1");
            std::string idx = digits();
            unsigned long k = idx.size() > 6 ? 0 : std::stoul(idx);
            if (k < 1 || k > dim_)
                fail("variable z" + idx + " outside z1..z" + std::to_string(dim_));
            return Poly::variable(dim_, k - 1);
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')'))
                fail("missing ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t dim_;
    std::size_t pos_ = 0;
};

inline std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace detail

inline Poly parse_poly(std::string_view text, std::size_t dim)
{
    return detail::PolyParser(text, dim).parse();
}

/// A constant expression such as "-3/4" or "1/2+i".
inline GaussRat parse_scalar(std::string_view text)
{
    Poly p = parse_poly(text, 1);
    if (p.is_zero())
        return GaussRat(0);
    if (p.term_count() != 1 || *p.degree() != 0)
        throw ParseError("not a constant: '" + std::string(text) + "'");
    return p.terms().begin()->second;
}

inline Point parse_point(const std::string& text)
{
    Point out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_scalar(detail::trim(item)));
    if (out.empty())
        throw ParseError("empty point");
    return out;
}

struct IdealText {
    std::size_t dim = 0;
    std::vector<Poly> generators;
};

inline IdealText parse_ideal_text(const std::string& text)
{
    IdealText out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    bool have_dim = false;
    while (std::getline(ss, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        if (!have_dim) {
            std::stringstream hs(line);
            std::string kw;
            long m = 0;
            std::string rest;
            if (!(hs >> kw >> m) || kw != "dim" || m < 1 || (hs >> rest))
                throw ParseError("line " + std::to_string(lineno)
                                 + ": expected header 'dim m' with m >= 1");
            out.dim = static_cast<std::size_t>(m);
            have_dim = true;
            continue;
        }
        try {
            out.generators.push_back(parse_poly(line, out.dim));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_dim)
        throw ParseError("missing 'dim m' header");
    if (out.generators.empty())
        throw ParseError("ideal file lists no generators");
    return out;
}

inline IdealText read_ideal_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_ideal_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace hilmod
