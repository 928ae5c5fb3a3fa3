#include "framelat/rational.hpp"

namespace framelat {

namespace {

bool isIntegerToken(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational parseRationalToken(const std::string& tok) {
    std::size_t slash = tok.find('/');
    std::string numStr = slash == std::string::npos ? tok : tok.substr(0, slash);
    std::string denStr = slash == std::string::npos ? "" : tok.substr(slash + 1);
    if (!isIntegerToken(numStr)) throw ParseError("bad rational token '" + tok + "'");
    Int num(numStr);
    if (slash == std::string::npos) return Rational(num);
    if (!isIntegerToken(denStr) || denStr[0] == '-')
        throw ParseError("bad rational token '" + tok + "'");
    Int den(denStr);
    if (den == 0) throw ParseError("zero denominator in '" + tok + "'");
    if (den == 1) throw ParseError("non-canonical rational '" + tok + "' (denominator 1 must be omitted)");
    if (gcdOf(abs(num), den) != 1) throw ParseError("non-canonical rational '" + tok + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rationalToString(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace framelat
