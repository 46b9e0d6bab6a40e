#include "ints.hpp"

#include "error.hpp"

namespace rf {

Rat parse_rational(const std::string& s) {
    size_t beg = s.find_first_not_of(" \t");
    size_t end = s.find_last_not_of(" \t");
    if (beg == std::string::npos) throw Error(ErrCode::Parse, "empty rational");
    const std::string body = s.substr(beg, end - beg + 1);
    auto parse_int = [](const std::string& w) -> Int {
        if (w.empty()) throw Error(ErrCode::Parse, "empty integer");
        size_t i = (w[0] == '+' || w[0] == '-') ? 1 : 0;
        if (i == w.size()) throw Error(ErrCode::Parse, "sign without digits");
        for (; i < w.size(); ++i)
            if (w[i] < '0' || w[i] > '9') throw Error(ErrCode::Parse, "bad integer: " + w);
        return Int(w);
    };
    const size_t slash = body.find('/');
    if (slash == std::string::npos) return Rat(parse_int(body));
    const Int num = parse_int(body.substr(0, slash));
    const Int den = parse_int(body.substr(slash + 1));
    if (den == 0) throw Error(ErrCode::Parse, "zero denominator");
    return Rat(num, den);
}

std::string rational_str(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace rf
