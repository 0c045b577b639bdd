#pragma once

#include <boost/rational.hpp>
#include <string>

namespace segal {

using Rat = boost::rational<long long>;

inline Rat rat_abs(const Rat& q) { return q < Rat(0) ? -q : q; }

inline std::string rat_str(const Rat& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace segal
