#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace zeeman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers and decimal strings ("-3", "1.25", "3/7").
inline std::optional<Rational> parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            BigInt p(text.substr(0, slash));
            BigInt q(text.substr(slash + 1));
            if (q == 0) return std::nullopt;
            return Rational(p, q);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string head = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (frac.empty()) return std::nullopt;
            bool neg = !head.empty() && head[0] == '-';
            if (head == "-" || head.empty()) head = "0";
            BigInt whole(head);
            BigInt num(frac);
            BigInt den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            Rational r = Rational(boost::multiprecision::abs(whole)) + Rational(num, den);
            return neg ? -r : r;
        }
        return Rational(BigInt(text));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

template <class S>
inline S scalar_abs(const S& v) {
    return v < S(0) ? S(-v) : v;
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static std::string mode_name() { return "exact"; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static std::string mode_name() { return "float"; }
};

}  // namespace zeeman
