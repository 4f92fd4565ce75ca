#include "strtop/scalar.hpp"

#include "strtop/error.hpp"

#include <cctype>

namespace strtop {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    Scalar value;
    if (slash == std::string_view::npos) {
        value = Scalar(Integer(std::string(num)));
    } else {
        Integer d(std::string{den});
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Scalar(Integer(std::string(num)), d);
        value.canonicalize();
    }
    if (text.front() == '-') value = -value;
    return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace strtop
