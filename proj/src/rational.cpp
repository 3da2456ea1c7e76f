#include "expdeg/rational.hpp"

#include <cstdlib>

namespace expdeg {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    const auto slash = text.find('/');
    auto to_int = [&](const std::string& part) -> std::int64_t {
        if (part.empty()) throw InputError("malformed rational literal '" + text + "'");
        std::size_t consumed = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(part, &consumed);
        } catch (const std::exception&) {
            throw InputError("malformed rational literal '" + text + "'");
        }
        if (consumed != part.size())
            throw InputError("malformed rational literal '" + text + "'");
        return value;
    };
    if (slash == std::string::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

}  // namespace expdeg
