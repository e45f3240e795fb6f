#include "linedraw/rational.hpp"

#include <cctype>
#include <cstddef>

namespace linedraw {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    std::string_view head = text;
    std::string_view tail;
    char sep = '\0';
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' || text[i] == '.') {
            sep = text[i];
            head = text.substr(0, i);
            tail = text.substr(i + 1);
            break;
        }
    }

    Rational value;
    if (sep == '\0') {
        if (!all_digits(head)) {
            return std::nullopt;
        }
        value = Rational(mpz_class(std::string(head), 10));
    } else if (sep == '/') {
        if (!all_digits(head) || !all_digits(tail)) {
            return std::nullopt;
        }
        mpz_class den(std::string(tail), 10);
        if (den == 0) {
            return std::nullopt;
        }
        value = Rational(mpz_class(std::string(head), 10), den);
        value.canonicalize();
    } else {  // decimal point
        if (head.empty() && tail.empty()) {
            return std::nullopt;
        }
        if ((!head.empty() && !all_digits(head)) || (!tail.empty() && !all_digits(tail))) {
            return std::nullopt;
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
        mpz_class numerator = head.empty() ? mpz_class(0) : mpz_class(std::string(head), 10);
        numerator *= scale;
        if (!tail.empty()) {
            numerator += mpz_class(std::string(tail), 10);
        }
        value = Rational(numerator, scale);
        value.canonicalize();
    }
    if (negative) {
        value = -value;
    }
    return value;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace linedraw
