#include "tropnull/rational.hpp"

#include "tropnull/error.hpp"

#include <cctype>

namespace tropnull {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::FlavorViolation: return "FlavorViolation";
    case ErrorKind::TagViolation: return "TagViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SemiringMismatch: return "SemiringMismatch";
    case ErrorKind::NonPositivePower: return "NonPositivePower";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::EscalationExhausted: return "EscalationExhausted";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw Error(ErrorKind::SyntaxError, "malformed rational '" + std::string(text) + "'");
    }
    if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
        throw Error(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    }
    std::string normalized(text.front() == '+' ? text.substr(1) : text);
    Rational q(normalized, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long ceil_to_long(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

long floor_to_long(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

Rational dot(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point scale(const Rational& s, const Point& p) {
    Point r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = s * p[i];
    return r;
}

Point zero_point(std::size_t n) { return Point(n, Rational(0)); }

double approx(const Rational& q) { return q.get_d(); }

}  // namespace tropnull
