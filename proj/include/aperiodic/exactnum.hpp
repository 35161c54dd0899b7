// Exact arithmetic in Q(phi), phi^2 = phi + 1.
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aperiodic {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in Q(phi)") {}
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// a + b*phi with a, b rational (gmp keeps them canonical)
class QPhi {
public:
    QPhi() : a_(0), b_(0) {}
    QPhi(long n) : a_(n), b_(0) {}  // NOLINT(implicit)
    QPhi(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static QPhi phi() { return QPhi(0, 1); }
    static QPhi rational(long p, long q = 1) { return QPhi(mpq_class(p, q), 0); }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    friend QPhi operator+(const QPhi& x, const QPhi& y) { return QPhi(x.a_ + y.a_, x.b_ + y.b_); }
    friend QPhi operator-(const QPhi& x, const QPhi& y) { return QPhi(x.a_ - y.a_, x.b_ - y.b_); }
    QPhi operator-() const { return QPhi(-a_, -b_); }

    friend QPhi operator*(const QPhi& x, const QPhi& y) {
        mpq_class bb = x.b_ * y.b_;
        return QPhi(x.a_ * y.a_ + bb, x.a_ * y.b_ + x.b_ * y.a_ + bb);
    }

    // Galois conjugate, phi -> 1 - phi
    QPhi conjugate() const { return QPhi(a_ + b_, -b_); }
    mpq_class norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    QPhi inverse() const {
        if (is_zero()) throw DivisionByZero();
        mpq_class n = norm();
        QPhi c = conjugate();
        return QPhi(c.a_ / n, c.b_ / n);
    }

    friend QPhi operator/(const QPhi& x, const QPhi& y) { return x * y.inverse(); }

    QPhi& operator+=(const QPhi& y) { return *this = *this + y; }
    QPhi& operator-=(const QPhi& y) { return *this = *this - y; }
    QPhi& operator*=(const QPhi& y) { return *this = *this * y; }
    QPhi& operator/=(const QPhi& y) { return *this = *this / y; }

    // sign of value = sign of (2a+b) + b*sqrt5
    int sign() const {
        mpq_class p = 2 * a_ + b_;
        int sp = sgn(p), sq = sgn(b_);
        if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
        if (sp <= 0 && sq <= 0) return -1;
        mpq_class lhs = p * p, rhs = 5 * b_ * b_;
        int c = cmp(lhs, rhs);
        return sp > 0 ? c : -c;
    }

    friend bool operator==(const QPhi& x, const QPhi& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const QPhi& x, const QPhi& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    double to_double() const {
        static const double ph = (1.0 + std::sqrt(5.0)) / 2.0;
        return a_.get_d() + b_.get_d() * ph;
    }

    // exact floor of the real value
    mpz_class floor() const {
        mpz_class n(std::floor(to_double()));
        while (QPhi(mpq_class(n), 0) > *this) n -= 1;
        while (QPhi(mpq_class(n + 1), 0) <= *this) n += 1;
        return n;
    }

    // x - l*floor(x/l), lies in [0, l) for l > 0
    QPhi mod(const QPhi& l) const {
        mpz_class k = (*this / l).floor();
        return *this - l * QPhi(mpq_class(k), 0);
    }

    std::string str() const {
        return a_.get_str() + "+" + b_.get_str() + "*phi";
    }

    static QPhi parse(std::string_view s);

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(a_.get_str()) ^ (h(b_.get_str()) * 1000003u);
    }

private:
    mpq_class a_, b_;
};

inline QPhi abs(const QPhi& x) { return x.sign() < 0 ? -x : x; }
inline QPhi min(const QPhi& x, const QPhi& y) { return y < x ? y : x; }
inline QPhi max(const QPhi& x, const QPhi& y) { return x < y ? y : x; }

inline std::ostream& operator<<(std::ostream& os, const QPhi& x) { return os << x.str(); }

namespace detail {

inline std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline mpq_class parse_rational(const std::string& t) {
    if (t.empty()) throw ParseError("empty rational");
    std::string u = t;
    if (u[0] == '+') u = u.substr(1);
    if (u.empty()) throw ParseError("empty rational");
    for (std::size_t i = 0; i < u.size(); ++i) {
        char c = u[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0)))
            throw ParseError("bad rational '" + t + "'");
    }
    mpq_class q;
    if (q.set_str(u, 10) != 0) throw ParseError("bad rational '" + t + "'");
    if (u.find('/') != std::string::npos && q.get_den() == 0) throw ParseError("zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace detail

// accepts "a+b*phi", "a-b*phi", "a", "b*phi", "phi", with a,b integers or p/q
inline QPhi QPhi::parse(std::string_view text) {
    std::string s = detail::strip(text);
    if (s.empty()) throw ParseError("empty number");
    auto ppos = s.find("phi");
    if (ppos == std::string::npos) return QPhi(detail::parse_rational(s), 0);
    if (ppos + 3 != s.size()) throw ParseError("phi term must come last: '" + s + "'");
    std::string head = s.substr(0, ppos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // split head into rational part and coefficient at the last top-level sign
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    }
    std::string apart, bpart;
    if (split == std::string::npos) {
        bpart = head;
    } else {
        apart = head.substr(0, split);
        bpart = head.substr(split);
        if (!apart.empty() && apart.back() == '+') apart.pop_back();  // "a+-b*phi"
    }
    mpq_class a = apart.empty() ? mpq_class(0) : detail::parse_rational(apart);
    mpq_class b;
    if (bpart.empty() || bpart == "+") b = 1;
    else if (bpart == "-") b = -1;
    else b = detail::parse_rational(bpart);
    return QPhi(a, b);
}

}  // namespace aperiodic

template <>
struct std::hash<aperiodic::QPhi> {
    std::size_t operator()(const aperiodic::QPhi& x) const { return x.hash(); }
};
