#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylkit {

// Thrown by operations whose mathematical preconditions fail (rank-deficient
// matrices, inconsistent systems, missing homogeneity witness, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the text grammar and document readers.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

using Int = mpz_class;

// Exact rational number. Always stored reduced with positive denominator;
// every constructor canonicalizes, so equality is plain value equality.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}            // NOLINT: implicit by design
    Rat(long n) : v_(n) {}           // NOLINT
    Rat(const Int& n) : v_(n) {}     // NOLINT
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    // Accepts "p", "-p", "p/q" with optional sign on p.
    static std::optional<Rat> parse(std::string_view s);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline std::optional<Rat> Rat::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) return std::nullopt;
        return Rat(Int(std::string(s)));
    }
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rat(Int(std::string(num)), d);
}

// Rising factorial (t)_m = t (t+1) ... (t+m-1); empty product for m = 0.
inline Rat pochhammer(const Rat& t, unsigned m) {
    Rat acc = 1;
    for (unsigned s = 0; s < m; ++s) acc *= t + Rat(static_cast<long>(s));
    return acc;
}

inline Int binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Parses a comma-separated list of rationals ("1/2,-3,0").
std::vector<Rat> parse_rat_csv(std::string_view s);

}  // namespace weylkit
