#include "weylkit/parse.hpp"

#include <cctype>
#include <optional>

namespace weylkit {

namespace {

struct Token {
    enum class Type { number, var, plus, minus, star, caret, end };
    Type type = Type::end;
    std::string text;   // number payload
    std::string base;   // var payload: "x", "z", "d", "xi", "t"
    long index = 0;     // 1-based var index (0 for "t")
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = Token{};
            return;
        }
        char c = s_[pos_];
        auto punct = [&](Token::Type t) {
            tok_ = Token{};
            tok_.type = t;
            ++pos_;
        };
        if (c == '+') return punct(Token::Type::plus);
        if (c == '-') return punct(Token::Type::minus);
        if (c == '*') return punct(Token::Type::star);
        if (c == '^') return punct(Token::Type::caret);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '/'))
                ++pos_;
            tok_ = Token{};
            tok_.type = Token::Type::number;
            tok_.text = std::string(s_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string base(s_.substr(start, pos_ - start));
            if (base != "x" && base != "z" && base != "d" && base != "xi" && base != "t" &&
                base != "th")
                throw parse_error("unknown token '" + base + "'");
            long index = 0;
            if (base != "t") {
                std::size_t digits = pos_;
                while (digits < s_.size() && std::isdigit(static_cast<unsigned char>(s_[digits])))
                    ++digits;
                if (digits == pos_) throw parse_error("variable '" + base + "' needs an index");
                try {
                    index = std::stol(std::string(s_.substr(pos_, digits - pos_)));
                } catch (const std::exception&) {
                    throw parse_error("variable index out of range");
                }
                if (index <= 0) throw parse_error("variable index must be positive");
                pos_ = digits;
            }
            Token t;
            t.type = Token::Type::var;
            t.base = base;
            t.index = index;
            tok_ = t;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token tok_;
};

Rat parse_number(const std::string& text) {
    auto r = Rat::parse(text);
    if (!r) throw parse_error("bad rational '" + text + "'");
    return *r;
}

int parse_exponent(Lexer& lex) {
    if (lex.peek().type != Token::Type::caret) return 1;
    lex.take();
    if (lex.peek().type != Token::Type::number) throw parse_error("exponent expected after '^'");
    Token t = lex.take();
    if (t.text.find('/') != std::string::npos)
        throw parse_error("exponent must be an integer");
    long e = 0;
    try {
        e = std::stol(t.text);
    } catch (const std::exception&) {
        throw parse_error("exponent out of range");
    }
    if (e < 0 || e > 1000000) throw parse_error("exponent out of range");
    return static_cast<int>(e);
}

template <class FactorFn, class TermFn>
void parse_expr(Lexer& lex, FactorFn&& on_factor, TermFn&& on_term) {
    bool expect_term = true;
    bool sign_taken = false;
    int sign = 1;
    while (true) {
        const Token& t = lex.peek();
        if (t.type == Token::Type::end) {
            if (expect_term) throw parse_error("dangling sign or empty input");
            break;
        }
        if (expect_term) {
            if (t.type == Token::Type::plus || t.type == Token::Type::minus) {
                if (sign_taken) throw parse_error("doubled sign");
                if (t.type == Token::Type::minus) sign = -sign;
                sign_taken = true;
                lex.take();
                continue;
            }
            // term := factor ('*' factor)*
            on_term(sign);
            while (true) {
                const Token& f = lex.peek();
                if (f.type == Token::Type::number) {
                    Token num = lex.take();
                    on_factor(parse_number(num.text), "", 0, 1);
                } else if (f.type == Token::Type::var) {
                    Token var = lex.take();
                    int e = parse_exponent(lex);
                    on_factor(Rat(1), var.base, var.index, e);
                } else {
                    throw parse_error("factor expected");
                }
                if (lex.peek().type == Token::Type::star) {
                    lex.take();
                    continue;
                }
                break;
            }
            expect_term = false;
            sign_taken = false;
            sign = 1;
            continue;
        }
        if (t.type == Token::Type::plus || t.type == Token::Type::minus) {
            // the joining sign is the term's sign; a second one is an error
            sign = t.type == Token::Type::minus ? -1 : 1;
            sign_taken = true;
            expect_term = true;
            lex.take();
            continue;
        }
        throw parse_error("'+' or '-' expected between terms");
    }
}

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string_view::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, semi - pos));
        pos = semi + 1;
    }
    return parts;
}

}  // namespace

WeylOp parse_weyl_op(std::string_view text, std::size_t n) {
    Lexer lex(text);
    WeylOp total(n);
    WeylOp term(n);
    int term_sign = 1;
    bool open = false;
    auto flush = [&]() {
        if (open) total += term.scaled(Rat(term_sign));
        open = false;
    };
    parse_expr(
        lex,
        [&](const Rat& c, const std::string& base, long index, int exp) {
            WeylOp factor(n);
            if (base.empty()) {
                factor = WeylOp::constant(n, c);
            } else if (base == "x" || base == "z") {
                if (index > static_cast<long>(n)) throw parse_error("variable index out of range");
                MultiIndex a(n, 0), b(n, 0);
                a[index - 1] = exp;
                factor = WeylOp::monomial(n, a, b);
            } else if (base == "d") {
                if (index > static_cast<long>(n)) throw parse_error("variable index out of range");
                MultiIndex a(n, 0), b(n, 0);
                b[index - 1] = exp;
                factor = WeylOp::monomial(n, a, b);
            } else {
                throw parse_error("token '" + base + "' is not a Weyl variable");
            }
            term = multiply(term, factor);
        },
        [&](int sign) {
            flush();
            term = WeylOp::constant(n, Rat(1));
            term_sign = sign;
            open = true;
        });
    flush();
    return total;
}

std::vector<WeylOp> parse_weyl_ops(std::string_view text, std::size_t n) {
    std::vector<WeylOp> out;
    for (auto part : split_list(text)) out.push_back(parse_weyl_op(part, n));
    return out;
}

Poly parse_poly(std::string_view text, const RingPtr& ring) {
    Lexer lex(text);
    Poly total(ring);
    Poly term(ring);
    int term_sign = 1;
    bool open = false;
    auto flush = [&]() {
        if (open) total += term.scaled(Rat(term_sign));
        open = false;
    };
    parse_expr(
        lex,
        [&](const Rat& c, const std::string& base, long index, int exp) {
            Poly factor(ring);
            if (base.empty()) {
                factor = Poly(ring, c);
            } else {
                std::string name = base == "x" ? "z" + std::to_string(index)
                                  : base == "t" ? std::string("t")
                                                : base + std::to_string(index);
                auto vi = ring->var_index(name);
                if (!vi) throw parse_error("variable '" + name + "' is not in the ring");
                MultiIndex e(ring->nvars(), 0);
                e[*vi] = exp;
                factor = Poly::monomial(ring, e);
            }
            term *= factor;
        },
        [&](int sign) {
            flush();
            term = Poly(ring, Rat(1));
            term_sign = sign;
            open = true;
        });
    flush();
    return total;
}

std::vector<Poly> parse_polys(std::string_view text, const RingPtr& ring) {
    std::vector<Poly> out;
    for (auto part : split_list(text)) out.push_back(parse_poly(part, ring));
    return out;
}

std::size_t scan_max_index(std::string_view text) {
    std::size_t best = 0;
    for (auto part : split_list(text)) {
        Lexer lex(part);
        while (lex.peek().type != Token::Type::end) {
            Token t = lex.take();
            if (t.type == Token::Type::var && t.index > 0)
                best = std::max(best, static_cast<std::size_t>(t.index));
        }
    }
    return best;
}

}  // namespace weylkit
