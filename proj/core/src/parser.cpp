#include "paralogic/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace paralogic {

namespace {

enum class token_kind : std::uint8_t {
    atom,
    falsum,
    tilde,
    ampersand,
    bar,
    arrow,
    lparen,
    rparen,
    comma,
    turnstile,
    end,
};

const char* describe(token_kind k) {
    switch (k) {
    case token_kind::atom: return "atom";
    case token_kind::falsum: return "'#'";
    case token_kind::tilde: return "'~'";
    case token_kind::ampersand: return "'&'";
    case token_kind::bar: return "'|'";
    case token_kind::arrow: return "'->'";
    case token_kind::lparen: return "'('";
    case token_kind::rparen: return "')'";
    case token_kind::comma: return "','";
    case token_kind::turnstile: return "'|-'";
    case token_kind::end: return "end of input";
    }
    return "?";
}

struct token {
    token_kind kind;
    std::string_view text;
    std::size_t offset;
};

bool atom_start(char c) { return c >= 'a' && c <= 'z'; }
bool atom_cont(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<token> tokenize(std::string_view text) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (atom_start(c)) {
            ++i;
            while (i < text.size() && atom_cont(text[i]))
                ++i;
            out.push_back({token_kind::atom, text.substr(start, i - start), start});
            continue;
        }
        switch (c) {
        case '#':
            out.push_back({token_kind::falsum, text.substr(start, 1), start});
            ++i;
            continue;
        case '~':
            out.push_back({token_kind::tilde, text.substr(start, 1), start});
            ++i;
            continue;
        case '&':
            out.push_back({token_kind::ampersand, text.substr(start, 1), start});
            ++i;
            continue;
        case '(':
            out.push_back({token_kind::lparen, text.substr(start, 1), start});
            ++i;
            continue;
        case ')':
            out.push_back({token_kind::rparen, text.substr(start, 1), start});
            ++i;
            continue;
        case ',':
            out.push_back({token_kind::comma, text.substr(start, 1), start});
            ++i;
            continue;
        case '|':
            if (i + 1 < text.size() && text[i + 1] == '-') {
                out.push_back({token_kind::turnstile, text.substr(start, 2), start});
                i += 2;
            } else {
                out.push_back({token_kind::bar, text.substr(start, 1), start});
                ++i;
            }
            continue;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                out.push_back({token_kind::arrow, text.substr(start, 2), start});
                i += 2;
                continue;
            }
            break;
        default:
            break;
        }
        throw parse_error("unknown token '" + std::string(1, c) +
                              "' at offset " + std::to_string(start),
                          start, {});
    }
    out.push_back({token_kind::end, text.substr(text.size(), 0), text.size()});
    return out;
}

class parser {
public:
    explicit parser(std::string_view text) : tokens_(tokenize(text)) {}

    formula parse_formula_all() {
        formula f = parse_impl();
        expect(token_kind::end);
        return f;
    }

    sequent parse_sequent_all() {
        std::vector<formula> left;
        if (peek().kind != token_kind::turnstile) {
            left.push_back(parse_impl());
            while (peek().kind == token_kind::comma) {
                advance();
                left.push_back(parse_impl());
            }
            if (peek().kind != token_kind::turnstile)
                fail({token_kind::comma, token_kind::turnstile});
        }
        advance(); // turnstile
        std::vector<formula> right;
        if (peek().kind != token_kind::end) {
            right.push_back(parse_impl());
            while (peek().kind == token_kind::comma) {
                advance();
                right.push_back(parse_impl());
            }
            if (peek().kind != token_kind::end)
                fail({token_kind::comma, token_kind::end});
        }
        return sequent(std::move(left), std::move(right));
    }

private:
    const token& peek() const { return tokens_[pos_]; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(std::vector<token_kind> wanted) const {
        const token& t = peek();
        std::string got = t.kind == token_kind::end
                              ? "end of input"
                              : "'" + std::string(t.text) + "'";
        std::string msg = "syntax error at offset " + std::to_string(t.offset) +
                          ": unexpected " + got + ", expected ";
        std::vector<std::string> expected;
        for (std::size_t i = 0; i < wanted.size(); ++i) {
            expected.emplace_back(describe(wanted[i]));
            if (i > 0)
                msg += i + 1 == wanted.size() ? " or " : ", ";
            msg += describe(wanted[i]);
        }
        throw parse_error(msg, t.offset, std::move(expected));
    }

    void expect(token_kind k) {
        if (peek().kind != k)
            fail({k});
        advance();
    }

    formula parse_impl() {
        formula lhs = parse_disj();
        if (peek().kind == token_kind::arrow) {
            advance();
            return formula::implication(std::move(lhs), parse_impl());
        }
        return lhs;
    }

    formula parse_disj() {
        formula acc = parse_conj();
        while (peek().kind == token_kind::bar) {
            advance();
            acc = formula::disjunction(std::move(acc), parse_conj());
        }
        return acc;
    }

    formula parse_conj() {
        formula acc = parse_neg();
        while (peek().kind == token_kind::ampersand) {
            advance();
            acc = formula::conjunction(std::move(acc), parse_neg());
        }
        return acc;
    }

    formula parse_neg() {
        if (peek().kind == token_kind::tilde) {
            advance();
            return formula::negation(parse_neg());
        }
        return parse_primary();
    }

    formula parse_primary() {
        const token& t = peek();
        switch (t.kind) {
        case token_kind::atom: {
            formula f = formula::atom(std::string(t.text));
            advance();
            return f;
        }
        case token_kind::falsum:
            advance();
            return formula::falsum();
        case token_kind::lparen: {
            advance();
            formula f = parse_impl();
            expect(token_kind::rparen);
            return f;
        }
        default:
            fail({token_kind::atom, token_kind::falsum, token_kind::tilde,
                  token_kind::lparen});
        }
    }

    std::vector<token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

formula parse_formula(std::string_view text) {
    return parser(text).parse_formula_all();
}

sequent parse_sequent(std::string_view text) {
    return parser(text).parse_sequent_all();
}

} // namespace paralogic
