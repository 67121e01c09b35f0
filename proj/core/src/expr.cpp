#include "modo/expr.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "modo/errors.hpp"

namespace modo {

namespace {

struct Token {
    enum class Kind { Integer, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    Kind kind;
    std::size_t offset;
    mpz_class value;  // Integer only
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Integer: return "integer";
        case Token::Kind::Variable: return "'x'";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::Integer, start,
                           mpz_class(std::string(src.substr(start, i - start)), 10)});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case 'x': kind = Token::Kind::Variable; break;
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i,
                                 {"integer", "'x'", "an operator", "'('", "')'"});
        }
        out.push_back({kind, i, 0});
        ++i;
    }
    out.push_back({Token::Kind::End, src.size(), 0});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    std::unique_ptr<Expr> parse() {
        auto e = parse_expr();
        expect(Token::Kind::End, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    void expect(Token::Kind k, std::vector<std::string> expected) {
        if (peek().kind != k)
            throw ParseError(std::string("unexpected ") + token_name(peek().kind),
                             peek().offset, std::move(expected));
        ++pos_;
    }

    static std::unique_ptr<Expr> make(Expr::Kind kind, std::size_t offset) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->offset = offset;
        return e;
    }

    std::unique_ptr<Expr> parse_expr() {
        std::unique_ptr<Expr> lhs;
        if (peek().kind == Token::Kind::Minus) {
            std::size_t offset = next().offset;
            auto node = make(Expr::Kind::Negate, offset);
            node->lhs = parse_term();
            lhs = std::move(node);
        } else {
            accept(Token::Kind::Plus);
            lhs = parse_term();
        }
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            Token op = next();
            auto node = make(op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Subtract,
                             op.offset);
            node->lhs = std::move(lhs);
            node->rhs = parse_term();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_term() {
        auto lhs = parse_factor();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            Token op = next();
            auto node = make(
                op.kind == Token::Kind::Star ? Expr::Kind::Multiply : Expr::Kind::Divide,
                op.offset);
            node->lhs = std::move(lhs);
            node->rhs = parse_factor();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_factor() {
        auto base = parse_base();
        if (peek().kind != Token::Kind::Caret) return base;
        next();
        if (peek().kind != Token::Kind::Integer)
            throw ParseError(std::string("unexpected ") + token_name(peek().kind),
                             peek().offset, {"non-negative integer exponent"});
        Token exp = next();
        if (!exp.value.fits_ulong_p())
            throw SemanticError("exponent is too large");
        auto node = make(Expr::Kind::Power, exp.offset);
        node->exponent = exp.value.get_ui();
        node->lhs = std::move(base);
        return node;
    }

    std::unique_ptr<Expr> parse_base() {
        switch (peek().kind) {
            case Token::Kind::Integer: {
                Token t = next();
                auto node = make(Expr::Kind::Integer, t.offset);
                node->value = std::move(t.value);
                return node;
            }
            case Token::Kind::Variable: {
                Token t = next();
                return make(Expr::Kind::Variable, t.offset);
            }
            case Token::Kind::LParen: {
                next();
                auto inner = parse_expr();
                expect(Token::Kind::RParen, {"')'"});
                return inner;
            }
            default:
                throw ParseError(std::string("unexpected ") + token_name(peek().kind),
                                 peek().offset, {"integer", "'x'", "'('"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view source) {
    return Parser(source).parse();
}

RationalFunction lower_expression(const Expr& ast) {
    switch (ast.kind) {
        case Expr::Kind::Integer: return RationalFunction(Rational(ast.value));
        case Expr::Kind::Variable: return RationalFunction::variable();
        case Expr::Kind::Add: return lower_expression(*ast.lhs) + lower_expression(*ast.rhs);
        case Expr::Kind::Subtract:
            return lower_expression(*ast.lhs) - lower_expression(*ast.rhs);
        case Expr::Kind::Multiply:
            return lower_expression(*ast.lhs) * lower_expression(*ast.rhs);
        case Expr::Kind::Divide: {
            RationalFunction num = lower_expression(*ast.lhs);
            RationalFunction den = lower_expression(*ast.rhs);
            if (den.is_zero()) {
                std::ostringstream os;
                os << "division by the zero rational function (byte " << ast.offset << ")";
                throw SemanticError(os.str());
            }
            return num / den;
        }
        case Expr::Kind::Power: return lower_expression(*ast.lhs).pow(ast.exponent);
        case Expr::Kind::Negate: return -lower_expression(*ast.lhs);
    }
    throw Error("internal: unknown expression node");
}

RationalFunction parse_rational_function(std::string_view source) {
    return lower_expression(*parse_expression(source));
}

}  // namespace modo
