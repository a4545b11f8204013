#include "riordan/exprlang.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace riordan {

namespace {

enum class Tok { Int, Word, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    int column;        // 1-based
    std::string text;  // Int digits or Word spelling
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Int, col, std::string(src.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Word, col, std::string(src.substr(start, i - start))});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(col, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, col, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, static_cast<int>(src.size()) + 1, ""});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End)
            throw ParseError(peek().column, "unexpected '" + peek().text + "'");
        return e;
    }

  private:
    const Token& peek(int ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    Token take() { return toks_[pos_++]; }

    Token expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError(peek().column, std::string("expected ") + what);
        return take();
    }

    static ExprPtr node(Expr::Kind kind, int column) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->column = column;
        return e;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = take();
            ExprPtr n = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub,
                             op.column);
            n->lhs = std::move(left);
            n->rhs = term();
            left = std::move(n);
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Token op = take();
            ExprPtr n = node(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div,
                             op.column);
            n->lhs = std::move(left);
            n->rhs = factor();
            left = std::move(n);
        }
        return left;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (peek().kind != Tok::Caret) return base;
        Token op = take();
        ExprPtr n = node(Expr::Kind::Pow, op.column);
        n->lhs = std::move(base);
        n->exponent = exponent();
        return n;
    }

    Rat exponent() {
        if (peek().kind == Tok::LParen) {
            take();
            Rat r = signed_ratlit();
            expect(Tok::RParen, "')' after exponent");
            return r;
        }
        return signed_ratlit();
    }

    Rat signed_ratlit() {
        bool negate = false;
        if (peek().kind == Tok::Minus) {
            take();
            negate = true;
        }
        Rat r = ratlit();
        return negate ? -r : r;
    }

    Rat ratlit() {
        Token num = expect(Tok::Int, "a number");
        mpz_class n(num.text, 10);
        // '/' followed by an integer continues the literal; anything else
        // leaves the slash for the expression level.
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
            take();
            Token den = take();
            mpz_class d(den.text, 10);
            if (sgn(d) == 0) throw ParseError(den.column, "zero denominator in literal");
            return Rat(n, d);
        }
        return Rat(n);
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                int col = t.column;
                Rat r = ratlit();
                ExprPtr n = node(Expr::Kind::Number, col);
                n->number = r;
                return n;
            }
            case Tok::Minus: {
                Token op = take();
                ExprPtr n = node(Expr::Kind::Neg, op.column);
                n->lhs = atom();
                return n;
            }
            case Tok::LParen: {
                take();
                ExprPtr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Word: {
                Token w = take();
                if (w.text == "x") return node(Expr::Kind::Var, w.column);
                for (auto name : builtin_names()) {
                    if (w.text == name) {
                        expect(Tok::LParen, "'(' after function name");
                        ExprPtr n = node(Expr::Kind::Call, w.column);
                        n->callee = w.text;
                        n->lhs = expr();
                        expect(Tok::RParen, "')'");
                        return n;
                    }
                }
                throw ParseError(w.column, "unknown name '" + w.text +
                                               "' (functions: sqrt, C, exp, log, rev)");
            }
            default:
                throw ParseError(t.column, "expected a number, 'x', '(' or a function");
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

const std::array<std::string_view, 5>& builtin_names() {
    static const std::array<std::string_view, 5> names{"sqrt", "C", "exp", "log", "rev"};
    return names;
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

namespace {

// Rethrow kernel domain errors with the position of the node that applied
// the failing operation.
template <typename F>
Series at_column(int column, F&& f) {
    try {
        return f();
    } catch (const EvalError&) {
        throw;
    } catch (const MathError& e) {
        throw EvalError(column, e.what());
    }
}

}  // namespace

Series eval(const Expr& e, int order) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return Series::constant(e.number, order);
        case Expr::Kind::Var:
            return Series::x(order);
        case Expr::Kind::Neg:
            return neg(eval(*e.lhs, order));
        case Expr::Kind::Add:
            return add(eval(*e.lhs, order), eval(*e.rhs, order));
        case Expr::Kind::Sub:
            return sub(eval(*e.lhs, order), eval(*e.rhs, order));
        case Expr::Kind::Mul:
            return mul(eval(*e.lhs, order), eval(*e.rhs, order));
        case Expr::Kind::Div: {
            Series a = eval(*e.lhs, order);
            Series b = eval(*e.rhs, order);
            return at_column(e.column, [&] { return div(a, b); });
        }
        case Expr::Kind::Pow: {
            Series base = eval(*e.lhs, order);
            return at_column(e.column, [&] {
                if (e.exponent.is_integer()) return pow_int(base, e.exponent.num_as_long());
                return pow_rat(base, e.exponent.num_as_long(), e.exponent.den_as_long());
            });
        }
        case Expr::Kind::Call: {
            Series arg = eval(*e.lhs, order);
            return at_column(e.column, [&]() -> Series {
                if (e.callee == "sqrt") return pow_rat(arg, 1, 2);
                if (e.callee == "exp") return exp_series(arg);
                if (e.callee == "log") return log_series(arg);
                if (e.callee == "rev") return revert(arg);
                // C: Catalan generating function composed with the argument.
                if (auto v = arg.valuation(); v && *v < 1)
                    throw CompositionError("C requires an argument with zero constant term");
                return compose(catalan_series(order), arg);
            });
        }
    }
    throw MathError("corrupt expression node");
}

Series eval_expr(std::string_view text, int order) {
    ExprPtr e = parse_expr(text);
    return eval(*e, order);
}

namespace {

// Binding strength for parenthesization: sums 1, products 2, minus/power 3,
// leaves 4.  A power base or negation operand must be a leaf to reparse into
// the same tree (the grammar makes '-' bind tighter than '^').
int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
            return 2;
        case Expr::Kind::Neg:
        case Expr::Kind::Pow:
            return 3;
        default:
            return 4;
    }
}

void print(const Expr& e, int min_prec, std::ostream& os);

void print_wrapped(const Expr& e, int min_prec, std::ostream& os) {
    if (precedence(e) < min_prec) {
        os << '(';
        print(e, 0, os);
        os << ')';
    } else {
        print(e, 0, os);
    }
}

void print(const Expr& e, int min_prec, std::ostream& os) {
    switch (e.kind) {
        case Expr::Kind::Number:
            os << e.number.str();
            return;
        case Expr::Kind::Var:
            os << 'x';
            return;
        case Expr::Kind::Neg:
            os << '-';
            print_wrapped(*e.lhs, 4, os);
            return;
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            print_wrapped(*e.lhs, 1, os);
            os << (e.kind == Expr::Kind::Add ? '+' : '-');
            print_wrapped(*e.rhs, 2, os);
            return;
        }
        case Expr::Kind::Mul:
        case Expr::Kind::Div: {
            print_wrapped(*e.lhs, 2, os);
            os << (e.kind == Expr::Kind::Mul ? '*' : '/');
            print_wrapped(*e.rhs, 3, os);
            return;
        }
        case Expr::Kind::Pow: {
            print_wrapped(*e.lhs, 4, os);
            os << '^';
            if (e.exponent.is_integer() && !e.exponent.is_negative()) {
                os << e.exponent.str();
            } else {
                os << '(' << e.exponent.str() << ')';
            }
            return;
        }
        case Expr::Kind::Call:
            os << e.callee << '(';
            print(*e.lhs, 0, os);
            os << ')';
            return;
    }
}

}  // namespace

std::string to_string(const Expr& e) {
    std::ostringstream os;
    print(e, 0, os);
    return os.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Number:
            return a.number == b.number;
        case Expr::Kind::Var:
            return true;
        case Expr::Kind::Neg:
            return expr_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Pow:
            return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Call:
            return a.callee == b.callee && expr_equal(*a.lhs, *b.lhs);
        default:
            return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

}  // namespace riordan
