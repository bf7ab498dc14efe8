#include "ratinterp/parser.hpp"

#include <cctype>

#include "ratinterp/errors.hpp"
#include "ratinterp/qseries.hpp"

namespace ratinterp {

namespace {

struct Token {
    enum class Kind { Number, Name, Punct, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        cur_.line = line_;
        cur_.column = col_;
        if (pos_ >= text_.size()) {
            cur_ = {Token::Kind::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++col_;
            }
            cur_ = {Token::Kind::Number, text_.substr(start, pos_ - start), cur_.line,
                    cur_.column};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            cur_ = {Token::Kind::Name, text_.substr(start, pos_ - start), cur_.line,
                    cur_.column};
            return;
        }
        static const std::string punct = "+-*/^(),";
        if (punct.find(c) != std::string::npos) {
            cur_ = {Token::Kind::Punct, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_{Token::Kind::End, "", 1, 1};
};

ExpressionAst make(ExprNode::Kind k, std::vector<ExpressionAst> args = {}) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExpressionAst parse() {
        ExpressionAst e = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw SyntaxError("trailing input '" + t.text + "'", t.line, t.column);
        return e;
    }

private:
    bool at_punct(const char* p) const {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }
    void expect_punct(const char* p) {
        if (!at_punct(p))
            throw SyntaxError(std::string("expected '") + p + "'", lex_.peek().line,
                              lex_.peek().column);
        lex_.take();
    }

    ExpressionAst parse_sum() {
        ExpressionAst e = parse_product();
        while (at_punct("+") || at_punct("-")) {
            bool plus = lex_.take().text == "+";
            ExpressionAst r = parse_product();
            e = make(plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, {e, r});
        }
        return e;
    }

    ExpressionAst parse_product() {
        ExpressionAst e = parse_factor();
        while (at_punct("*") || at_punct("/")) {
            bool times = lex_.take().text == "*";
            ExpressionAst r = parse_factor();
            e = make(times ? ExprNode::Kind::Mul : ExprNode::Kind::Div, {e, r});
        }
        return e;
    }

    ExpressionAst parse_factor() {
        if (at_punct("-")) {
            lex_.take();
            return make(ExprNode::Kind::Neg, {parse_factor()});
        }
        return parse_power();
    }

    ExpressionAst parse_power() {
        ExpressionAst base = parse_atom();
        if (!at_punct("^")) return base;
        lex_.take();
        int sign = 1;
        if (at_punct("-")) {
            lex_.take();
            sign = -1;
        }
        Token t = lex_.peek();
        if (t.kind != Token::Kind::Number)
            throw SyntaxError("expected integer exponent", t.line, t.column);
        lex_.take();
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Pow;
        n->exponent = sign * std::stoi(t.text);
        n->args = {base};
        return n;
    }

    ExpressionAst parse_atom() {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            lex_.take();
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Number;
            n->number = Rational(t.text);
            return n;
        }
        if (t.kind == Token::Kind::Name) {
            lex_.take();
            if (at_punct("(")) {
                if (t.text != "poch")
                    throw UnknownSymbol("unknown function '" + t.text + "'");
                lex_.take();
                std::vector<ExpressionAst> args;
                args.push_back(parse_sum());
                expect_punct(",");
                args.push_back(parse_sum());
                expect_punct(",");
                args.push_back(parse_sum());
                expect_punct(")");
                return make(ExprNode::Kind::Poch, std::move(args));
            }
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Symbol;
            n->symbol = t.text;
            return n;
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            lex_.take();
            ExpressionAst e = parse_sum();
            expect_punct(")");
            return e;
        }
        throw SyntaxError(t.kind == Token::Kind::End
                              ? "unexpected end of input"
                              : "unexpected token '" + t.text + "'",
                          t.line, t.column);
    }

    Lexer lex_;
};

int precedence(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub:
            return 1;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div:
            return 2;
        case ExprNode::Kind::Neg:
            return 3;
        case ExprNode::Kind::Pow:
            return 4;
        default:
            return 5;
    }
}

void print_node(const ExpressionAst& n, int min_prec, std::string& out) {
    int p = precedence(n->kind);
    bool parens = p < min_prec;
    if (parens) out += "(";
    switch (n->kind) {
        case ExprNode::Kind::Number:
            out += n->number.str();
            break;
        case ExprNode::Kind::Symbol:
            out += n->symbol;
            break;
        case ExprNode::Kind::Neg:
            out += "-";
            print_node(n->args[0], p, out);
            break;
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub:
            print_node(n->args[0], p, out);
            out += n->kind == ExprNode::Kind::Add ? "+" : "-";
            print_node(n->args[1], p + 1, out);
            break;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div:
            print_node(n->args[0], p, out);
            out += n->kind == ExprNode::Kind::Mul ? "*" : "/";
            print_node(n->args[1], p + 1, out);
            break;
        case ExprNode::Kind::Pow:
            print_node(n->args[0], p + 1, out);
            out += "^" + std::to_string(n->exponent);
            break;
        case ExprNode::Kind::Poch:
            out += "poch(";
            print_node(n->args[0], 0, out);
            out += ", ";
            print_node(n->args[1], 0, out);
            out += ", ";
            print_node(n->args[2], 0, out);
            out += ")";
            break;
    }
    if (parens) out += ")";
}

} // namespace

ExpressionAst parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expression(const ExpressionAst& ast) {
    std::string out;
    print_node(ast, 0, out);
    return out;
}

bool ast_equal(const ExpressionAst& a, const ExpressionAst& b) {
    if (a->kind != b->kind) return false;
    if (a->kind == ExprNode::Kind::Number) return a->number == b->number;
    if (a->kind == ExprNode::Kind::Symbol) return a->symbol == b->symbol;
    if (a->kind == ExprNode::Kind::Pow && a->exponent != b->exponent) return false;
    if (a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!ast_equal(a->args[i], b->args[i])) return false;
    return true;
}

Variable symbol_to_variable(const std::string& name) {
    if (name.size() >= 2 &&
        (name[0] == 'x' || name[0] == 'c' || name[0] == 'b')) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
        if (digits) {
            int idx = std::stoi(name.substr(1));
            if (idx < 1) throw IndexOutOfRange("family index must be >= 1: " + name);
            switch (name[0]) {
                case 'x':
                    return Variable::x(idx);
                case 'c':
                    return Variable::c(idx);
                default:
                    return Variable::b(idx);
            }
        }
    }
    return Variable::scalar(name);
}

namespace {

long integer_value(const ExpressionAst& n) {
    if (n->kind == ExprNode::Kind::Neg) return -integer_value(n->args[0]);
    if (n->kind != ExprNode::Kind::Number)
        throw SyntaxError("poch length must be an integer literal", 0, 0);
    const Rational& r = n->number;
    if (r.raw().get_den() != 1)
        throw SyntaxError("poch length must be an integer literal", 0, 0);
    if (!r.raw().get_num().fits_slong_p())
        throw SyntaxError("poch length out of range", 0, 0);
    return r.raw().get_num().get_si();
}

} // namespace

RatFun ast_to_ratfun(const ExpressionAst& ast) {
    switch (ast->kind) {
        case ExprNode::Kind::Number:
            return RatFun::constant(ast->number);
        case ExprNode::Kind::Symbol:
            return RatFun::variable(symbol_to_variable(ast->symbol));
        case ExprNode::Kind::Neg:
            return -ast_to_ratfun(ast->args[0]);
        case ExprNode::Kind::Add:
            return ast_to_ratfun(ast->args[0]) + ast_to_ratfun(ast->args[1]);
        case ExprNode::Kind::Sub:
            return ast_to_ratfun(ast->args[0]) - ast_to_ratfun(ast->args[1]);
        case ExprNode::Kind::Mul:
            return ast_to_ratfun(ast->args[0]) * ast_to_ratfun(ast->args[1]);
        case ExprNode::Kind::Div:
            return ast_to_ratfun(ast->args[0]) / ast_to_ratfun(ast->args[1]);
        case ExprNode::Kind::Pow:
            return ast_to_ratfun(ast->args[0]).pow(ast->exponent);
        case ExprNode::Kind::Poch: {
            if (ast->args[1]->kind != ExprNode::Kind::Symbol)
                throw SyntaxError("poch base variable must be a symbol", 0, 0);
            Variable q = symbol_to_variable(ast->args[1]->symbol);
            long n = integer_value(ast->args[2]);
            return pochhammer(ast_to_ratfun(ast->args[0]), q, static_cast<int>(n));
        }
    }
    throw SyntaxError("malformed expression tree", 0, 0);
}

} // namespace ratinterp
