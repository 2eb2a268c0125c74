#include "fmgl/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fmgl/csv.hpp"
#include "fmgl/errors.hpp"

namespace fmgl::expr {

namespace {

const char* kFunctions[] = {"sin", "cos", "exp", "ln", "sqrt", "abs"};

bool is_function_name(const std::string& name) {
    for (const char* fn : kFunctions) {
        if (name == fn) {
            return true;
        }
    }
    return false;
}

std::shared_ptr<Node> make(NodeKind kind, Span span) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->span = span;
    return node;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr run() {
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) {
            fail(pos_, "end of input or operator");
        }
        return root;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::size_t at, const std::string& expected) {
        std::ostringstream msg;
        msg << "syntax error at offset " << at << ": expected " << expected;
        throw ParseError(msg.str(), at, expected);
    }

    [[noreturn]] void fail_unknown(std::size_t at, const std::string& name) {
        std::ostringstream msg;
        msg << "unknown identifier '" << name << "' at offset " << at;
        throw ParseError(msg.str(), at, "t, pi, or a function name");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expr := term (('+'|'-') term)*
    NodePtr parse_expr() {
        NodePtr left = parse_term();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                const char op = src_[pos_++];
                NodePtr right = parse_term();
                auto node = make(NodeKind::Binary, {left->span.begin, right->span.end});
                node->op = op;
                node->children = {left, right};
                left = node;
            } else {
                return left;
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    NodePtr parse_term() {
        NodePtr left = parse_factor();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '*' || src_[pos_] == '/')) {
                const char op = src_[pos_++];
                NodePtr right = parse_factor();
                auto node = make(NodeKind::Binary, {left->span.begin, right->span.end});
                node->op = op;
                node->children = {left, right};
                left = node;
            } else {
                return left;
            }
        }
    }

    // factor := unary ('^' factor)?   -- right-associative
    NodePtr parse_factor() {
        NodePtr base = parse_unary();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            NodePtr exponent = parse_factor();
            auto node = make(NodeKind::Binary, {base->span.begin, exponent->span.end});
            node->op = '^';
            node->children = {base, exponent};
            return node;
        }
        return base;
    }

    // unary := '-'? atom
    NodePtr parse_unary() {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '-') {
            const std::size_t begin = pos_++;
            NodePtr child = parse_atom();
            auto node = make(NodeKind::Unary, {begin, child->span.end});
            node->op = '-';
            node->children = {child};
            return node;
        }
        return parse_atom();
    }

    // atom := number | 't' | 'pi' | fn '(' expr ')' | '(' expr ')'
    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) {
            fail(pos_, "number, 't', 'pi', function call, or '('");
        }
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            skip_ws();
            if (!consume(')')) {
                fail(pos_, "')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_identifier();
        }
        fail(pos_, "number, 't', 'pi', function call, or '('");
    }

    NodePtr parse_number() {
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
            ++pos_;
        }
        // optional exponent, only when followed by digits
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t probe = pos_ + 1;
            if (probe < src_.size() && (src_[probe] == '+' || src_[probe] == '-')) {
                ++probe;
            }
            if (probe < src_.size() && std::isdigit(static_cast<unsigned char>(src_[probe]))) {
                pos_ = probe;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    ++pos_;
                }
            }
        }
        double value = 0.0;
        const auto result = std::from_chars(src_.data() + begin, src_.data() + pos_, value);
        if (result.ec != std::errc() || result.ptr != src_.data() + pos_) {
            fail(begin, "a number");
        }
        auto node = make(NodeKind::Number, {begin, pos_});
        node->number = value;
        return node;
    }

    NodePtr parse_identifier() {
        const std::size_t begin = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name = src_.substr(begin, pos_ - begin);
        if (name == "t") {
            return make(NodeKind::Variable, {begin, pos_});
        }
        if (name == "pi") {
            auto node = make(NodeKind::Constant, {begin, pos_});
            node->name = "pi";
            return node;
        }
        if (is_function_name(name)) {
            skip_ws();
            if (!consume('(')) {
                fail(pos_, "'(' after function name");
            }
            NodePtr arg = parse_expr();
            skip_ws();
            if (!consume(')')) {
                fail(pos_, "')'");
            }
            auto node = make(NodeKind::Call, {begin, pos_});
            node->name = name;
            node->children = {arg};
            return node;
        }
        fail_unknown(begin, name);
    }
};

}  // namespace

NodePtr parse(const std::string& src) {
    if (src.empty()) {
        throw ParseError("empty expression", 0, "an expression");
    }
    return Parser(src).run();
}

double eval(const Node& node, double t) {
    switch (node.kind) {
    case NodeKind::Number:
        return node.number;
    case NodeKind::Variable:
        return t;
    case NodeKind::Constant:
        return 3.141592653589793238462643383279502884;
    case NodeKind::Unary:
        return -eval(*node.children[0], t);
    case NodeKind::Binary: {
        const double a = eval(*node.children[0], t);
        const double b = eval(*node.children[1], t);
        switch (node.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
        }
        break;
    }
    case NodeKind::Call: {
        const double a = eval(*node.children[0], t);
        if (node.name == "sin") return std::sin(a);
        if (node.name == "cos") return std::cos(a);
        if (node.name == "exp") return std::exp(a);
        if (node.name == "abs") return std::fabs(a);
        if (node.name == "ln") {
            if (!(a > 0.0)) {
                std::ostringstream msg;
                msg << "ln of non-positive value " << a;
                throw DomainError(msg.str());
            }
            return std::log(a);
        }
        if (node.name == "sqrt") {
            if (a < 0.0) {
                std::ostringstream msg;
                msg << "sqrt of negative value " << a;
                throw DomainError(msg.str());
            }
            return std::sqrt(a);
        }
        break;
    }
    }
    throw std::logic_error("expr::eval: malformed node");
}

std::string pretty_print(const Node& node) {
    switch (node.kind) {
    case NodeKind::Number:
        return format_double(node.number);
    case NodeKind::Variable:
        return "t";
    case NodeKind::Constant:
        return node.name;
    case NodeKind::Unary:
        return "(-" + pretty_print(*node.children[0]) + ")";
    case NodeKind::Binary:
        return "(" + pretty_print(*node.children[0]) + node.op +
               pretty_print(*node.children[1]) + ")";
    case NodeKind::Call:
        return node.name + "(" + pretty_print(*node.children[0]) + ")";
    }
    throw std::logic_error("expr::pretty_print: malformed node");
}

bool equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.op != b.op || a.name != b.name ||
        a.children.size() != b.children.size()) {
        return false;
    }
    if (a.kind == NodeKind::Number &&
        !(a.number == b.number || (std::isnan(a.number) && std::isnan(b.number)))) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!equal(*a.children[i], *b.children[i])) {
            return false;
        }
    }
    return true;
}

} // namespace fmgl::expr
