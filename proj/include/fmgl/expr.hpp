#pragma once

#include <memory>
#include <string>
#include <vector>

namespace fmgl::expr {

/// Byte range of a node in the original source, for error reporting.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class NodeKind { Number, Variable, Constant, Unary, Binary, Call };

/// One node of the parsed expression tree. Grammar (single variable t):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?            -- '^' right-associative
///   unary  := '-'? atom
///   atom   := number | 't' | 'pi' | fn '(' expr ')' | '(' expr ')'
///   fn     := sin | cos | exp | ln | sqrt | abs
struct Node {
    NodeKind kind;
    Span span;
    double number = 0.0;     // Number
    char op = 0;             // Unary ('-') / Binary ('+','-','*','/','^')
    std::string name;        // Constant ("pi") / Call function name
    std::vector<std::shared_ptr<const Node>> children;
};

using NodePtr = std::shared_ptr<const Node>;

/// Parse src; throws ParseError with byte offset and expected-token set.
NodePtr parse(const std::string& src);

/// Evaluate at t. Throws DomainError for ln of a non-positive number or
/// sqrt of a negative one; division follows IEEE semantics.
double eval(const Node& node, double t);

/// Canonical fully parenthesized rendering; parse(pretty_print(n)) yields
/// a structurally identical tree.
std::string pretty_print(const Node& node);

/// Structural equality, ignoring spans.
bool equal(const Node& a, const Node& b);

} // namespace fmgl::expr
