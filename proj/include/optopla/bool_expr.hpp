#pragma once

// Boolean expression front-end. Grammar, precedence low to high:
//   or   := xor ('|' xor)*
//   xor  := and ('^' and)*
//   and  := not ('&' not)*
//   not  := '~' not | atom
//   atom := name | '0' | '1' | '(' or ')'
// Whitespace is ignored; positions in errors are 0-based byte offsets.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace optopla {

struct BoolExpr {
    enum class Kind { kVar, kConst, kNot, kAnd, kOr, kXor };

    Kind kind = Kind::kConst;
    int var_index = -1;        // kVar: index into the declared variable list
    std::string var_name;      // kVar
    bool value = false;        // kConst
    std::vector<BoolExpr> children;

    static BoolExpr var(int index, std::string name) {
        BoolExpr e;
        e.kind = Kind::kVar;
        e.var_index = index;
        e.var_name = std::move(name);
        return e;
    }
    static BoolExpr constant(bool v) {
        BoolExpr e;
        e.kind = Kind::kConst;
        e.value = v;
        return e;
    }
    static BoolExpr unary(Kind k, BoolExpr operand) {
        BoolExpr e;
        e.kind = k;
        e.children.push_back(std::move(operand));
        return e;
    }
    static BoolExpr binary(Kind k, BoolExpr lhs, BoolExpr rhs) {
        BoolExpr e;
        e.kind = k;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " +
                             message),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Evaluate under an assignment where bit i belongs to variable i of the
// declared list (operand i+1 of the PLA).
inline bool eval_expr(const BoolExpr& e, const std::vector<std::uint8_t>& assignment) {
    switch (e.kind) {
        case BoolExpr::Kind::kVar:
            return assignment.at(static_cast<std::size_t>(e.var_index)) != 0;
        case BoolExpr::Kind::kConst:
            return e.value;
        case BoolExpr::Kind::kNot:
            return !eval_expr(e.children[0], assignment);
        case BoolExpr::Kind::kAnd:
            return eval_expr(e.children[0], assignment) && eval_expr(e.children[1], assignment);
        case BoolExpr::Kind::kOr:
            return eval_expr(e.children[0], assignment) || eval_expr(e.children[1], assignment);
        case BoolExpr::Kind::kXor:
            return eval_expr(e.children[0], assignment) != eval_expr(e.children[1], assignment);
    }
    throw std::logic_error("eval_expr: bad node kind");
}

namespace detail {

class ExprParser {
  public:
    ExprParser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), variables_(variables) {}

    BoolExpr parse() {
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "empty expression");
        BoolExpr e = parse_or();
        skip_ws();
        if (!at_end())
            throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BoolExpr parse_or() {
        BoolExpr e = parse_xor();
        while (accept('|'))
            e = BoolExpr::binary(BoolExpr::Kind::kOr, std::move(e), parse_xor());
        return e;
    }

    BoolExpr parse_xor() {
        BoolExpr e = parse_and();
        while (accept('^'))
            e = BoolExpr::binary(BoolExpr::Kind::kXor, std::move(e), parse_and());
        return e;
    }

    BoolExpr parse_and() {
        BoolExpr e = parse_not();
        while (accept('&'))
            e = BoolExpr::binary(BoolExpr::Kind::kAnd, std::move(e), parse_not());
        return e;
    }

    BoolExpr parse_not() {
        if (accept('~'))
            return BoolExpr::unary(BoolExpr::Kind::kNot, parse_not());
        return parse_atom();
    }

    BoolExpr parse_atom() {
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "expected operand");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BoolExpr e = parse_or();
            skip_ws();
            if (!accept(')'))
                throw ParseError(pos_, "expected ')'");
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return BoolExpr::constant(c == '1');
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_name();
        throw ParseError(pos_, "expected operand");
    }

    BoolExpr parse_name() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        for (std::size_t i = 0; i < variables_.size(); ++i)
            if (variables_[i] == name)
                return BoolExpr::var(static_cast<int>(i), name);
        throw ParseError(start, "unknown variable '" + name + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline BoolExpr parse_expr(std::string_view text, const std::vector<std::string>& variables) {
    if (text.empty())
        throw ParseError(0, "empty expression");
    return detail::ExprParser(text, variables).parse();
}

}  // namespace optopla
