#pragma once

#include "nu/common.hpp"

#include <map>
#include <memory>
#include <string>

namespace nu {

// Integer expressions over named variables (the tables use `l` and `p`).
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?
//   atom  := integer | name | name '(' expr (',' expr)* ')' | '(' expr ')'
// Functions: binom(n, k), eps(m, n) = 1 iff m | n (eps(0, n) = [n == 0]).
// Division is exact rational division; callers that need an integer use
// eval_int, which rejects non-integral results.
class Expr {
public:
    struct Node;
    using Env = std::map<std::string, BigInt>;

    Expr() = default;
    static Expr parse(const std::string& text);

    Rational eval(const Env& env) const;
    BigInt eval_int(const Env& env) const;
    const std::string& text() const { return text_; }
    bool empty() const { return !root_; }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

// Convenience for the common (l, p) environment.
Expr::Env lp_env(long long l, long long p);

} // namespace nu
