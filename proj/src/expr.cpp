#include "nu/expr.hpp"

#include <cctype>
#include <vector>

namespace nu {

struct Expr::Node {
    enum Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
    BigInt value;
    std::string name;
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;

NodeP make(Expr::Node::Kind k, std::vector<NodeP> kids, std::string name = {}, BigInt v = 0) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->kids = std::move(kids);
    n->name = std::move(name);
    n->value = std::move(v);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodeP parse_all() {
        NodeP n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error("ParseError", why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodeP expr() {
        NodeP left = term();
        for (;;) {
            if (eat('+')) left = make(Expr::Node::Add, {left, term()});
            else if (eat('-')) left = make(Expr::Node::Sub, {left, term()});
            else return left;
        }
    }

    NodeP term() {
        NodeP left = unary();
        for (;;) {
            if (eat('*')) left = make(Expr::Node::Mul, {left, unary()});
            else if (eat('/')) left = make(Expr::Node::Div, {left, unary()});
            else return left;
        }
    }

    NodeP unary() {
        if (eat('-')) return make(Expr::Node::Neg, {unary()});
        if (eat('+')) return unary();
        return power();
    }

    NodeP power() {
        NodeP base = atom();
        if (eat('^')) return make(Expr::Node::Pow, {base, unary()});
        return base;
    }

    NodeP atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodeP n = expr();
            if (!eat(')')) fail("missing ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return make(Expr::Node::Num, {}, {}, BigInt(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (eat('(')) {
                std::vector<NodeP> args{expr()};
                while (eat(',')) args.push_back(expr());
                if (!eat(')')) fail("missing ')' after arguments of " + name);
                if ((name == "binom" || name == "eps") && args.size() != 2) fail(name + " takes two arguments");
                if (name != "binom" && name != "eps") fail("unknown function " + name);
                return make(Expr::Node::Call, std::move(args), name);
            }
            return make(Expr::Node::Var, {}, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

BigInt as_integer(const Rational& r, const std::string& what) {
    if (denominator(r) != 1) throw Error("ParseError", what + " needs an integer argument");
    return numerator(r);
}

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt kk = k > n - k ? n - k : k;
    BigInt r = 1;
    for (BigInt i = 1; i <= kk; ++i) r = r * (n - kk + i) / i;
    return r;
}

Rational eval_node(const Expr::Node& n, const Expr::Env& env) {
    using K = Expr::Node;
    switch (n.kind) {
    case K::Num: return Rational(n.value);
    case K::Var: {
        auto it = env.find(n.name);
        if (it == env.end()) throw Error("ParseError", "unbound variable " + n.name);
        return Rational(it->second);
    }
    case K::Neg: return -eval_node(*n.kids[0], env);
    case K::Add: return eval_node(*n.kids[0], env) + eval_node(*n.kids[1], env);
    case K::Sub: return eval_node(*n.kids[0], env) - eval_node(*n.kids[1], env);
    case K::Mul: return eval_node(*n.kids[0], env) * eval_node(*n.kids[1], env);
    case K::Div: {
        Rational d = eval_node(*n.kids[1], env);
        if (d == 0) throw Error("ParseError", "division by zero");
        return eval_node(*n.kids[0], env) / d;
    }
    case K::Pow: {
        Rational b = eval_node(*n.kids[0], env);
        BigInt e = as_integer(eval_node(*n.kids[1], env), "^");
        if (e < 0) throw Error("ParseError", "negative exponent");
        Rational r = 1;
        for (BigInt i = 0; i < e; ++i) r *= b;
        return r;
    }
    case K::Call: {
        BigInt a = as_integer(eval_node(*n.kids[0], env), n.name);
        BigInt b = as_integer(eval_node(*n.kids[1], env), n.name);
        if (n.name == "binom") return Rational(binomial(a, b));
        if (a == 0) return Rational(b == 0 ? 1 : 0);
        BigInt m = a < 0 ? BigInt(-a) : a;
        return Rational(b % m == 0 ? 1 : 0);
    }
    }
    return 0;
}

} // namespace

Expr Expr::parse(const std::string& text) {
    Expr e;
    e.text_ = text;
    e.root_ = Parser(text).parse_all();
    return e;
}

Rational Expr::eval(const Env& env) const {
    if (!root_) throw Error("ParseError", "empty expression");
    return eval_node(*root_, env);
}

BigInt Expr::eval_int(const Env& env) const {
    Rational r = eval(env);
    if (denominator(r) != 1) throw Error("ParseError", "expression '" + text_ + "' is not integral here");
    return numerator(r);
}

Expr::Env lp_env(long long l, long long p) { return {{"l", BigInt(l)}, {"p", BigInt(p)}}; }

} // namespace nu
