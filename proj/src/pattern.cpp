#include "nu/pattern.hpp"

#include <cctype>
#include <cstdlib>

namespace nu {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_trim(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string data_dir() {
    if (const char* env = std::getenv("NU_CATALOG_DIR"); env && *env) return env;
    return NU_DEFAULT_DATA_DIR;
}

namespace {

int to_int(const std::string& s, const std::string& context) {
    if (s.empty()) throw Error("ParseError", "empty number in " + context);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("ParseError", "bad number '" + s + "' in " + context);
    return std::stoi(s);
}

} // namespace

RankRange RankRange::parse(const std::string& s) {
    RankRange r;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = to_int(s, "rank range");
    } else {
        r.lo = to_int(s.substr(0, dots), "rank range");
        std::string rest = s.substr(dots + 2);
        r.hi = rest.empty() ? -1 : to_int(rest, "rank range");
    }
    return r;
}

std::string RankRange::text() const {
    if (lo == hi) return std::to_string(lo);
    return std::to_string(lo) + ".." + (hi < 0 ? "" : std::to_string(hi));
}

CharCondition CharCondition::parse(const std::string& s) {
    CharCondition c;
    if (s == "all") return c;
    std::string list;
    if (s.rfind("p!=", 0) == 0) {
        c.kind = NotEqual;
        list = s.substr(3);
    } else if (s.rfind("p=", 0) == 0) {
        c.kind = Equal;
        list = s.substr(2);
    } else {
        throw Error("ParseError", "bad characteristic condition '" + s + "'");
    }
    for (const auto& piece : split_trim(list, ',')) c.primes.push_back(to_int(piece, "characteristic condition"));
    return c;
}

bool CharCondition::matches(int p) const {
    bool listed = false;
    for (int q : primes) listed = listed || q == p;
    switch (kind) {
    case All: return true;
    case Equal: return listed;
    case NotEqual: return !listed;
    }
    return false;
}

std::string CharCondition::text() const {
    if (kind == All) return "all";
    std::string out = kind == Equal ? "p=" : "p!=";
    for (size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + std::to_string(primes[i]);
    return out;
}

WeightPattern WeightPattern::parse(const std::string& s) {
    WeightPattern w;
    w.text_ = s;
    if (s == "0") return w;
    size_t i = 0;
    auto fail = [&](const std::string& why) { throw Error("ParseError", "weight pattern '" + s + "': " + why); };
    while (i < s.size()) {
        int coef = 0;
        bool has_coef = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = coef * 10 + (s[i++] - '0');
            has_coef = true;
        }
        if (!has_coef) coef = 1;
        if (i >= s.size() || s[i] != 'w') fail("expected 'w'");
        ++i;
        Term t{coef, 0, 0};
        auto read_affine = [&](size_t end) {
            std::string body = s.substr(i, end - i);
            if (body == "l") {
                t.l_coef = 1;
            } else if (body.rfind("l-", 0) == 0) {
                t.l_coef = 1;
                t.offset = -to_int(body.substr(2), "weight pattern");
            } else {
                t.offset = to_int(body, "weight pattern");
            }
        };
        if (i < s.size() && s[i] == '(') {
            size_t close = s.find(')', i);
            if (close == std::string::npos) fail("unclosed parenthesis");
            ++i;
            read_affine(close);
            i = close + 1;
        } else {
            size_t end = i;
            while (end < s.size() && s[end] != '+') ++end;
            read_affine(end);
            i = end;
        }
        w.terms_.push_back(t);
        if (i < s.size()) {
            if (s[i] != '+') fail("expected '+'");
            ++i;
        }
    }
    return w;
}

std::optional<Weight> WeightPattern::at(int l) const {
    Weight w(l, 0);
    for (const auto& t : terms_) {
        int idx = t.l_coef * l + t.offset;
        if (idx < 1 || idx > l) return std::nullopt;
        w[idx - 1] += t.coef;
    }
    return w;
}

} // namespace nu
