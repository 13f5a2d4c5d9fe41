#include "nu/common.hpp"

#include <sstream>

namespace nu {

char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw Error("InvalidRank", "unknown family '" + s + "'");
}

std::string to_string(const FamilyRank& fr) {
    return std::string(1, family_letter(fr.family)) + std::to_string(fr.rank);
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Weight parse_weight(const std::string& s) {
    Weight w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw Error("NotDominant", "bad weight entry '" + item + "'");
        w.push_back(v);
    }
    return w;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace nu
