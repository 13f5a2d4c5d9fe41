#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace nu {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coordinates over the fundamental weights omega_1..omega_l.
using Weight = std::vector<int>;
// Coordinates over the simple roots alpha_1..alpha_l.
using RootVector = std::vector<int>;

// Every failure carries a short machine-readable kind ("InvalidRank",
// "NotDominant", ...) next to the human readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

enum class Family { A, B, C, D };

struct FamilyRank {
    Family family;
    int rank;

    bool operator==(const FamilyRank&) const = default;
};

char family_letter(Family f);
Family parse_family(const std::string& s);
std::string to_string(const FamilyRank& fr);
std::string weight_to_string(const Weight& w);
// "0,1,2" -> {0,1,2}
Weight parse_weight(const std::string& s);

// epsilon_m(n) = 1 iff m divides n. With m = 0 (characteristic zero) only
// n = 0 is divisible.
inline int epsilon(long long m, long long n) {
    if (m == 0) return n == 0 ? 1 : 0;
    return n % m == 0 ? 1 : 0;
}

bool is_prime(long long n);

} // namespace nu
