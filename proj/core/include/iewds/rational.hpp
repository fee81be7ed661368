#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace iewds {

using Rational = boost::rational<std::int64_t>;

// One exact payoff per player, player 1 first.
using PayoffVector = std::vector<Rational>;

// Accepts "7", "-3", "5/2", "-1/4". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// "3" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

// "(1,0)", "(5/2,-1)".
std::string to_string(const PayoffVector& payoffs);

}  // namespace iewds
