#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lext {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace lext
