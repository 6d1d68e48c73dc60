// Exact rational arithmetic: GMP's canonicalized fraction type.
#pragma once

#include <gmpxx.h>

#include <string>

namespace iuc {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational(long long num, long long den = 1) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

} // namespace iuc
