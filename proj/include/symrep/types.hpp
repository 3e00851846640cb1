#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symrep {

// All counts and dimensions are arbitrary-precision: n! and hook products
// overflow 64 bits long before the ranges we verify.
using Int = mpz_class;
using Rat = mpq_class;

// Bad arguments from a caller (CLI exit code 2).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured enumeration/size cap was exceeded (CLI exit code 3).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on n for tableau enumeration and character tables.
inline constexpr int kDefaultEnumCap = 10;
// Default cap on the number of variables for orbit-span analysis.
inline constexpr int kDefaultVarCap = 8;

inline Int factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

// ceil(a/b) for a >= 0, b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace symrep
