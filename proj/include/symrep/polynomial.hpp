#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "symrep/types.hpp"

namespace symrep {

// Homogeneous polynomial with exact rational coefficients, stored sparsely as
// exponent vector -> coefficient. Zero coefficients are never stored.
class Polynomial {
  public:
    Polynomial(int n, int degree);

    int n() const { return n_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // exponents must have size n and total degree equal to degree().
    void add_term(const std::vector<int>& exponents, const Rat& coeff);
    Rat coefficient(const std::vector<int>& exponents) const;

    Polynomial operator*(const Rat& scalar) const;
    Polynomial operator+(const Polynomial& other) const;

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const;  // one term per line, "coeff * x1^a1 ..."

  private:
    int n_;
    int degree_;
    std::map<std::vector<int>, Rat> terms_;
};

// sigma lists 0-based images: variable i becomes variable sigma[i].
Polynomial permute(const std::vector<int>& sigma, const Polynomial& f);

// Text form: one term per line, `coeff * x1^a1 x2^a2 ...`, rational
// coefficients like -3/2, '#' comments and blank lines skipped. Variables
// with exponent zero may be omitted. Terms of equal monomial accumulate.
Polynomial parse_polynomial(const std::string& text, int n);

// Each line of the file is a term of one polynomial; polynomials are
// separated by lines holding just ";".
std::vector<Polynomial> parse_polynomial_list(std::istream& in, int n);

}  // namespace symrep
