#include "symrep/polynomial.hpp"

#include <istream>
#include <numeric>
#include <sstream>

namespace symrep {

Polynomial::Polynomial(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1) throw InputError("need at least one variable");
    if (degree < 0) throw InputError("degree must be nonnegative");
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rat& coeff) {
    if (static_cast<int>(exponents.size()) != n_)
        throw InputError("exponent vector must have one entry per variable");
    int total = 0;
    for (int e : exponents) {
        if (e < 0) throw InputError("exponents must be nonnegative");
        total += e;
    }
    if (total != degree_)
        throw InputError("term of degree " + std::to_string(total) +
                         " in a polynomial of degree " + std::to_string(degree_));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Polynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::operator*(const Rat& scalar) const {
    Polynomial out(n_, degree_);
    if (scalar == 0) return out;
    for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, c * scalar);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (n_ != other.n_ || degree_ != other.degree_)
        throw InputError("cannot add polynomials of different arity or degree");
    Polynomial out = *this;
    for (const auto& [exp, c] : other.terms_) out.add_term(exp, c);
    return out;
}

std::string Polynomial::to_string() const {
    std::ostringstream os;
    for (const auto& [exp, c] : terms_) {
        os << c.get_str() << " *";
        bool any = false;
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > 0) {
                os << " x" << (i + 1) << '^' << exp[i];
                any = true;
            }
        if (!any) os << " 1";
        os << '\n';
    }
    return os.str();
}

Polynomial permute(const std::vector<int>& sigma, const Polynomial& f) {
    if (static_cast<int>(sigma.size()) != f.n())
        throw InputError("permutation must cover every variable");
    std::vector<bool> seen(sigma.size(), false);
    for (int img : sigma) {
        if (img < 0 || img >= static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(img)])
            throw InputError("not a permutation of the variables");
        seen[static_cast<std::size_t>(img)] = true;
    }
    Polynomial out(f.n(), f.degree());
    for (const auto& [exp, c] : f.terms()) {
        std::vector<int> moved(exp.size(), 0);
        for (std::size_t i = 0; i < exp.size(); ++i)
            moved[static_cast<std::size_t>(sigma[i])] = exp[i];
        out.add_term(moved, c);
    }
    return out;
}

namespace {

Rat parse_rational(const std::string& tok) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), tok.c_str(), 10) != 0)
        throw InputError("not a rational number: '" + tok + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw InputError("zero denominator in '" + tok + "'");
    r.canonicalize();
    return r;
}

// "x3^2" -> (2, 2); bare "x3" -> (2, 1); "1" -> std::nullopt-like (-1, 0).
std::pair<int, int> parse_power(const std::string& tok, int n) {
    if (tok == "1") return {-1, 0};
    if (tok.size() < 2 || tok[0] != 'x')
        throw InputError("expected a power like x2^3, got '" + tok + "'");
    std::size_t caret = tok.find('^');
    std::string idx_s = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int idx = 0, exp = 1;
    try {
        idx = std::stoi(idx_s);
        if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
        throw InputError("expected a power like x2^3, got '" + tok + "'");
    }
    if (idx < 1 || idx > n)
        throw InputError("variable index out of range in '" + tok + "'");
    if (exp < 0) throw InputError("negative exponent in '" + tok + "'");
    return {idx - 1, exp};
}

struct RawTerm {
    Rat coeff;
    std::vector<int> exponents;
};

RawTerm parse_term_line(const std::string& line, int n) {
    std::istringstream in(line);
    std::string coeff_tok, star;
    if (!(in >> coeff_tok >> star) || star != "*")
        throw InputError("term line must look like 'coeff * x1^a1 ...': '" + line + "'");
    RawTerm term{parse_rational(coeff_tok), std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::string tok;
    while (in >> tok) {
        auto [idx, exp] = parse_power(tok, n);
        if (idx >= 0) term.exponents[static_cast<std::size_t>(idx)] += exp;
    }
    return term;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    std::vector<RawTerm> terms;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        terms.push_back(parse_term_line(line, n));
    }
    if (terms.empty()) throw InputError("polynomial has no terms");
    int degree = std::accumulate(terms.front().exponents.begin(),
                                 terms.front().exponents.end(), 0);
    Polynomial out(n, degree);
    for (const auto& t : terms) out.add_term(t.exponents, t.coeff);
    return out;
}

std::vector<Polynomial> parse_polynomial_list(std::istream& in, int n) {
    std::vector<Polynomial> out;
    std::string chunk, line;
    auto flush = [&] {
        if (chunk.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(parse_polynomial(chunk, n));
        chunk.clear();
    };
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start != std::string::npos && line[start] == ';') {
            flush();
            continue;
        }
        chunk += line;
        chunk += '\n';
    }
    flush();
    return out;
}

}  // namespace symrep
