#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulipt/rational.hpp"

namespace paulipt {

struct ConstantPolynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Univariate polynomial with exact complex-rational coefficients.
/// coeff(j) is the coefficient of z^j. The zero polynomial has no stored
/// coefficients and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<CRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(CRat c) { return UniPoly{{std::move(c)}}; }
    static UniPoly monomial(int j, CRat c = CRat{1}) {
        std::vector<CRat> v(static_cast<size_t>(j) + 1);
        v.back() = std::move(c);
        return UniPoly{std::move(v)};
    }
    /// Convenience: integer coefficients, lowest degree first.
    static UniPoly from_ints(std::initializer_list<long> cs) {
        std::vector<CRat> v;
        for (long c : cs) v.emplace_back(c);
        return UniPoly{std::move(v)};
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const CRat& coeff(int j) const {
        static const CRat kZero{};
        if (j < 0 || j > degree()) return kZero;
        return coeffs_[static_cast<size_t>(j)];
    }
    const std::vector<CRat>& coeffs() const { return coeffs_; }

    bool has_real_coeffs() const {
        for (const auto& c : coeffs_)
            if (c.im != 0) return false;
        return true;
    }
    /// True when only even powers of z carry nonzero coefficients.
    bool is_even() const {
        for (size_t j = 1; j < coeffs_.size(); j += 2)
            if (!coeffs_[j].is_zero()) return false;
        return true;
    }

    std::complex<double> eval(std::complex<double> z) const;

    std::string to_string(const std::string& var = "z") const;

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.coeffs_ == q.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<CRat> coeffs_;
};

UniPoly derivative(const UniPoly& p);
UniPoly scale(const UniPoly& p, const CRat& c);

/// Upper bound R = 1 + max|a_j|/|a_n| on root magnitudes.
double cauchy_bound(const UniPoly& p);

struct Root {
    std::complex<double> location;
    int multiplicity = 1;
    double residual = 0.0;
};

struct RootSet {
    std::vector<Root> roots;
    int total_multiplicity = 0;
};

/// All complex roots of p, counted with multiplicity. Multiplicities come
/// from exact square-free (Yun) decomposition; locations from Aberth-Ehrlich
/// iteration on each square-free factor.
RootSet find_roots(const UniPoly& p);

/// Exact monic gcd over the complex rationals.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Yun decomposition: returns factors f_i with p ~ prod f_i^i (up to a
/// constant); entry i of the result holds the multiplicity-(i+1) factor.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

inline constexpr double kResidualTol = 1e-10;
inline constexpr double kClusterEps = 1e-8;
inline constexpr int kIterationBudget = 200;

}  // namespace paulipt
