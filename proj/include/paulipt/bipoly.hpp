#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paulipt/pauli_poly.hpp"
#include "paulipt/rational.hpp"

namespace paulipt {

/// Sparse bivariate polynomial sum a_ij x^i y^j with exact rational
/// coefficients. Zero coefficients are never stored.
class BiPoly {
public:
    using Terms = std::map<std::pair<int, int>, Rational>;

    BiPoly() = default;
    explicit BiPoly(Terms terms);

    static BiPoly constant(Rational c);
    static BiPoly term(int i, int j, Rational c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair{0, 0});
    }
    Rational coeff(int i, int j) const;
    int total_degree() const;

    double eval(double x, double y) const;

    std::string to_string() const;

    friend BiPoly operator+(const BiPoly& f, const BiPoly& g);
    friend BiPoly operator-(const BiPoly& f, const BiPoly& g);
    friend BiPoly operator-(const BiPoly& f);
    friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
    friend bool operator==(const BiPoly& f, const BiPoly& g) { return f.terms_ == g.terms_; }

private:
    void prune();
    Terms terms_;
};

std::pair<BiPoly, BiPoly> partials(const BiPoly& f);

/// Exact split p(x+iy) = re(x,y) + i*im(x,y).
std::pair<BiPoly, BiPoly> expand_re_im(const UniPoly& p);

/// s(x,y) = Im g(x+iy) / 2, h(x,y) = Re g(x+iy), with g = c1^2+c2^2+c3^2.
BiPoly s_field(const PauliPoly& p);
BiPoly h_field(const PauliPoly& p);

/// Real and imaginary parts of the half-trace c0(x+iy).
std::pair<BiPoly, BiPoly> trace_fields(const PauliPoly& p);

/// Flattened double-precision copy for tight evaluation loops.
class BiPolyD {
public:
    explicit BiPolyD(const BiPoly& f);
    double eval(double x, double y) const;

private:
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms_;
    int max_i_ = 0, max_j_ = 0;
};

}  // namespace paulipt
