#include "paulipt/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace paulipt {

Rational rational_from_decimal(const std::string& s) {
    std::string t = s;
    bool neg = false;
    size_t pos = 0;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        neg = (t[pos] == '-');
        ++pos;
    }
    std::string intpart, fracpart;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) intpart += t[pos++];
    if (pos < t.size() && t[pos] == '.') {
        ++pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) fracpart += t[pos++];
    }
    if (pos != t.size() || (intpart.empty() && fracpart.empty()))
        throw std::invalid_argument("bad decimal literal: '" + s + "'");
    mpz_class num(intpart.empty() ? "0" : intpart);
    if (!fracpart.empty()) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fracpart.size());
        num = num * scale + mpz_class(fracpart);
        Rational r(num, scale);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    Rational r(num);
    return neg ? Rational(-r) : r;
}

std::complex<double> UniPoly::eval(std::complex<double> z) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + it->to_complex();
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= degree(); ++j) {
        const CRat& c = coeff(j);
        if (c.is_zero()) continue;
        std::string term;
        auto part = [&](const Rational& r, bool imag) {
            std::string m = r.get_str();
            if (imag) m += "i";
            return m;
        };
        if (c.im == 0)
            term = part(c.re, false);
        else if (c.re == 0)
            term = part(c.im, true);
        else
            term = "(" + part(c.re, false) + (c.im > 0 ? "+" : "") + part(c.im, true) + ")";
        if (!first) os << (term[0] == '-' ? " - " : " + ");
        else if (term[0] == '-') os << "-";
        if (term[0] == '-') term = term.substr(1);
        if (j == 0) {
            os << term;
        } else {
            if (term != "1") os << term << "*";
            os << var;
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<CRat> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t j = 0; j < out.size(); ++j)
        out[j] = p.coeff(static_cast<int>(j)) + q.coeff(static_cast<int>(j));
    return UniPoly{std::move(out)};
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly operator-(const UniPoly& p) {
    std::vector<CRat> out(p.coeffs_.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = -p.coeffs_[j];
    return UniPoly{std::move(out)};
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly::zero();
    std::vector<CRat> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return UniPoly{std::move(out)};
}

UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return UniPoly::zero();
    std::vector<CRat> out(static_cast<size_t>(p.degree()));
    for (int j = 1; j <= p.degree(); ++j)
        out[static_cast<size_t>(j - 1)] = p.coeff(j) * CRat{j};
    return UniPoly{std::move(out)};
}

UniPoly scale(const UniPoly& p, const CRat& c) {
    std::vector<CRat> out(p.coeffs().size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = p.coeffs()[j] * c;
    return UniPoly{std::move(out)};
}

double cauchy_bound(const UniPoly& p) {
    if (p.degree() < 1) throw ConstantPolynomial("cauchy_bound: constant polynomial");
    double lead = abs_d(p.coeff(p.degree()));
    double m = 0.0;
    for (int j = 0; j < p.degree(); ++j) m = std::max(m, abs_d(p.coeff(j)));
    return 1.0 + m / lead;
}

namespace {

// Exact division; remainder must vanish.
UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
    if (a.is_zero()) return UniPoly::zero();
    std::vector<CRat> rem(a.coeffs());
    std::vector<CRat> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const CRat lead = b.coeff(b.degree());
    for (int d = a.degree(); d >= b.degree(); --d) {
        CRat c = rem[static_cast<size_t>(d)] / lead;
        if (c.is_zero()) continue;
        quot[static_cast<size_t>(d - b.degree())] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(d - b.degree() + j)] -= c * b.coeff(j);
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return UniPoly{std::move(quot)};
}

UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
    std::vector<CRat> rem(a.coeffs());
    const CRat lead = b.coeff(b.degree());
    for (int d = a.degree(); d >= b.degree(); --d) {
        CRat c = rem[static_cast<size_t>(d)] / lead;
        if (c.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(d - b.degree() + j)] -= c * b.coeff(j);
    }
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    return UniPoly{std::move(rem)};
}

UniPoly make_monic(const UniPoly& p) {
    if (p.is_zero()) return p;
    return scale(p, CRat{1} / p.coeff(p.degree()));
}

}  // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    std::vector<UniPoly> factors;
    if (p.degree() < 1) return factors;
    UniPoly dp = derivative(p);
    UniPoly a0 = poly_gcd(p, dp);
    UniPoly b = exact_div(p, a0);
    UniPoly c = exact_div(dp, a0);
    UniPoly d = c - derivative(b);
    while (b.degree() > 0) {
        UniPoly f = poly_gcd(b, d);
        factors.push_back(make_monic(f));
        b = exact_div(b, f);
        c = exact_div(d, f);
        d = c - derivative(b);
    }
    return factors;
}

namespace {

// Aberth-Ehrlich on a square-free polynomial (double coefficients,
// trailing coefficient nonzero). Returns deg(p) root approximations.
std::vector<std::complex<double>> aberth(const std::vector<std::complex<double>>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<double>> dcoeffs(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) dcoeffs[static_cast<size_t>(j - 1)] = coeffs[static_cast<size_t>(j)] * double(j);

    auto horner = [](const std::vector<std::complex<double>>& cs, std::complex<double> z) {
        std::complex<double> acc{0.0, 0.0};
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
        return acc;
    };

    // Initial guesses on a circle at the geometric-mean root radius,
    // with an irrational angular offset to dodge symmetry stalls.
    double r0 = std::pow(std::abs(coeffs[0] / coeffs.back()), 1.0 / n);
    if (!(r0 > 0.0) || !std::isfinite(r0)) r0 = 0.5;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * std::numbers::pi * j / n + 0.4;
        z[static_cast<size_t>(j)] = std::polar(r0, th);
    }

    for (int sweep = 0; sweep < kIterationBudget; ++sweep) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> pv = horner(coeffs, z[static_cast<size_t>(i)]);
            std::complex<double> dv = horner(dcoeffs, z[static_cast<size_t>(i)]);
            std::complex<double> ratio;
            if (dv == std::complex<double>{0.0, 0.0}) {
                // nudge off a critical point
                z[static_cast<size_t>(i)] += std::complex<double>{1e-8, 1e-8};
                max_step = 1.0;
                continue;
            }
            ratio = pv / dv;
            std::complex<double> sum{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                std::complex<double> diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = {1e-300, 0.0};
                sum += 1.0 / diff;
            }
            std::complex<double> w = ratio / (1.0 - ratio * sum);
            z[static_cast<size_t>(i)] -= w;
            max_step = std::max(max_step, std::abs(w) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (max_step < 1e-15) break;
    }
    return z;
}

double residual_of(const UniPoly& p, std::complex<double> z) {
    double cs = 0.0;
    for (const auto& c : p.coeffs()) cs = std::max(cs, abs_d(c));
    double denom = cs * std::pow(std::max(1.0, std::abs(z)), p.degree());
    return std::abs(p.eval(z)) / denom;
}

// Numeric roots of one square-free exact factor, with coefficient
// balancing z = rho*w applied exactly before iterating when the root
// radius estimate is far from 1.
std::vector<std::complex<double>> solve_squarefree(const UniPoly& f) {
    double rho = std::pow(std::abs(f.coeff(0).to_complex() / f.coeff(f.degree()).to_complex()),
                          1.0 / f.degree());
    UniPoly work = f;
    bool scaled = false;
    if (std::isfinite(rho) && (rho > 1e2 || rho < 1e-2) && rho > 0.0) {
        CRat r{rational_from_double(rho)};
        std::vector<CRat> cs(f.coeffs());
        CRat pw{1};
        for (size_t j = 0; j < cs.size(); ++j) {
            cs[j] = cs[j] * pw;
            pw = pw * r;
        }
        work = UniPoly{std::move(cs)};
        scaled = true;
    }
    std::vector<std::complex<double>> dc;
    double cmax = 0.0;
    for (const auto& c : work.coeffs()) cmax = std::max(cmax, abs_d(c));
    for (const auto& c : work.coeffs()) dc.push_back(c.to_complex() / cmax);
    auto zs = aberth(dc);
    if (scaled)
        for (auto& z : zs) z *= rho;
    return zs;
}

}  // namespace

RootSet find_roots(const UniPoly& p) {
    if (p.degree() < 1) throw ConstantPolynomial("find_roots: degree < 1");

    RootSet rs;

    // Strip the exact zero root first.
    size_t m = 0;
    while (m < p.coeffs().size() && p.coeffs()[m].is_zero()) ++m;
    UniPoly q = p;
    if (m > 0) {
        std::vector<CRat> cs(p.coeffs().begin() + static_cast<long>(m), p.coeffs().end());
        q = UniPoly{std::move(cs)};
        rs.roots.push_back({{0.0, 0.0}, static_cast<int>(m), 0.0});
    }

    if (q.degree() >= 1) {
        auto factors = squarefree_decomposition(q);
        for (size_t i = 0; i < factors.size(); ++i) {
            const UniPoly& f = factors[i];
            if (f.degree() < 1) continue;
            for (auto z : solve_squarefree(f))
                rs.roots.push_back({z, static_cast<int>(i) + 1, residual_of(f, z)});
        }
    }

    // Merge near-coincident locations.
    std::vector<Root> merged;
    for (const auto& r : rs.roots) {
        bool found = false;
        for (auto& mr : merged) {
            if (std::abs(mr.location - r.location) < kClusterEps) {
                double wa = mr.multiplicity, wb = r.multiplicity;
                mr.location = (mr.location * wa + r.location * wb) / (wa + wb);
                mr.multiplicity += r.multiplicity;
                mr.residual = std::max(mr.residual, r.residual);
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(r);
    }
    rs.roots = std::move(merged);

    rs.total_multiplicity = 0;
    for (const auto& r : rs.roots) {
        rs.total_multiplicity += r.multiplicity;
        if (r.residual > kResidualTol)
            throw NonConvergence("find_roots: residual " + std::to_string(r.residual) +
                                 " exceeds tolerance");
    }
    return rs;
}

}  // namespace paulipt
