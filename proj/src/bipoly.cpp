#include "paulipt/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace paulipt {

BiPoly::BiPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

void BiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

BiPoly BiPoly::constant(Rational c) { return term(0, 0, std::move(c)); }

BiPoly BiPoly::term(int i, int j, Rational c) {
    Terms t;
    if (c != 0) t[{i, j}] = std::move(c);
    return BiPoly{std::move(t)};
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational{0} : it->second;
}

int BiPoly::total_degree() const {
    int d = 0;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
    return d;
}

double BiPoly::eval(double x, double y) const {
    return BiPolyD(*this).eval(x, y);
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : terms_) {
        std::string cs = c.get_str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        else if (cs[0] == '-') os << "-";
        if (cs[0] == '-') cs = cs.substr(1);
        auto [i, j] = ij;
        bool bare = (i == 0 && j == 0);
        if (cs != "1" || bare) os << cs;
        if (i > 0) {
            if (cs != "1") os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        if (j > 0) {
            if (i > 0 || cs != "1") os << "*";
            os << "y";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
    BiPoly::Terms out = f.terms_;
    for (const auto& [ij, c] : g.terms_) out[ij] += c;
    return BiPoly{std::move(out)};
}

BiPoly operator-(const BiPoly& f, const BiPoly& g) { return f + (-g); }

BiPoly operator-(const BiPoly& f) {
    BiPoly::Terms out;
    for (const auto& [ij, c] : f.terms_) out[ij] = -c;
    return BiPoly{std::move(out)};
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    BiPoly::Terms out;
    for (const auto& [a, ca] : f.terms_)
        for (const auto& [b, cb] : g.terms_)
            out[{a.first + b.first, a.second + b.second}] += ca * cb;
    return BiPoly{std::move(out)};
}

std::pair<BiPoly, BiPoly> partials(const BiPoly& f) {
    BiPoly::Terms dx, dy;
    for (const auto& [ij, c] : f.terms()) {
        auto [i, j] = ij;
        if (i > 0) dx[{i - 1, j}] += c * i;
        if (j > 0) dy[{i, j - 1}] += c * j;
    }
    return {BiPoly{std::move(dx)}, BiPoly{std::move(dy)}};
}

std::pair<BiPoly, BiPoly> expand_re_im(const UniPoly& p) {
    BiPoly re, im;
    // running powers of (x + iy)
    BiPoly pw_re = BiPoly::constant(1), pw_im;
    const BiPoly x = BiPoly::term(1, 0, 1), y = BiPoly::term(0, 1, 1);
    for (int j = 0; j <= p.degree(); ++j) {
        const CRat& c = p.coeff(j);
        if (!c.is_zero()) {
            // (a+bi)(u+vi) = (au - bv) + (av + bu)i
            re = re + BiPoly::constant(c.re) * pw_re - BiPoly::constant(c.im) * pw_im;
            im = im + BiPoly::constant(c.re) * pw_im + BiPoly::constant(c.im) * pw_re;
        }
        if (j < p.degree()) {
            BiPoly nre = x * pw_re - y * pw_im;
            BiPoly nim = x * pw_im + y * pw_re;
            pw_re = std::move(nre);
            pw_im = std::move(nim);
        }
    }
    return {std::move(re), std::move(im)};
}

BiPoly s_field(const PauliPoly& p) {
    auto [re, im] = expand_re_im(g_poly(p));
    (void)re;
    BiPoly::Terms half;
    for (const auto& [ij, c] : im.terms()) half[ij] = c / 2;
    return BiPoly{std::move(half)};
}

BiPoly h_field(const PauliPoly& p) { return expand_re_im(g_poly(p)).first; }

std::pair<BiPoly, BiPoly> trace_fields(const PauliPoly& p) { return expand_re_im(p.c0); }

BiPolyD::BiPolyD(const BiPoly& f) {
    for (const auto& [ij, c] : f.terms()) {
        terms_.push_back({ij.first, ij.second, c.get_d()});
        max_i_ = std::max(max_i_, ij.first);
        max_j_ = std::max(max_j_, ij.second);
    }
}

double BiPolyD::eval(double x, double y) const {
    double xp[32], yp[32];
    xp[0] = yp[0] = 1.0;
    for (int i = 1; i <= max_i_; ++i) xp[i] = xp[i - 1] * x;
    for (int j = 1; j <= max_j_; ++j) yp[j] = yp[j - 1] * y;
    double acc = 0.0;
    for (const auto& t : terms_) acc += t.c * xp[t.i] * yp[t.j];
    return acc;
}

}  // namespace paulipt
