#include "g2dual/io/print.hpp"

#include <algorithm>
#include <vector>

namespace g2::io {

namespace {

std::string rat_str(const Rational& r) { return r.str(); }

// |r| as a product factor: parenthesized when it carries a denominator
std::string rat_factor(const Rational& r) {
    if (r.is_integer()) return rat_str(r);
    return "(" + rat_str(r) + ")";
}

bool qs_composite(const QuadScalar& c) {
    return !c.rational_part().is_zero() && !c.radical_part().is_zero();
}

// standalone rendering, sign included
std::string qs_str(const QuadScalar& c) {
    if (c.is_zero()) return "0";
    const Rational& a = c.rational_part();
    const Rational& b = c.radical_part();
    std::string out;
    if (!a.is_zero()) out += rat_str(a);
    if (!b.is_zero()) {
        std::string mag;
        Rational babs = b.sign() < 0 ? -b : b;
        if (babs.is_one())
            mag = "s";
        else
            mag = rat_factor(babs) + "*s";
        if (out.empty())
            out = (b.sign() < 0 ? "-" : "") + mag;
        else
            out += (b.sign() < 0 ? "-" : "+") + mag;
    }
    return out;
}

// rendering as a factor inside a product; the caller has pulled the sign, so
// the value is "positive-leading" here
std::string qs_factor(const QuadScalar& c) {
    if (qs_composite(c)) return "(" + qs_str(c) + ")";
    if (!c.rational_part().is_zero()) return rat_factor(c.rational_part());
    // pure radical part
    const Rational& b = c.radical_part();
    if (b.is_one()) return "s";
    return rat_factor(b) + "*s";
}

std::string power_str(const std::string& var, int k) {
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

// one polynomial term "coeff * var^k" without sign; coeff must be
// positive-leading
std::string qs_term(const QuadScalar& coeff, const std::string& var, int k) {
    if (k == 0) return qs_str(coeff);
    if (coeff.is_one()) return power_str(var, k);
    return qs_factor(coeff) + "*" + power_str(var, k);
}

std::string tpoly_str(const TPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.deg(); k >= 0; --k) {
        const QuadScalar& c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.leading_negative();
        QuadScalar mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        out += qs_term(mag, var, k);
    }
    return out;
}

bool tpoly_multiterm(const TPoly& p) {
    if (p.is_zero()) return false;
    int n = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++n;
    return n > 1;
}

std::string ratfunc_str(const RatFunc& r, const std::string& var) {
    if (r.is_polynomial()) return tpoly_str(r.num(), var);
    std::string ns = tpoly_str(r.num(), var);
    if (tpoly_multiterm(r.num())) ns = "(" + ns + ")";
    std::string ds = tpoly_str(r.den(), var);
    if (tpoly_multiterm(r.den())) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

bool ratfunc_leading_negative(const RatFunc& r) {
    return !r.is_zero() && r.num().leading().leading_negative();
}

// positive-leading rational function as a factor inside a product
std::string ratfunc_factor(const RatFunc& r, const std::string& var) {
    if (r.is_polynomial()) {
        if (tpoly_multiterm(r.num())) return "(" + tpoly_str(r.num(), var) + ")";
        // single t-term: coefficient and power multiply through
        const TPoly& n = r.num();
        int k = n.deg();
        const QuadScalar& c = n.leading();
        if (k == 0) return qs_factor(c);
        if (c.is_one()) return power_str(var, k);
        return qs_factor(c) + "*" + power_str(var, k);
    }
    return "(" + ratfunc_str(r, var) + ")";
}

} // namespace

std::string to_string(const Rational& r) { return rat_str(r); }

std::string to_string(const QuadScalar& c) { return qs_str(c); }

std::string to_string(const TPoly& p, const std::string& var) { return tpoly_str(p, var); }

std::string to_string(const RatFunc& r, const std::string& var) { return ratfunc_str(r, var); }

std::string to_string(const XPoly& p, const std::string& xvar, const std::string& tvar) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.deg(); k >= 0; --k) {
        const RatFunc& c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = ratfunc_leading_negative(c);
        RatFunc mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        if (k == 0) {
            out += ratfunc_str(mag, tvar);
        } else if (mag.is_one()) {
            out += power_str(xvar, k);
        } else {
            out += ratfunc_factor(mag, tvar) + "*" + power_str(xvar, k);
        }
    }
    return out;
}

std::string to_string(const TriPoly& p) {
    if (p.is_zero()) return "0";
    // decreasing X-degree, then decreasing T-degree (display order of the
    // quasi-torus forms)
    std::vector<std::pair<TriPoly::Exponents, QuadScalar>> terms(p.terms().begin(),
                                                                 p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        if (l.first[1] != r.first[1]) return l.first[1] > r.first[1];
        if (l.first[0] != r.first[0]) return l.first[0] > r.first[0];
        return l.first[2] > r.first[2];
    });
    const char* vars[3] = {"T", "X", "Z"};
    std::string out;
    for (const auto& [e, c] : terms) {
        bool neg = c.leading_negative();
        QuadScalar mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        std::string body;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!body.empty()) body += "*";
            body += power_str(vars[v], e[v]);
        }
        if (body.empty()) {
            out += qs_str(mag);
        } else if (mag.is_one()) {
            out += body;
        } else {
            out += qs_factor(mag) + "*" + body;
        }
    }
    return out;
}

} // namespace g2::io
