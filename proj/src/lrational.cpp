#include "wzeta/lrational.hpp"

#include <sstream>

namespace wzeta {

namespace {

using Poly = std::vector<BigInt>;

void strip_leading_zeros(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& x, const Poly& y) {
    Poly r(std::max(x.size(), y.size()));
    for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    strip_leading_zeros(r);
    return r;
}

Poly poly_mul(const Poly& x, const Poly& y) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    strip_leading_zeros(r);
    return r;
}

// Multiply by (L-1)^k.
Poly poly_mul_lm1(Poly p, long k) {
    for (long t = 0; t < k; ++t) {
        Poly r(p.size() + 1);
        for (size_t i = 0; i < p.size(); ++i) {
            r[i + 1] += p[i];
            r[i] -= p[i];
        }
        strip_leading_zeros(r);
        p = std::move(r);
    }
    return p;
}

Poly poly_shift(Poly p, long k) {
    if (p.empty() || k == 0) return p;
    Poly r(p.size() + k);
    for (size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
    return r;
}

BigInt poly_eval_at_1(const Poly& p) {
    BigInt s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// Exact division by (L-1); the caller guarantees p(1) == 0.
Poly poly_div_lm1(const Poly& p) {
    if (p.empty()) return {};
    Poly q(p.size() - 1);
    BigInt carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry += p[i];
        q[i - 1] = carry;
    }
    return q;
}

} // namespace

LRational::LRational(long c) {
    if (c != 0) num_ = {BigInt(c)};
}

LRational::LRational(const BigInt& c) {
    if (c != 0) num_ = {c};
}

LRational LRational::l_pow(long e) {
    LRational r;
    if (e >= 0) {
        r.num_.assign(static_cast<size_t>(e) + 1, BigInt(0));
        r.num_.back() = 1;
    } else {
        r.num_ = {BigInt(1)};
        r.b_ = -e;
    }
    return r;
}

LRational LRational::monomial_quotient(long l_exp, long lm1_pow) {
    if (lm1_pow < 0) throw InputError("negative (L-1) power in denominator");
    LRational r = l_pow(l_exp);
    r.a_ = lm1_pow;
    r.canonicalize();
    return r;
}

LRational LRational::lminus1_pow(unsigned long d) {
    LRational r = one();
    r.num_ = poly_mul_lm1(r.num_, static_cast<long>(d));
    return r;
}

void LRational::canonicalize() {
    strip_leading_zeros(num_);
    if (num_.empty()) {
        a_ = b_ = 0;
        return;
    }
    while (a_ > 0 && poly_eval_at_1(num_) == 0) {
        num_ = poly_div_lm1(num_);
        --a_;
    }
    size_t low = 0;
    while (low < num_.size() && num_[low] == 0) ++low;
    long shift = std::min<long>(b_, static_cast<long>(low));
    if (shift > 0) {
        num_.erase(num_.begin(), num_.begin() + shift);
        b_ -= shift;
    }
}

LRational LRational::operator-() const {
    LRational r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

LRational LRational::operator+(const LRational& o) const {
    LRational r;
    r.a_ = std::max(a_, o.a_);
    r.b_ = std::max(b_, o.b_);
    Poly left = poly_shift(poly_mul_lm1(num_, r.a_ - a_), r.b_ - b_);
    Poly right = poly_shift(poly_mul_lm1(o.num_, r.a_ - o.a_), r.b_ - o.b_);
    r.num_ = poly_add(left, right);
    r.canonicalize();
    return r;
}

LRational LRational::operator-(const LRational& o) const {
    return *this + (-o);
}

LRational LRational::operator*(const LRational& o) const {
    LRational r;
    r.num_ = poly_mul(num_, o.num_);
    r.a_ = a_ + o.a_;
    r.b_ = b_ + o.b_;
    r.canonicalize();
    return r;
}

LRational LRational::scaled(const BigInt& c) const {
    LRational r = *this;
    if (c == 0) return LRational();
    for (auto& x : r.num_) x *= c;
    return r;
}

bool LRational::operator==(const LRational& o) const {
    return a_ == o.a_ && b_ == o.b_ && num_ == o.num_;
}

std::vector<BigInt> LRational::expand(long order) const {
    if (order < 0) throw InputError("negative expansion order");
    std::vector<BigInt> out(static_cast<size_t>(order) + 1, BigInt(0));
    if (num_.empty()) return out;
    long top = static_cast<long>(num_.size()) - 1 - a_ - b_;
    if (top > 0)
        throw InputError("value has positive L-degree " + std::to_string(top) +
                         ", no expansion at L = infinity in powers of L^-1");
    // 1/(L-1)^a = sum_{j>=0} C(a-1+j, j) L^-(a+j); for a = 0 the factor is 1.
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        if (a_ == 0) {
            long n = b_ - static_cast<long>(i);
            if (n >= 0 && n <= order) out[n] += num_[i];
            continue;
        }
        for (long n = 0; n <= order; ++n) {
            long j = n + static_cast<long>(i) - b_ - a_;
            if (j < 0) continue;
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a_ - 1 + j),
                         static_cast<unsigned long>(j));
            out[n] += num_[i] * binom;
        }
    }
    return out;
}

std::string LRational::str() const {
    if (num_.empty()) return "0";
    std::ostringstream os;
    bool single_term = true;
    {
        int nonzero = 0;
        for (const auto& c : num_) nonzero += (c != 0);
        single_term = nonzero == 1;
    }
    bool need_paren = !single_term && (a_ > 0 || b_ > 0);
    if (need_paren) os << "(";
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        BigInt c = num_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        long e = static_cast<long>(i) - b_;
        if (c != 1 || e == 0) os << c.get_str();
        if (e != 0) {
            if (c != 1) os << "*";
            os << "L";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    if (need_paren) os << ")";
    if (a_ > 0) {
        os << "/(L-1)";
        if (a_ > 1) os << "^" << a_;
    }
    return os.str();
}

} // namespace wzeta
