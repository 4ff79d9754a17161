#include "kleinobs/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kleinobs {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree)
{
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    Polynomial p = *this;
    Scalar inv = 1 / leading();
    for (auto& c : p.coeffs_) c *= inv;
    return p;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Scalar Polynomial::operator()(const Scalar& x) const
{
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const
{
    if (!m.is_square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
    const std::size_t n = m.rows();
    Matrix acc(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Scalar& s, const Polynomial& p)
{
    std::vector<Scalar> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Scalar mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || k == 0) os << kleinobs::to_string(mag);
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {{}, a};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1));
    Scalar inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Scalar c = r[static_cast<std::size_t>(k)] * inv;
        if (sgn(c) == 0) continue;
        q[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {};
    Scalar inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() <= 0) return p.is_zero() ? p : Polynomial::constant(1);
    Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).quotient.monic();
}

bool is_squarefree(const Polynomial& p)
{
    return gcd(p, p.derivative()).degree() <= 0;
}

Polynomial characteristic_polynomial(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        c[n - k] = -(m * mk).trace() / static_cast<long>(k);
    }
    return Polynomial(std::move(c));
}

namespace {

std::vector<Integer> positive_divisors(Integer v)
{
    v = abs(v);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer d = 2; d * d <= v; ++d) {
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e) factors.emplace_back(d, e);
    }
    if (v > 1) factors.emplace_back(v, 1);

    std::vector<Integer> divs{1};
    for (const auto& [prime, exp] : factors) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace

std::vector<Scalar> rational_roots(const Polynomial& p)
{
    if (p.degree() <= 0) return {};
    std::vector<Scalar> roots;

    // Integer coefficients with the zero root factored out.
    std::size_t shift = 0;
    while (sgn(p.coeff(shift)) == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);

    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> a;
    for (std::size_t i = shift; i < p.coeffs().size(); ++i) a.push_back(p.coeffs()[i].get_num() * (l / p.coeffs()[i].get_den()));
    if (a.size() > 1) {
        auto nums = positive_divisors(a.front());
        auto dens = positive_divisors(a.back());
        Polynomial reduced(std::vector<Scalar>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
        for (const auto& num : nums)
            for (const auto& den : dens)
                for (int s : {1, -1}) {
                    Scalar cand(num * s, den);
                    cand.canonicalize();
                    if (sgn(reduced(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p)
{
    std::vector<Polynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero()) {
        Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
        seq.push_back(Scalar(-1) * r);
    }
    seq.pop_back();
    return seq;
}

namespace {

int sign_at_infinity(const Polynomial& p, bool positive)
{
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

std::size_t sign_changes(const std::vector<int>& signs)
{
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

std::size_t count_real_roots(const Polynomial& p)
{
    if (p.degree() <= 0) return 0;
    auto seq = sturm_sequence(p);
    std::vector<int> lo, hi;
    for (const auto& q : seq) {
        lo.push_back(sign_at_infinity(q, false));
        hi.push_back(sign_at_infinity(q, true));
    }
    return sign_changes(lo) - sign_changes(hi);
}

std::size_t count_real_roots(const Polynomial& p, const Scalar& lo, const Scalar& hi)
{
    if (p.degree() <= 0 || !(lo < hi)) return 0;
    auto seq = sturm_sequence(p);
    std::vector<int> a, b;
    for (const auto& q : seq) {
        a.push_back(sgn(q(lo)));
        b.push_back(sgn(q(hi)));
    }
    // Sturm's theorem counts roots in (lo, hi] when lo itself is not a root.
    std::size_t count = sign_changes(a) - sign_changes(b);
    return count;
}

std::size_t count_imaginary_axis_roots(const Polynomial& p)
{
    if (p.degree() <= 0) return 0;
    std::vector<Scalar> re(p.coeffs().size()), im(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Scalar& c = p.coeffs()[k];
        switch (k % 4) {
        case 0: re[k] = c; break;
        case 1: im[k] = c; break;
        case 2: re[k] = -c; break;
        default: im[k] = -c; break;
        }
    }
    Polynomial g = gcd(Polynomial(re), Polynomial(im));
    return count_real_roots(squarefree_part(g));
}

} // namespace kleinobs
