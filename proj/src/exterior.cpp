#include "kleinobs/exterior.hpp"

#include <bit>
#include <sstream>

namespace kleinobs {

namespace {

constexpr std::size_t kMaxDim = 32;

int popcount(Mask m) { return std::popcount(m); }

Mask bit(std::size_t i) { return Mask{1} << i; }

// Number of set bits of m strictly below index i.
int count_below(Mask m, std::size_t i) { return popcount(m & (bit(i) - 1)); }

// Sign of e^A ^ e^B relative to e^{A|B}; zero when A and B overlap.
int wedge_sign(Mask a, Mask b)
{
    if (a & b) return 0;
    int crossings = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        auto j = static_cast<std::size_t>(std::countr_zero(rest));
        crossings += popcount(a & ~(bit(j + 1) - 1));
    }
    return crossings % 2 ? -1 : 1;
}

void combinations(std::size_t n, std::size_t p, std::size_t start, Mask acc, std::vector<Mask>& out)
{
    if (p == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i + p <= n; ++i) combinations(n, p - 1, i + 1, acc | bit(i), out);
}

} // namespace

std::vector<Mask> degree_basis(std::size_t n, std::size_t p)
{
    std::vector<Mask> out;
    if (p <= n) combinations(n, p, 0, 0, out);
    return out;
}

AltForm::AltForm(std::size_t n, std::size_t degree) : n_(n), degree_(degree)
{
    if (n > kMaxDim) throw LieError(ErrorCode::DimensionMismatch, "exterior algebra limited to 32 generators");
}

AltForm AltForm::basis(std::size_t n, Mask m)
{
    AltForm a(n, static_cast<std::size_t>(popcount(m)));
    a.add(m, 1);
    return a;
}

AltForm AltForm::one(std::size_t n)
{
    AltForm a(n, 0);
    a.add(0, 1);
    return a;
}

AltForm AltForm::from_covector(const Covector& f)
{
    AltForm a(f.size(), 1);
    for (std::size_t i = 0; i < f.size(); ++i) a.add(bit(i), f[i]);
    return a;
}

AltForm AltForm::from_antisymmetric(const Matrix& m)
{
    AltForm a(m.rows(), 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) a.add(bit(i) | bit(j), m(i, j));
    return a;
}

AltForm AltForm::from_coordinates(std::size_t n, std::size_t degree, const std::vector<Scalar>& coords)
{
    auto masks = degree_basis(n, degree);
    if (coords.size() != masks.size()) throw LieError(ErrorCode::DimensionMismatch, "form coordinates have wrong length");
    AltForm a(n, degree);
    for (std::size_t i = 0; i < masks.size(); ++i) a.add(masks[i], coords[i]);
    return a;
}

Scalar AltForm::coeff(Mask m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void AltForm::add(Mask m, const Scalar& c)
{
    if (sgn(c) == 0) return;
    if (static_cast<std::size_t>(popcount(m)) != degree_ || (n_ < kMaxDim && m >= bit(n_)))
        throw LieError(ErrorCode::DimensionMismatch, "basis mask does not match the form");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::vector<Scalar> AltForm::coordinates() const
{
    auto masks = degree_basis(n_, degree_);
    std::vector<Scalar> out(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) out[i] = coeff(masks[i]);
    return out;
}

Scalar AltForm::evaluate(const std::vector<Vector>& args) const
{
    if (args.size() != degree_) throw LieError(ErrorCode::DimensionMismatch, "wrong number of arguments for form");
    if (degree_ == 0) return coeff(0);
    Scalar total = 0;
    Matrix minor(degree_, degree_);
    for (const auto& [m, c] : terms_) {
        std::size_t r = 0;
        for (Mask rest = m; rest; rest &= rest - 1, ++r) {
            auto i = static_cast<std::size_t>(std::countr_zero(rest));
            for (std::size_t k = 0; k < degree_; ++k) minor(r, k) = args[k][i];
        }
        total += c * determinant(minor);
    }
    return total;
}

void AltForm::check_compatible(const AltForm& o) const
{
    if (o.n_ != n_ || o.degree_ != degree_) throw LieError(ErrorCode::DimensionMismatch, "forms of different shape");
}

AltForm& AltForm::operator+=(const AltForm& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

AltForm& AltForm::operator-=(const AltForm& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

AltForm& AltForm::operator*=(const Scalar& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

AltForm wedge(const AltForm& a, const AltForm& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw LieError(ErrorCode::DimensionMismatch, "wedge of forms on different algebras");
    AltForm out(a.ambient_dim(), a.degree() + b.degree());
    if (out.degree() > a.ambient_dim()) return out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s != 0) out.add(ma | mb, s * ca * cb);
        }
    return out;
}

AltForm interior(const Vector& y, const AltForm& a)
{
    if (y.size() != a.ambient_dim()) throw LieError(ErrorCode::DimensionMismatch, "interior product with vector of wrong length");
    if (a.degree() == 0) return AltForm(a.ambient_dim(), 0);
    AltForm out(a.ambient_dim(), a.degree() - 1);
    for (const auto& [m, c] : a.terms())
        for (Mask rest = m; rest; rest &= rest - 1) {
            auto j = static_cast<std::size_t>(std::countr_zero(rest));
            if (sgn(y[j]) == 0) continue;
            Scalar v = c * y[j];
            if (count_below(m, j) % 2) v = -v;
            out.add(m & ~bit(j), v);
        }
    return out;
}

AltForm lie_derivative(const LieAlgebra& g, const Vector& x, const AltForm& a)
{
    const std::size_t n = g.dim();
    if (a.ambient_dim() != n) throw LieError(ErrorCode::DimensionMismatch, "form on a different algebra");
    Matrix ad = ad_matrix(g, x);
    AltForm out(n, a.degree());
    // L(x) e^i = -sum_j ad(i, j) e^j, extended as a derivation.
    for (const auto& [m, c] : a.terms())
        for (Mask rest = m; rest; rest &= rest - 1) {
            auto i = static_cast<std::size_t>(std::countr_zero(rest));
            Mask without = m & ~bit(i);
            int base = count_below(m, i);
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(ad(i, j)) == 0 || (without & bit(j))) continue;
                Scalar v = -c * ad(i, j);
                if ((base + count_below(without, j)) % 2) v = -v;
                out.add(without | bit(j), v);
            }
        }
    return out;
}

AltForm ce_diff(const LieAlgebra& g, const AltForm& a)
{
    const std::size_t n = g.dim();
    if (a.ambient_dim() != n) throw LieError(ErrorCode::DimensionMismatch, "form on a different algebra");
    AltForm out(n, a.degree() + 1);
    if (out.degree() > n) return out;

    // d e^k = -sum_{i<j} c(i, j, k) e^i ^ e^j.
    std::vector<std::vector<std::pair<Mask, Scalar>>> d1(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) d1[k].emplace_back(bit(i) | bit(j), -g.c(i, j, k));

    // d e^I = sum_m (-1)^m (d e^{i_m}) ^ e^{I - i_m}.
    for (const auto& [m, c] : a.terms()) {
        int pos = 0;
        for (Mask rest = m; rest; rest &= rest - 1, ++pos) {
            auto k = static_cast<std::size_t>(std::countr_zero(rest));
            Mask others = m & ~bit(k);
            for (const auto& [pairmask, coeff] : d1[k]) {
                int s = wedge_sign(pairmask, others);
                if (s == 0) continue;
                Scalar v = c * coeff * s;
                if (pos % 2) v = -v;
                out.add(pairmask | others, v);
            }
        }
    }
    return out;
}

AltForm power(const AltForm& a, unsigned m)
{
    AltForm result = AltForm::one(a.ambient_dim());
    for (unsigned i = 0; i < m; ++i) result = wedge(result, a);
    return result;
}

std::string format_form(const LieAlgebra& g, const AltForm& a)
{
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (Mask m : degree_basis(a.ambient_dim(), a.degree())) {
        Scalar c = a.coeff(m);
        if (sgn(c) == 0) continue;
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        Scalar mag = abs(c);
        if (m == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        bool lead = true;
        for (Mask rest = m; rest; rest &= rest - 1) {
            auto i = static_cast<std::size_t>(std::countr_zero(rest));
            if (!lead) os << "^";
            lead = false;
            os << g.labels()[i] << "*";
        }
    }
    return os.str();
}

} // namespace kleinobs
