#pragma once

#include "kleinobs/lie_algebra.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fx {

using namespace kleinobs;

struct Term {
    Scalar coeff;
    std::string label;
};

struct Rule {
    std::string a, b;
    std::vector<Term> result;
};

inline LieAlgebra algebra(const std::string& name, const std::vector<std::string>& labels, const std::vector<Rule>& rules)
{
    auto index = [&](const std::string& l) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        throw std::runtime_error("unknown label " + l);
    };
    std::vector<BracketRule> table;
    for (const auto& r : rules) {
        BracketRule br{index(r.a), index(r.b), std::vector<Scalar>(labels.size())};
        for (const auto& t : r.result) br.result[index(t.label)] += t.coeff;
        table.push_back(std::move(br));
    }
    return make_algebra(name, labels, table);
}

inline Vector vec(const LieAlgebra& g, const std::vector<Term>& terms)
{
    Vector v(g.dim());
    for (const auto& t : terms) v[*g.index_of(t.label)] += t.coeff;
    return v;
}

inline Vector e(const LieAlgebra& g, const std::string& label) { return g.basis_vector(*g.index_of(label)); }

inline Covector covec(const LieAlgebra& g, const std::vector<Term>& terms)
{
    Covector f(g.dim());
    for (const auto& t : terms) f[*g.index_of(t.label)] += t.coeff;
    return f;
}

inline Subalgebra sub(const LieAlgebra& g, const std::vector<Vector>& gens)
{
    return Subalgebra(g, Subspace::span(g.dim(), gens));
}

inline LieAlgebra sl2()
{
    return algebra("sl2", {"H", "E", "F"}, {{"H", "E", {{2, "E"}}}, {"H", "F", {{-2, "F"}}}, {"E", "F", {{1, "H"}}}});
}

inline LieAlgebra heis3() { return algebra("heis3", {"X", "Y", "Z"}, {{"X", "Y", {{1, "Z"}}}}); }

inline LieAlgebra aff() { return algebra("aff", {"X", "Y"}, {{"X", "Y", {{1, "Y"}}}}); }

inline LieAlgebra abelian(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("A" + std::to_string(i));
    return algebra("abelian" + std::to_string(n), labels, {});
}

inline LieAlgebra su2()
{
    return algebra("su2", {"A", "B", "C"}, {{"A", "B", {{1, "C"}}}, {"B", "C", {{1, "A"}}}, {"C", "A", {{1, "B"}}}});
}

inline LieAlgebra sl2xsl2()
{
    return algebra("sl2xsl2", {"H1", "E1", "F1", "H2", "E2", "F2"},
                   {{"H1", "E1", {{2, "E1"}}},
                    {"H1", "F1", {{-2, "F1"}}},
                    {"E1", "F1", {{1, "H1"}}},
                    {"H2", "E2", {{2, "E2"}}},
                    {"H2", "F2", {{-2, "F2"}}},
                    {"E2", "F2", {{1, "H2"}}}});
}

inline LieAlgebra sl2_aff()
{
    return algebra("sl2+aff", {"H", "E", "F", "X", "Y"},
                   {{"H", "E", {{2, "E"}}}, {"H", "F", {{-2, "F"}}}, {"E", "F", {{1, "H"}}}, {"X", "Y", {{1, "Y"}}}});
}

inline Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c)
{
    Matrix m(n, n);
    m(r, c) = 1;
    return m;
}

inline LieAlgebra sl3()
{
    auto u = [](std::size_t r, std::size_t c) { return unit_matrix(3, r, c); };
    return matrix_algebra("sl3", {"H1", "H2", "E1", "E2", "E3", "F1", "F2", "F3"},
                          {u(0, 0) - u(1, 1), u(1, 1) - u(2, 2), u(0, 1), u(1, 2), u(0, 2), u(1, 0), u(2, 1), u(2, 0)});
}

/// Every algebra the structural suites sweep over.
inline std::vector<LieAlgebra> all_algebras()
{
    return {sl2(), heis3(), aff(), abelian(4), su2(), sl2xsl2(), sl2_aff(), sl3()};
}

inline Scalar random_scalar(std::mt19937& rng, int range = 5, int den = 3)
{
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    Scalar x(num(rng), d(rng));
    x.canonicalize();
    return x;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n)
{
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(rng);
    return v;
}

} // namespace fx
