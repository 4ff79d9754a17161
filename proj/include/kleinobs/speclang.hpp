#pragma once

#include "kleinobs/obstruct.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kleinobs {

enum class SpecErrorKind { Syntax, UnresolvedName, DimensionMismatch, NonRationalLiteral, InvalidDeclaration, UnknownEntry };

const char* to_string(SpecErrorKind kind);

struct SourcePos {
    int line = 0;
    int col = 0;
    /// Positions are not part of document identity.
    friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

class SpecError : public std::runtime_error {
public:
    SpecError(SpecErrorKind kind, SourcePos pos, const std::string& message);
    SpecErrorKind kind() const { return kind_; }
    SourcePos pos() const { return pos_; }
    const std::string& message() const { return message_; }

private:
    SpecErrorKind kind_;
    SourcePos pos_;
    std::string message_;
};

struct LinearTerm {
    Scalar coeff;
    std::string name;
    SourcePos pos;
    friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};
using LinearExpr = std::vector<LinearTerm>;

struct BracketDecl {
    std::string left;
    std::string right;
    LinearExpr result;
    SourcePos pos;
    friend bool operator==(const BracketDecl&, const BracketDecl&) = default;
};

struct MatrixGen {
    std::string name;
    std::vector<std::vector<Scalar>> rows;
    SourcePos pos;
    friend bool operator==(const MatrixGen&, const MatrixGen&) = default;
};

struct AlgebraDecl {
    std::string name;
    bool from_matrices = false;
    std::vector<std::string> basis;
    std::vector<BracketDecl> brackets;
    std::size_t size = 0;
    std::vector<MatrixGen> gens;
    SourcePos pos;
    friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

/// span(v, ...), closure(v, ...), stab(F or X), normalizer(S), centralizer(S), derived.
struct SpanExpr {
    enum class Kind { Span, Closure, Stab, Normalizer, Centralizer, Derived };
    Kind kind = Kind::Span;
    std::vector<LinearExpr> vectors;
    std::string ref;
    SourcePos pos;
    friend bool operator==(const SpanExpr&, const SpanExpr&) = default;
};

struct SubspaceDecl {
    bool compact = false;
    std::string name;
    /// Algebra or subalgebra the declaration sits in.
    std::string of;
    SpanExpr value;
    SourcePos pos;
    friend bool operator==(const SubspaceDecl&, const SubspaceDecl&) = default;
};

struct FunctionalDecl {
    std::string name;
    std::string on;
    /// Either explicit dual coordinates or the Killing dual of an element.
    std::vector<std::pair<std::string, Scalar>> entries;
    std::optional<LinearExpr> killing_of;
    SourcePos pos;
    friend bool operator==(const FunctionalDecl&, const FunctionalDecl&) = default;
};

struct ElementDecl {
    std::string name;
    std::string of;
    LinearExpr value;
    SourcePos pos;
    friend bool operator==(const ElementDecl&, const ElementDecl&) = default;
};

struct AssertDecl {
    std::string text;
    SourcePos pos;
    friend bool operator==(const AssertDecl&, const AssertDecl&) = default;
};

struct CheckDecl {
    /// Empty means all criteria.
    std::vector<std::string> criteria;
    std::string algebra;
    std::string sub;
    std::optional<std::string> compact;
    std::optional<std::string> functional;
    std::optional<std::string> element;
    std::optional<std::string> gprime;
    bool solvable_mode = false;
    SourcePos pos;
    friend bool operator==(const CheckDecl&, const CheckDecl&) = default;
};

using Decl = std::variant<AlgebraDecl, SubspaceDecl, FunctionalDecl, ElementDecl, AssertDecl, CheckDecl>;

struct SpecDocument {
    std::vector<Decl> decls;
    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/// Parses and resolves names; throws SpecError with the offending position.
SpecDocument parse_spec(const std::string& text);

/// Canonical text; parse_spec(serialize_spec(d)) == d.
std::string serialize_spec(const SpecDocument& doc);

struct ElaboratedSubspace {
    std::string algebra;
    Subspace space;
    bool compact = false;
    SourcePos pos;
};

struct CheckJob {
    std::string algebra;
    std::string sub;
    Subspace h;
    Auxiliary aux;
    RunOptions options;
    SourcePos pos;
};

struct Elaboration {
    std::map<std::string, LieAlgebra> algebras;
    std::vector<std::string> algebra_order;
    std::map<std::string, ElaboratedSubspace> subspaces;
    std::map<std::string, std::pair<std::string, Covector>> functionals;
    std::map<std::string, std::pair<std::string, Vector>> elements;
    std::vector<std::string> assumptions;
    std::vector<CheckJob> checks;

    const LieAlgebra& algebra(const std::string& name) const { return algebras.at(name); }
};

/// Builds algebras (validating Jacobi, closing matrix generators) and
/// resolves every declaration; throws SpecError.
Elaboration elaborate(const SpecDocument& doc);

/// Runs the check directives in document order; independent directives
/// run concurrently when threads > 1.
std::vector<ObstructionReport> run_checks(const Elaboration& elab, unsigned threads = 1,
                                          const std::optional<std::vector<std::string>>& criteria = std::nullopt);

} // namespace kleinobs
