#pragma once
// Line-oriented text format for the library's objects.  A document is a
// sequence of named sections:
//
//   format rblie 1
//
//   lie_algebra g
//     basis H X Y
//     bracket 0 1 0 2 0      # [e0, e1] = 2 e1
//   end
//
// Tokens are whitespace-separated; '#' starts a comment; basis elements are
// addressed by 0-based index (names are display labels and need not be
// unique); every scalar is an exact GaussRat string -- no floats.
// Cross-references name sections defined earlier in the same document.
// emit(parse(t)) reparses to an equal Document.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rblie/relativerb.hpp"
#include "rblie/rotabaxter.hpp"

namespace rblie {

/// Parse failure with 1-based location.  Raised for malformed syntax,
/// references to missing or wrong-kind sections, and dimension mismatches.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    size_t line;
    size_t column;
};

struct DocLie {
    std::vector<std::string> basis;
    Tensor3 c;
    bool operator==(const DocLie&) const = default;
};

struct DocForm {
    std::string on;
    Matrix gram;
    bool operator==(const DocForm&) const = default;
};

struct DocMap {
    std::string from;
    std::string to;
    Matrix mat;
    bool operator==(const DocMap&) const = default;
};

struct DocRep {
    std::string of;
    size_t space = 0;
    std::vector<Matrix> mats;
    bool operator==(const DocRep&) const = default;
};

struct DocRB {
    std::string on;
    GaussRat weight;
    Matrix mat;
    bool operator==(const DocRB&) const = default;
};

struct DocQuadratic {
    std::string rb;
    std::string form;
    bool operator==(const DocQuadratic&) const = default;
};

struct DocRelative0 {
    std::string representation;
    Matrix mat;  // module -> algebra, dim(g) x space
    bool operator==(const DocRelative0&) const = default;
};

struct DocRelativeW {
    std::string module;
    std::string representation;
    GaussRat weight;
    Matrix mat;  // module -> algebra, dim(g) x dim(k)
    bool operator==(const DocRelativeW&) const = default;
};

struct DocPreLie {
    std::vector<std::string> basis;
    Tensor3 mult;
    bool operator==(const DocPreLie&) const = default;
};

struct DocPostLie {
    std::string lie;
    Tensor3 mult;
    bool operator==(const DocPostLie&) const = default;
};

struct DocReflection {
    std::string on;  // a quadratic_rb or rb section
    std::string variant = "skew";
    Matrix mat;
    bool operator==(const DocReflection&) const = default;
};

using DocObject = std::variant<DocLie, DocForm, DocMap, DocRep, DocRB, DocQuadratic, DocRelative0,
                               DocRelativeW, DocPreLie, DocPostLie, DocReflection>;

/// The section keyword for a stored object ("lie_algebra", "rb", ...).
std::string doc_kind(const DocObject& object);

struct Document {
    int format_version = 1;
    std::vector<std::pair<std::string, DocObject>> objects;  // insertion order

    bool operator==(const Document&) const = default;

    const DocObject* find(const std::string& name) const;

    /// Typed resolution into library objects.  Throws std::invalid_argument
    /// when the name is missing or of the wrong kind.
    LieAlgebra lie(const std::string& name) const;
    BilinearForm form(const std::string& name) const;
    Representation representation(const std::string& name) const;
    RotaBaxter rb(const std::string& name) const;
    QuadraticRB quadratic(const std::string& name) const;
    RelativeRB0 relative0(const std::string& name) const;
    RelativeRBW relativew(const std::string& name) const;
    PreLie prelie(const std::string& name) const;
    PostLie postlie(const std::string& name) const;

    /// Names of stored objects of one kind, in document order.
    std::vector<std::string> names_of_kind(const std::string& kind) const;

    void add(const std::string& name, DocObject object);
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& d);

/// Document builders for library objects (used by construct/catalog
/// commands).  Each appends the ingredients under derived names and returns
/// the name of the added root object.
std::string add_lie(Document& d, const std::string& name, const LieAlgebra& g);
std::string add_rb(Document& d, const std::string& name, const RotaBaxter& rb);
std::string add_quadratic(Document& d, const std::string& name, const QuadraticRB& q);
std::string add_relativew(Document& d, const std::string& name, const RelativeRBW& x);
std::string add_relative0(Document& d, const std::string& name, const RelativeRB0& x);
std::string add_prelie(Document& d, const std::string& name, const PreLie& p);
std::string add_postlie(Document& d, const std::string& name, const PostLie& p);
std::string add_reflection(Document& d, const std::string& name, const std::string& on,
                           const std::string& variant, const Matrix& tau);

}  // namespace rblie
