#ifndef CELLFROB_SPEC_FILE_HPP
#define CELLFROB_SPEC_FILE_HPP

#include <map>
#include <string>
#include <variant>

#include "cellfrob/cellular.hpp"

namespace cellfrob {

template <FieldScalar K>
struct ParsedInputT {
    AlgebraSpec<K> alg;
    CellDatum cd;
};

/// A parsed spec file, concretized over its ground field.
using ParsedInput = std::variant<ParsedInputT<Rational>, ParsedInputT<Fp>>;

/// Parses the JSON algebra-spec format.  All coefficients travel as strings;
/// every structural invariant (index ranges, bijective index map, acyclic
/// poset, prime modulus) is enforced here with addressed error messages.
ParsedInput parse_spec(const std::string& text);

/// Serializes back to the same format, canonically ordered; parsing the
/// output reproduces the input semantically.
std::string serialize_spec(const ParsedInput& input);

/// Builtin fixtures by name: "koenig-xi" (params: lambda, field),
/// "dual-numbers" (field), "matrix" (n, field).  field is "rational"
/// (default) or a prime written in decimal.
ParsedInput builtin_fixture(const std::string& name,
                            const std::map<std::string, std::string>& params);

std::string field_name(const ParsedInput& input);

} // namespace cellfrob

#endif
