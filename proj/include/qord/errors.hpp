#pragma once

#include <stdexcept>
#include <string>

namespace qord {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

struct DimensionError : Error { using Error::Error; };      // mismatched ambient dimensions
struct ContainmentError : Error { using Error::Error; };    // expected sublattice relation fails
struct InfiniteIndexError : Error { using Error::Error; };  // rank-deficient index query
struct NotAUnitError : Error { using Error::Error; };       // series has zero constant term where a unit is required
struct FieldError : Error { using Error::Error; };          // required root does not exist in Q
struct CompositionError : Error { using Error::Error; };    // substitution map is not diagonal-type
struct InversionError : Error { using Error::Error; };      // map factor is not a unit
struct SemigroupError : Error { using Error::Error; };      // invalid characteristic data
struct NotQuasiOrdinaryError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };    // r != 2 or g >= 2 where out of scope
struct NotEliminableError : Error { using Error::Error; };
struct AdmissibilityError : Error { using Error::Error; };  // coordinate change violates the shape constraints
struct NormalizationRequiredError : Error { using Error::Error; };
struct IndependenceError : Error { using Error::Error; };
struct InternalConsistencyError : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };          // malformed file or JSON

}  // namespace qord
