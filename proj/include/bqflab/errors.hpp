#pragma once

#include <stdexcept>

namespace bqflab {

// A stated hypothesis of a lemma-style operation does not hold for the input.
struct hypothesis_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A postcondition that the mathematics guarantees failed to verify; indicates
// an implementation bug, not a bad input.
struct postcondition_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace bqflab
