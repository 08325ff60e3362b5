#pragma once

// Shuffle regularization reg : h -> h^0, the constant term of the
// decomposition h = h^0[x, y] with respect to the shuffle product.

#include <vector>

#include "mzv/words.hpp"

namespace mzv {

/// w = y^m core x^n with core admissible (or empty) and m, n maximal.
struct StrippedWord {
    int leading_y = 0;
    Word core;
    int trailing_x = 0;
    friend bool operator==(const StrippedWord&, const StrippedWord&) = default;
};

StrippedWord strip(Word w);

/// reg(y^m w x^n) = sum_{i<=m, j<=n} (-1)^{i+j} y^i sh (y^{m-i} w x^{n-j}) sh x^j.
/// Memoized per word; the cache is shared and safe for concurrent use.
const NCPoly& reg(Word w);
NCPoly reg(const NCPoly& p);

/// One summand y^i sh core sh x^j of the decomposition of a word.
struct DecompositionTerm {
    int i = 0;
    int j = 0;
    NCPoly core; // supported on admissible words
};

struct Decomposition {
    std::vector<DecompositionTerm> terms; // zero cores are omitted

    /// sum of y^i sh core sh x^j; equals the decomposed word.
    NCPoly reconstruct() const;
};

/// y^m w x^n = sum_{i,j} y^i sh reg(y^{m-i} w x^{n-j}) sh x^j.
Decomposition decompose(Word w);

} // namespace mzv
