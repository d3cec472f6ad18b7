#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/matrix.hpp"

namespace cooc {

// Per-author co-occurrence weights against a reference author, ranked by
// (weight descending, author ascending in natural order). The reference
// itself never appears among the rows.
struct AlignmentTable {
    AuthorId reference;
    std::vector<std::pair<AuthorId, std::int64_t>> rows;
    std::string phase;

    friend bool operator==(const AlignmentTable&, const AlignmentTable&) = default;
};

// Reference row of a row co-occurrence matrix, ranked. Throws InputError when
// the matrix is not of row kind or the reference is not one of its keys.
AlignmentTable alignment(const CooccurMatrix& m, const AuthorId& reference,
                         const std::string& phase = "");

// Pure ranking of an externally supplied weight map; the reference key is
// dropped if present. Throws InputError on a negative weight.
AlignmentTable rank_table(const std::map<AuthorId, std::int64_t>& weights,
                          const AuthorId& reference,
                          const std::string& phase = "");

} // namespace cooc
