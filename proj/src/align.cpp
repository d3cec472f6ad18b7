#include "cooc/align.hpp"

#include <algorithm>
#include <cstdint>

#include "cooc/errors.hpp"

namespace cooc {

namespace {

void rank_rows(AlignmentTable& t) {
    std::sort(t.rows.begin(), t.rows.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second)
                      return a.second > b.second;
                  return natural_less(a.first, b.first);
              });
}

} // namespace

AlignmentTable alignment(const CooccurMatrix& m, const AuthorId& reference,
                         const std::string& phase) {
    if (m.kind != CooccurKind::row_cooccurrence)
        throw InputError("alignment requires a row co-occurrence matrix");
    const auto ref = m.key_index(reference);

    AlignmentTable t{reference, {}, phase};
    t.rows.reserve(m.keys.size() - 1);
    for (std::size_t i = 0; i < m.keys.size(); ++i) {
        if (i == ref)
            continue;
        t.rows.emplace_back(m.keys[i], m.entry(ref, i));
    }
    rank_rows(t);
    return t;
}

AlignmentTable rank_table(const std::map<AuthorId, std::int64_t>& weights,
                          const AuthorId& reference,
                          const std::string& phase) {
    AlignmentTable t{reference, {}, phase};
    t.rows.reserve(weights.size());
    for (const auto& [author, w] : weights) {
        if (w < 0)
            throw InputError("negative weight for author \"" + author + "\"");
        if (author == reference)
            continue;
        t.rows.emplace_back(author, w);
    }
    rank_rows(t);
    return t;
}

} // namespace cooc
