#pragma once

#include <string>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/textprep.hpp"

namespace testutil {

// Three-document fixture used across suites; every expected number below it
// was derived by hand before the implementation existed.
//   T (author "0"): [metaverse, value, blockchain]
//   A (author "1"): [metaverse, value, exchange]
//   B (author "2"): [metaverse, experience]
// Canonical corpus order is T, A, B (author order); vocabulary is
// [blockchain, exchange, experience, metaverse, value].
inline cooc::Corpus c1_corpus() {
    return cooc::make_corpus({
        {"A", "1", "p", "metaverse value exchange"},
        {"B", "2", "p", "metaverse experience"},
        {"T", "0", "p", "metaverse value blockchain"},
    });
}

// Token sequences aligned with c1_corpus() document order.
inline std::vector<cooc::TokenSeq> c1_seqs() {
    return {
        {"T", {"metaverse", "value", "blockchain"}},
        {"A", {"metaverse", "value", "exchange"}},
        {"B", {"metaverse", "experience"}},
    };
}

} // namespace testutil
