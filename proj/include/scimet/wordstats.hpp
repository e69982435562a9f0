#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scimet/corpus.hpp"

namespace scimet {

enum class KeywordSource { author_keywords, keywords_plus };
KeywordSource parse_keyword_source(std::string_view name);

struct TermOptions {
    std::vector<KeywordSource> sources{KeywordSource::author_keywords};
    std::int64_t min_frequency = 1;
    std::optional<std::size_t> top_k;
};

// Whole keyword phrases, counted with ASCII case folding. Each entry is shown
// in its most frequent original spelling.
RankedList term_frequencies(const Corpus &corpus, const TermOptions &options = {});

RankedList count_terms(const std::vector<std::string> &occurrences, std::int64_t min_frequency = 1,
                       std::optional<std::size_t> top_k = std::nullopt);

std::string fold_case(std::string_view s);

}  // namespace scimet
