#include "scimet/wordstats.hpp"

#include <map>
#include <unordered_map>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

KeywordSource parse_keyword_source(std::string_view name) {
    if (name == "DE" || name == "author_keywords")
        return KeywordSource::author_keywords;
    if (name == "ID" || name == "keywords_plus")
        return KeywordSource::keywords_plus;
    throw DataError(fmt::format("unknown keyword source '{}'", name));
}

std::string fold_case(std::string_view s) {
    std::string out(s);
    for (char &c : out)
        if (c >= 'A' && c <= 'Z')
            c = static_cast<char>(c - 'A' + 'a');
    return out;
}

RankedList count_terms(const std::vector<std::string> &occurrences, std::int64_t min_frequency,
                       std::optional<std::size_t> top_k) {
    struct Group {
        std::int64_t total = 0;
        std::map<std::string, std::int64_t> spellings;
    };
    std::unordered_map<std::string, Group> groups;
    for (const auto &term : occurrences) {
        auto &g = groups[fold_case(term)];
        ++g.total;
        ++g.spellings[term];
    }
    std::vector<RankedEntry> entries;
    entries.reserve(groups.size());
    for (const auto &[key, g] : groups) {
        if (g.total < min_frequency)
            continue;
        // std::map iteration is label-ascending, so ties keep the smallest spelling.
        const std::string *best = nullptr;
        std::int64_t best_count = 0;
        for (const auto &[spelling, n] : g.spellings)
            if (n > best_count) {
                best = &spelling;
                best_count = n;
            }
        entries.push_back({*best, g.total});
    }
    RankedList list(std::move(entries));
    if (top_k && *top_k < list.size()) {
        std::vector<RankedEntry> kept(list.entries().begin(), list.entries().begin() + static_cast<long>(*top_k));
        return RankedList(std::move(kept));
    }
    return list;
}

RankedList term_frequencies(const Corpus &corpus, const TermOptions &options) {
    std::vector<std::string> occurrences;
    for (const auto &r : corpus.records())
        for (auto src : options.sources) {
            const auto &terms = src == KeywordSource::author_keywords ? r.keywords : r.keywords_plus;
            occurrences.insert(occurrences.end(), terms.begin(), terms.end());
        }
    return count_terms(occurrences, options.min_frequency, options.top_k);
}

}  // namespace scimet
