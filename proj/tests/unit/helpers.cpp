#include "helpers.hpp"

namespace testing {

scimet::BibRecord record(int year, std::vector<std::string> authors, std::vector<std::string> countries,
                         std::int64_t cites) {
    scimet::BibRecord r;
    r.id = "T:" + std::to_string(year);
    r.year = year;
    r.authors = std::move(authors);
    r.countries = {countries.begin(), countries.end()};
    r.citation_count = cites;
    r.doc_type = "Article";
    r.language = "English";
    r.journal = "X";
    return r;
}

}  // namespace testing
