#pragma once

#include <filesystem>
#include <iosfwd>

#include "transcite/bib.hpp"

namespace transcite {

/// Newline-delimited JSON, one record per line with fields
/// id, authors, year, source, doc_type, cited_refs (canonical key strings).
void write_corpus_ndjson(const Corpus& corpus, std::ostream& out);
void write_corpus_ndjson_file(const Corpus& corpus, const std::filesystem::path& path);

Corpus read_corpus_ndjson(std::istream& in);
Corpus read_corpus_ndjson_file(const std::filesystem::path& path);

} // namespace transcite
