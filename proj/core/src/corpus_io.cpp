#include "transcite/corpus_io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "transcite/error.hpp"

namespace transcite {

using json = nlohmann::ordered_json;

void write_corpus_ndjson(const Corpus& corpus, std::ostream& out) {
  for (const auto& rec : corpus.records) {
    json j;
    j["id"] = rec.id;
    j["authors"] = rec.authors;
    if (rec.year)
      j["year"] = *rec.year;
    else
      j["year"] = nullptr;
    j["source"] = rec.source;
    j["doc_type"] = rec.doc_type.name();
    json refs = json::array();
    for (const auto& key : rec.cited_refs) refs.push_back(format_key(key));
    j["cited_refs"] = std::move(refs);
    out << j.dump() << '\n';
  }
}

void write_corpus_ndjson_file(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path.string());
  write_corpus_ndjson(corpus, out);
}

Corpus read_corpus_ndjson(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error("MalformedRecord",
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    BibRecord rec;
    rec.id = j.value("id", "");
    for (const auto& a : j.value("authors", json::array()))
      rec.authors.push_back(a.get<std::string>());
    if (j.contains("year") && !j["year"].is_null()) rec.year = j["year"].get<int>();
    rec.source = j.value("source", "");
    rec.doc_type = DocType::classify(j.value("doc_type", ""));
    for (const auto& r : j.value("cited_refs", json::array())) {
      auto key = parse_cited_ref(r.get<std::string>());
      if (key) rec.cited_refs.push_back(std::move(*key));
    }
    corpus.records.push_back(std::move(rec));
  }
  corpus.recompute_bounds();
  return corpus;
}

Corpus read_corpus_ndjson_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  return read_corpus_ndjson(in);
}

} // namespace transcite
