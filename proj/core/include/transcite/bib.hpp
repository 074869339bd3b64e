#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace transcite {

/// Document type of a bibliographic record. Unrecognized DT strings are kept
/// verbatim under Other.
struct DocType {
  enum class Kind { Article, Review, Editorial, Other };

  Kind kind = Kind::Other;
  std::string raw; // original DT field; compared only when kind == Other

  static DocType classify(std::string_view dt);
  std::string name() const;

  friend bool operator==(const DocType& a, const DocType& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Other || a.raw == b.raw;
  }
};

/// Canonical identity of a cited reference. All string fields are normalized
/// (see normalize_name / normalize_source); two keys are the same network
/// node iff all five fields compare equal.
struct CitedRefKey {
  std::string first_author;
  std::optional<int> year;
  std::string source;
  std::optional<std::string> volume;
  std::optional<std::string> page;

  /// Missing years order after every concrete year.
  int year_or_max() const {
    return year ? *year : std::numeric_limits<int>::max();
  }

  friend bool operator==(const CitedRefKey&, const CitedRefKey&) = default;

  friend bool operator<(const CitedRefKey& a, const CitedRefKey& b) {
    if (a.first_author != b.first_author) return a.first_author < b.first_author;
    if (a.year_or_max() != b.year_or_max()) return a.year_or_max() < b.year_or_max();
    if (a.source != b.source) return a.source < b.source;
    if (a.volume != b.volume) return a.volume < b.volume;
    return a.page < b.page;
  }
};

/// Uppercase (ASCII), trim, collapse internal whitespace runs, strip trailing
/// periods. Idempotent.
std::string normalize_name(std::string_view s);

/// normalize_name plus truncation to 20 characters, mirroring the cited-field
/// truncation convention of the source exports. Idempotent.
std::string normalize_source(std::string_view s);

/// Parse one CR line ("MARSHALL BJ, 1984, LANCET, V1, P1311") into a key.
/// Returns nullopt for unparseable input; callers count the loss and move on.
std::optional<CitedRefKey> parse_cited_ref(std::string_view raw);

/// Canonical printer: "AUTHOR, YEAR, SOURCE, Vvol, Ppage" with absent fields
/// omitted. parse_cited_ref(format_key(k)) == k for any parser-produced k.
std::string format_key(const CitedRefKey& key);

/// One parsed bibliographic record. cited_refs holds no duplicate keys.
struct BibRecord {
  std::string id;
  std::vector<std::string> authors;
  std::optional<int> year; // nullopt: record excluded from time slicing
  std::string source;
  DocType doc_type;
  std::vector<CitedRefKey> cited_refs;

  friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

/// Non-fatal issues collected while parsing an export file.
struct ParseDiagnostics {
  struct Issue {
    std::size_t line = 0;
    std::string message;
  };
  std::vector<Issue> malformed_records;
  std::size_t refs_dropped = 0; // unparseable CR lines
};

struct Corpus {
  std::vector<BibRecord> records;
  std::optional<int> year_min;
  std::optional<int> year_max;
  ParseDiagnostics diagnostics;

  /// Derive year bounds from the dated records.
  void recompute_bounds();

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

struct YearRange {
  int lo = 0;
  int hi = 0; // inclusive

  bool contains(int y) const { return y >= lo && y <= hi; }
};

/// Sub-corpus of records whose doc_type kind is in `kinds` and whose year is
/// present and inside `years`. The input corpus is untouched.
Corpus filter_corpus(const Corpus& corpus,
                     const std::set<DocType::Kind>& kinds,
                     const YearRange& years);

} // namespace transcite
