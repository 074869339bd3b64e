#include "transcite/bib.hpp"

#include <algorithm>
#include <cctype>

namespace transcite {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string upper_collapse(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

void rstrip_periods_and_space(std::string& s) {
  while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
}

bool is_four_digit_year(std::string_view s) {
  if (s.size() != 4) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::vector<std::string_view> split_segments(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view seg = trim(s.substr(start, comma - start));
    if (!seg.empty()) out.push_back(seg);
    start = comma + 1;
  }
  return out;
}

} // namespace

DocType DocType::classify(std::string_view dt) {
  std::string norm = upper_collapse(dt);
  DocType out;
  out.raw = std::string(trim(dt));
  if (norm == "ARTICLE") {
    out.kind = Kind::Article;
  } else if (norm == "REVIEW") {
    out.kind = Kind::Review;
  } else if (norm == "EDITORIAL" || norm == "EDITORIAL MATERIAL") {
    out.kind = Kind::Editorial;
  } else {
    out.kind = Kind::Other;
  }
  return out;
}

std::string DocType::name() const {
  switch (kind) {
    case Kind::Article: return "Article";
    case Kind::Review: return "Review";
    case Kind::Editorial: return "Editorial";
    case Kind::Other: return raw;
  }
  return raw;
}

std::string normalize_name(std::string_view s) {
  std::string out = upper_collapse(s);
  rstrip_periods_and_space(out);
  return out;
}

std::string normalize_source(std::string_view s) {
  std::string out = normalize_name(s);
  if (out.size() > 20) out.resize(20);
  // truncation may expose a trailing space or period; restore idempotence
  rstrip_periods_and_space(out);
  return out;
}

std::optional<CitedRefKey> parse_cited_ref(std::string_view raw) {
  auto segments = split_segments(raw);
  if (segments.empty()) return std::nullopt;

  CitedRefKey key;
  key.first_author = normalize_name(segments[0]);
  if (key.first_author.empty()) return std::nullopt;

  bool source_set = false;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    std::string_view seg = segments[i];
    if (!key.year && !source_set && is_four_digit_year(seg)) {
      key.year = std::stoi(std::string(seg));
      continue;
    }
    if (!source_set) {
      std::string src = normalize_source(seg);
      if (src.empty()) continue; // segment vanished under normalization
      key.source = std::move(src);
      source_set = true;
      continue;
    }
    // after the source: Vnnn volume, Pnnn page, DOI ignored, rest ignored
    if (!key.volume && seg.size() >= 2 && (seg[0] == 'V' || seg[0] == 'v') &&
        std::isdigit(static_cast<unsigned char>(seg[1]))) {
      key.volume = normalize_name(seg.substr(1));
      continue;
    }
    if (!key.page && seg.size() >= 2 && (seg[0] == 'P' || seg[0] == 'p') &&
        std::isalnum(static_cast<unsigned char>(seg[1]))) {
      key.page = normalize_name(seg.substr(1));
      continue;
    }
  }
  return key;
}

std::string format_key(const CitedRefKey& key) {
  std::string out = key.first_author;
  if (key.year) out += ", " + std::to_string(*key.year);
  if (!key.source.empty()) out += ", " + key.source;
  if (key.volume) out += ", V" + *key.volume;
  if (key.page) out += ", P" + *key.page;
  return out;
}

void Corpus::recompute_bounds() {
  year_min.reset();
  year_max.reset();
  for (const auto& rec : records) {
    if (!rec.year) continue;
    if (!year_min || *rec.year < *year_min) year_min = rec.year;
    if (!year_max || *rec.year > *year_max) year_max = rec.year;
  }
}

Corpus filter_corpus(const Corpus& corpus,
                     const std::set<DocType::Kind>& kinds,
                     const YearRange& years) {
  Corpus out;
  out.diagnostics = corpus.diagnostics;
  for (const auto& rec : corpus.records) {
    if (!kinds.contains(rec.doc_type.kind)) continue;
    if (!rec.year || !years.contains(*rec.year)) continue;
    out.records.push_back(rec);
  }
  out.recompute_bounds();
  return out;
}

} // namespace transcite
