#include "transcite/wos.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "transcite/error.hpp"

namespace transcite {

namespace {

bool valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    std::size_t extra;
    if (c < 0x80) {
      extra = 0;
    } else if ((c >> 5) == 0x6) {
      extra = 1;
    } else if ((c >> 4) == 0xE) {
      extra = 2;
    } else if ((c >> 3) == 0x1E) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= bytes.size() && extra > 0) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(bytes[i + k]) >> 6) != 0x2) return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string latin1_to_utf8(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c < 0x80) {
      out.push_back(ch);
    } else {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

bool is_tag_line(std::string_view line, std::string_view& tag, std::string_view& value) {
  if (line.size() < 2) return false;
  if (!std::isupper(static_cast<unsigned char>(line[0]))) return false;
  if (!std::isupper(static_cast<unsigned char>(line[1])) &&
      !std::isdigit(static_cast<unsigned char>(line[1])))
    return false;
  if (line.size() > 2 && line[2] != ' ') return false;
  tag = line.substr(0, 2);
  value = line.size() > 3 ? line.substr(3) : std::string_view{};
  return true;
}

struct RecordBuilder {
  BibRecord rec;
  bool open = false;
  bool seen_cr = false;

  void reset() { *this = RecordBuilder{}; }

  void add_ref(std::string_view raw, ParseDiagnostics& diag) {
    auto key = parse_cited_ref(raw);
    if (!key) {
      if (!std::string_view(rstrip(raw)).empty()) ++diag.refs_dropped;
      return;
    }
    for (const auto& existing : rec.cited_refs)
      if (existing == *key) return; // collapse duplicate CR lines
    rec.cited_refs.push_back(std::move(*key));
  }
};

} // namespace

Corpus parse_export(std::string_view bytes, ExportFormat) {
  std::string decoded;
  std::string_view text = bytes;
  if (!valid_utf8(bytes)) {
    decoded = latin1_to_utf8(bytes);
    text = decoded;
  }

  Corpus corpus;
  RecordBuilder builder;
  std::string current_tag;
  std::size_t line_no = 0;
  std::size_t record_seq = 0;
  bool saw_ef = false;

  auto report = [&](std::size_t line, std::string msg) {
    corpus.diagnostics.malformed_records.push_back({line, std::move(msg)});
  };

  auto commit = [&]() {
    ++record_seq;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "R%06zu", record_seq);
    builder.rec.id = buf;
    corpus.records.push_back(std::move(builder.rec));
    builder.reset();
  };

  auto handle_field = [&](std::string_view tag, std::string_view value) {
    if (tag == "AU") {
      if (!value.empty()) builder.rec.authors.emplace_back(value);
    } else if (tag == "SO") {
      builder.rec.source = std::string(value);
    } else if (tag == "PY") {
      std::string y(value);
      try {
        std::size_t pos = 0;
        int year = std::stoi(y, &pos);
        if (pos == y.size() && year > 0 && y.size() == 4) builder.rec.year = year;
      } catch (const std::exception&) {
        // missing or malformed year: record kept, excluded from slicing
      }
    } else if (tag == "DT") {
      builder.rec.doc_type = DocType::classify(value);
    } else if (tag == "CR") {
      builder.seen_cr = true;
      if (!value.empty()) builder.add_ref(value, corpus.diagnostics);
    }
  };

  std::size_t pos = 0;
  while (pos <= text.size() && !saw_ef) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      if (pos >= text.size()) break;
      eol = text.size();
    }
    std::string_view line = rstrip(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;

    if (line.empty()) continue;

    if (line[0] == ' ' || line[0] == '\t') {
      // continuation of the current tag
      std::string_view value = line;
      while (!value.empty() && (value.front() == ' ' || value.front() == '\t'))
        value.remove_prefix(1);
      if (!builder.open || current_tag.empty()) continue;
      if (current_tag == "AU") {
        builder.rec.authors.emplace_back(value);
      } else if (current_tag == "CR") {
        builder.add_ref(value, corpus.diagnostics);
      } else if (current_tag == "SO") {
        if (!builder.rec.source.empty()) builder.rec.source += ' ';
        builder.rec.source += std::string(value);
      }
      continue;
    }

    std::string_view tag, value;
    if (!is_tag_line(line, tag, value)) {
      if (builder.open)
        report(line_no, "unrecognized line inside record, ignored");
      continue;
    }

    if (tag == "EF") {
      saw_ef = true;
      break;
    }
    if (tag == "FN" || tag == "VR") continue; // file header

    if (tag == "PT") {
      if (builder.open) {
        report(line_no, "new PT before ER; previous record skipped");
        builder.reset();
      }
      builder.open = true;
      current_tag = "PT";
      continue;
    }

    if (tag == "ER") {
      if (!builder.open) {
        report(line_no, "ER without matching PT");
      } else {
        commit();
      }
      current_tag.clear();
      continue;
    }

    if (!builder.open) {
      report(line_no, "field tag '" + std::string(tag) + "' before PT; skipped");
      current_tag.clear();
      continue;
    }

    current_tag = std::string(tag);
    handle_field(tag, value);
  }

  if (builder.open) {
    report(line_no, "record not closed by ER at end of input; skipped");
    builder.reset();
  }

  if (corpus.records.empty()) {
    throw Error("EmptyFile", "export contains no parseable records");
  }

  corpus.recompute_bounds();
  return corpus;
}

Corpus parse_export_file(const std::filesystem::path& path, ExportFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("IoError", "cannot open input file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_export(buf.str(), format);
}

} // namespace transcite
