#pragma once

#include <filesystem>
#include <string_view>

#include "transcite/bib.hpp"

namespace transcite {

enum class ExportFormat { FieldTagged };

/// Parse a field-tagged bibliographic export (two-letter tags at line start:
/// PT..ER records, EF end of file, continuation lines indented). Encoding is
/// auto-detected: valid UTF-8 is taken as-is, anything else is read as
/// Latin-1 and transcoded. Malformed records are reported in
/// Corpus::diagnostics and skipped; a file yielding no records at all raises
/// Error("EmptyFile").
Corpus parse_export(std::string_view bytes,
                    ExportFormat format = ExportFormat::FieldTagged);

Corpus parse_export_file(const std::filesystem::path& path,
                         ExportFormat format = ExportFormat::FieldTagged);

} // namespace transcite
