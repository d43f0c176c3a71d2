#pragma once

#include "edst/translit.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edst {

enum class Role { entry_front, entry_side, entry_ground, entry_surface, total, heading, subscript, scheme };

std::string_view to_string(Role r);
std::optional<Role> parse_role(std::string_view text);
bool is_entry(Role r);

enum Flag : unsigned {
  flag_restored = 1u << 0,
  flag_defective = 1u << 1,
  flag_reversed = 1u << 2,
  flag_sic = 1u << 3,
  flag_nonstandard = 1u << 4,
  flag_omitted_entry = 1u << 5,
};

std::string flags_to_string(unsigned flags);

struct CorpusRecord {
  std::string text_id;
  std::string face;
  std::string column;
  int line = 0;
  Role role = Role::entry_front;
  ContextId context = ContextId::ed3a;
  std::string transliteration;
  unsigned flags = 0;
  std::string corrected;
  std::string note;

  std::string source;
  std::size_t source_line = 0;

  bool has(Flag f) const { return (flags & f) != 0; }
  std::string position() const;  // "obv ii 14"
};

struct EmbeddedFile {
  const char* name;
  const char* content;
};

// Corpus files compiled into the library.
std::span<const EmbeddedFile> embedded_corpus();

// Parses and validates one TSV file. Throws CorpusError naming the line.
std::vector<CorpusRecord> parse_corpus(std::string_view content, const std::string& source);
std::vector<CorpusRecord> load_corpus_file(const std::filesystem::path& path);
std::vector<CorpusRecord> load_corpus_dir(const std::filesystem::path& dir);
std::vector<CorpusRecord> load_embedded_corpus();
// EDST_CORPUS_DIR if set, otherwise the embedded copy.
std::vector<CorpusRecord> load_default_corpus();

std::span<const std::string_view> table_ids();
std::vector<CorpusRecord> records_for(std::span<const CorpusRecord> corpus, std::string_view text_id);

// Lenient for rows flagged defective, reversed, sic or nonstandard.
ParseMode parse_mode_for(const CorpusRecord& r);
MeasureExpression parse_record(const CorpusRecord& r, bool apply_corrections = true);
Quantity record_value(const CorpusRecord& r, bool apply_corrections = true);

Quantity sum_column(std::span<const CorpusRecord> records, Role role);

struct GeneratedCell {
  std::string face;
  std::string column;
  int line = 0;
  Role role = Role::entry_front;
  ContextId context = ContextId::ed3a;
  Quantity value;
  std::string text;
  std::string derivation;  // human-readable steps
  std::size_t row = 0;     // 1-based table row
};

struct TableSpec {
  std::string text_id;
  std::vector<GeneratedCell> cells;

  std::size_t row_count() const;
};

// Recomputes a table from its first principles. T4 reads its cut-and-paste
// schemes from the corpus.
TableSpec generate(std::string_view text_id, std::span<const CorpusRecord> corpus);
TableSpec generate(std::string_view text_id);

std::string render_table_translit(const TableSpec& table, const RenderConventions& conv = {});
std::string render_table_tsv(const TableSpec& table);

enum class VerifyLevel { value, string };
enum class RowStatus { exact, value_equal, mismatch, missing, extra };

std::string_view to_string(RowStatus s);
std::string_view to_string(VerifyLevel l);

struct RowDiff {
  std::string position;
  Role role = Role::entry_front;
  RowStatus status = RowStatus::exact;
  std::string corpus_text;
  std::string generated_text;
  std::optional<Quantity> corpus_value;
  std::optional<Quantity> generated_value;
  unsigned flags = 0;
};

struct DiffReport {
  std::string text_id;
  VerifyLevel level = VerifyLevel::value;
  std::vector<RowDiff> rows;

  std::size_t count(RowStatus s) const;
  bool passed() const;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::value;
  bool apply_corrections = true;
};

DiffReport verify(std::string_view text_id, std::span<const CorpusRecord> corpus,
                  const VerifyOptions& options = {});

}  // namespace edst
