#include "edst/corpus.hpp"

#include "edst/errors.hpp"
#include "edst/procedures.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace edst {

namespace {

constexpr std::array<std::string_view, 10> ids{"T1", "T2", "T3A", "T3B", "T4", "T5A", "T5B", "T5C", "T5D", "T5E"};

struct RoleName {
  Role role;
  std::string_view name;
};

constexpr std::array role_names{
    RoleName{Role::entry_front, "entry-front"},     RoleName{Role::entry_side, "entry-side"},
    RoleName{Role::entry_ground, "entry-ground"},   RoleName{Role::entry_surface, "entry-surface"},
    RoleName{Role::total, "total"},                 RoleName{Role::heading, "heading"},
    RoleName{Role::subscript, "subscript"},         RoleName{Role::scheme, "scheme"},
};

struct FlagName {
  Flag flag;
  std::string_view name;
};

constexpr std::array flag_names{
    FlagName{flag_restored, "restored"}, FlagName{flag_defective, "defective"},
    FlagName{flag_reversed, "reversed"}, FlagName{flag_sic, "sic"},
    FlagName{flag_nonstandard, "nonstandard"}, FlagName{flag_omitted_entry, "omitted-entry"},
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool surface_role(Role r) { return r == Role::entry_surface || r == Role::total; }

std::string key(std::string_view face, std::string_view column, int line, Role role) {
  return std::string(face) + " " + std::string(column) + " " + std::to_string(line) + " " + std::string(to_string(role));
}

}  // namespace

std::string_view to_string(Role r) {
  for (const auto& n : role_names)
    if (n.role == r) return n.name;
  return "";
}

std::optional<Role> parse_role(std::string_view text) {
  for (const auto& n : role_names)
    if (n.name == text) return n.role;
  return std::nullopt;
}

bool is_entry(Role r) {
  return r == Role::entry_front || r == Role::entry_side || r == Role::entry_ground || r == Role::entry_surface;
}

std::string flags_to_string(unsigned flags) {
  std::string out;
  for (const auto& n : flag_names) {
    if (flags & n.flag) {
      if (!out.empty()) out += ',';
      out += n.name;
    }
  }
  return out;
}

std::string CorpusRecord::position() const { return face + " " + column + " " + std::to_string(line); }

ParseMode parse_mode_for(const CorpusRecord& r) {
  return (r.flags & (flag_defective | flag_reversed | flag_sic | flag_nonstandard)) ? ParseMode::lenient
                                                                                   : ParseMode::strict;
}

MeasureExpression parse_record(const CorpusRecord& r, bool apply_corrections) {
  const std::string& text = apply_corrections && !r.corrected.empty() ? r.corrected : r.transliteration;
  return parse_measure(text, context_lookup(r.context), parse_mode_for(r));
}

Quantity record_value(const CorpusRecord& r, bool apply_corrections) {
  return evaluate(parse_record(r, apply_corrections).value, context_lookup(r.context));
}

std::vector<CorpusRecord> parse_corpus(std::string_view content, const std::string& source) {
  std::vector<CorpusRecord> records;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  for (const std::string& raw_line : split(content, '\n')) {
    ++line_no;
    std::string line = raw_line;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 10)
      throw CorpusError(source, line_no, "expected 10 tab-separated fields, found " + std::to_string(fields.size()));
    CorpusRecord r;
    r.source = source;
    r.source_line = line_no;
    r.text_id = fields[0];
    if (std::find(ids.begin(), ids.end(), r.text_id) == ids.end())
      throw CorpusError(source, line_no, "unknown text id '" + r.text_id + "'");
    r.face = fields[1];
    if (r.face != "obv" && r.face != "rev") throw CorpusError(source, line_no, "face must be obv or rev");
    r.column = fields[2];
    if (r.column.empty() || r.column.find_first_not_of("ivx") != std::string::npos)
      throw CorpusError(source, line_no, "column must be a lowercase roman numeral");
    try {
      std::size_t used = 0;
      r.line = std::stoi(fields[3], &used);
      if (used != fields[3].size() || r.line <= 0) throw std::invalid_argument("line");
    } catch (const std::exception&) {
      throw CorpusError(source, line_no, "bad line number '" + fields[3] + "'");
    }
    auto role = parse_role(fields[4]);
    if (!role) throw CorpusError(source, line_no, "unknown role '" + fields[4] + "'");
    r.role = *role;
    auto ctx = parse_context_id(fields[5]);
    if (!ctx) throw CorpusError(source, line_no, "unknown context '" + fields[5] + "'");
    r.context = *ctx;
    r.transliteration = fields[6];
    if (r.transliteration.empty()) throw CorpusError(source, line_no, "empty transliteration");
    if (!fields[7].empty()) {
      for (const std::string& f : split(fields[7], ',')) {
        auto it = std::find_if(flag_names.begin(), flag_names.end(), [&](const FlagName& n) { return n.name == f; });
        if (it == flag_names.end()) throw CorpusError(source, line_no, "unknown flag '" + f + "'");
        r.flags |= it->flag;
      }
    }
    r.corrected = fields[8];
    r.note = fields[9];
    if (r.has(flag_sic) && r.corrected.empty() && r.transliteration.find("!(") == std::string::npos)
      throw CorpusError(source, line_no, "sic row needs a corrected reading");
    if (!seen.insert(r.text_id + " " + key(r.face, r.column, r.line, r.role)).second)
      throw CorpusError(source, line_no, "duplicate position");

    try {
      if (is_entry(r.role) || r.role == Role::total) {
        const auto& c = context_lookup(r.context);
        if ((c.dimension == Dimension::surface) != surface_role(r.role))
          throw CorpusError(source, line_no, std::string(to_string(r.role)) + " in " + std::string(to_string(r.context)));
        parse_record(r, false);
        if (!r.corrected.empty()) parse_record(r, true);
      } else if (r.role == Role::scheme) {
        parse_scheme(r.transliteration);
      }
    } catch (const CorpusError&) {
      throw;
    } catch (const Error& e) {
      throw CorpusError(source, line_no, e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<CorpusRecord> load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), path.filename().string());
}

std::vector<CorpusRecord> load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw CorpusError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".tsv") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusRecord> all;
  for (const auto& f : files) {
    auto recs = load_corpus_file(f);
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return all;
}

std::vector<CorpusRecord> load_embedded_corpus() {
  std::vector<CorpusRecord> all;
  for (const EmbeddedFile& f : embedded_corpus()) {
    auto recs = parse_corpus(f.content, f.name);
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return all;
}

std::vector<CorpusRecord> load_default_corpus() {
  if (const char* dir = std::getenv("EDST_CORPUS_DIR"); dir && *dir) return load_corpus_dir(dir);
  return load_embedded_corpus();
}

std::span<const std::string_view> table_ids() { return ids; }

std::vector<CorpusRecord> records_for(std::span<const CorpusRecord> corpus, std::string_view text_id) {
  std::vector<CorpusRecord> out;
  for (const auto& r : corpus)
    if (r.text_id == text_id) out.push_back(r);
  return out;
}

Quantity sum_column(std::span<const CorpusRecord> records, Role role) {
  Quantity sum{surface_role(role) ? Dimension::surface : Dimension::length, 0};
  for (const auto& r : records)
    if (r.role == role) sum = sum + record_value(r);
  return sum;
}

std::size_t TableSpec::row_count() const {
  std::size_t n = 0;
  for (const auto& c : cells) n = std::max(n, c.row);
  return n;
}

namespace {

struct Slot {
  std::string face;
  std::string column;
  int line;
};

std::vector<Slot> slots(std::initializer_list<std::tuple<const char*, const char*, int>> columns) {
  std::vector<Slot> out;
  for (const auto& [face, column, n] : columns)
    for (int l = 1; l <= n; ++l) out.push_back({face, column, l});
  return out;
}

const auto& ed3a() { return context_lookup(ContextId::ed3a); }
const auto& ctx_g() { return context_lookup(ContextId::g); }

// Writes a length or surface with the unit shown or left to the heading.
std::string write(const Quantity& q, const MetrologicalContext& ctx, bool show_unit,
                  std::vector<QualifierMark> qualifiers = {}, const Unit* start = nullptr) {
  CompoundValue v = decompose_canonical(q, ctx, {start});
  if (show_unit)
    for (auto& p : v.segments.front().pieces) p.unit_explicit = true;
  return render_value(v, ctx, {}, qualifiers);
}

std::string write(const CompoundValue& v, const MetrologicalContext& ctx) { return render_value(v, ctx); }

std::string ninda(const Rational& r) { return to_mixed_string(r) + " ninda"; }

std::string bordering_text(const Quantity& side) {
  std::string out;
  for (const BorderStep& s : bordering_derivation(side)) {
    if (!out.empty()) out += "\n";
    out += "  " + ninda(s.from_side.magnitude) + " -> " + ninda(s.to_side.magnitude) + ":";
    for (const BorderPiece& p : s.pieces)
      out += " " + p.kind + " " + to_mixed_string(p.length.magnitude) + "x" + to_mixed_string(p.width.magnitude) + " = " +
             p.description;
    out += "; square " + to_string(s.total.magnitude / 100) + " iku";
  }
  return out;
}

class Generator {
 public:
  explicit Generator(std::string_view id) { spec_.text_id = id; }

  void cell(const Slot& at, Role role, const MetrologicalContext& ctx, const Quantity& v, std::string text,
            std::string derivation = {}) {
    bool starts = role == Role::entry_front || role == Role::entry_side || role == Role::total;
    std::string key = at.face + " " + at.column + " " + std::to_string(at.line);
    if (starts && key != row_key_) {
      ++row_;
      row_key_ = key;
    }
    spec_.cells.push_back({at.face, at.column, at.line, role, ctx.id, v, std::move(text), std::move(derivation), row_});
  }

  TableSpec take() { return std::move(spec_); }

 private:
  TableSpec spec_;
  std::size_t row_ = 0;
  std::string row_key_;
};

// Squares in ninda and iku, 1(gesz'u) down to 5 ninda.
TableSpec square_list(std::string_view id) {
  const bool t1 = id == "T1";
  std::vector<int> sides;
  for (int k = 10; k >= 1; --k) sides.push_back(60 * k);
  for (int k = 5; k >= 1; --k) sides.push_back(10 * k);
  sides.push_back(5);
  std::vector<Slot> at = t1 ? slots({{"obv", "i", 10}, {"rev", "i", 6}}) : slots({{"obv", "i", 16}});
  Generator g(id);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    Quantity s = length(sides[i]);
    Quantity a = square_area(s);
    std::string front, side = write(s, ed3a(), false, {{Qualifier::sa2, Placement::after}});
    if (i == 0)
      front = t1 ? write(s, ed3a(), true, {{Qualifier::sag, Placement::after}})
                 : write(s, ed3a(), false, {{Qualifier::sag, Placement::after}, {Qualifier::gan2, Placement::after}});
    else
      front = write(s, ed3a(), false);
    std::string area = write(a, ctx_g(), t1 && i == 0);
    g.cell(at[i], Role::entry_front, ed3a(), s, front);
    g.cell(at[i], Role::entry_side, ed3a(), s, side);
    g.cell(at[i], Role::entry_surface, ctx_g(), a, area,
           ninda(s.magnitude) + " squared = " + to_string(a.magnitude) + " sar\n" + bordering_text(s));
  }
  return g.take();
}

TableSpec t2() {
  Generator g("T2");
  Quantity total = surface(0);
  int line = 1;
  for (int f : {5, 10, 20, 30, 40, 50}) {
    Slot at{"obv", "i", line};
    Quantity front = length(f);
    // The ground is always sixty fronts.
    Quantity ground = front * Rational(60);
    Quantity a = rect_area(front, ground);
    total = total + a;
    g.cell(at, Role::entry_front, ed3a(), front,
           line == 1 ? write(front, ed3a(), true, {{Qualifier::sag, Placement::before}}) : write(front, ed3a(), false));
    g.cell(at, Role::entry_ground, ed3a(), ground, write(ground, ed3a(), false, {{Qualifier::ki, Placement::after}}));
    g.cell(at, Role::entry_surface, ctx_g(), a, write(a, ctx_g(), line == 1),
           ninda(f) + " x " + ninda(60 * f) + " = " + to_string(a.magnitude) + " sar = " + to_string(a.magnitude / 100) +
               " iku");
    ++line;
  }
  g.cell({"obv", "i", 7}, Role::total, ctx_g(), total, write(total, ctx_g(), false),
         "sum of the six surfaces = " + to_string(total.magnitude / 100) + " iku");
  return g.take();
}

TableSpec t3b() {
  Generator g("T3B");
  const Quantity ground = length(600);
  std::vector<Quantity> fronts;
  for (int k = 10; k >= 1; --k) fronts.push_back(length(k));
  for (int k = 3; k >= 1; --k) fronts.push_back(length(Rational(k, 4)));
  fronts.push_back(length(Rational(1, 6)));
  int line = 1;
  for (const Quantity& front : fronts) {
    Slot at{"obv", "ii", line};
    Quantity a = rect_area(front, ground);
    std::string ftext = line == 1 ? write(front, ed3a(), true, {{Qualifier::sag, Placement::before}})
                                  : write(front, ed3a(), front.magnitude < 1);
    g.cell(at, Role::entry_front, ed3a(), front, ftext);
    g.cell(at, Role::entry_ground, ed3a(), ground, write(ground, ed3a(), false, {{Qualifier::sa2, Placement::after}}));
    g.cell(at, Role::entry_surface, ctx_g(), a, write(a, ctx_g(), false),
           ninda(front.magnitude) + " x " + ninda(600) + " = " + to_string(a.magnitude) + " sar = " +
               to_string(a.magnitude / 100) + " iku");
    ++line;
  }
  return g.take();
}

Slot t4_slot(int line) {
  if (line <= 6) return {"obv", "i", line};
  if (line <= 14) return {"obv", "ii", line};
  if (line <= 20) return {"obv", "iii", line};
  return {"rev", "i", line};
}

TableSpec t4(std::span<const CorpusRecord> corpus) {
  const auto& adab = context_lookup(ContextId::adab);
  const auto& sar = context_lookup(ContextId::sar_adab);
  std::map<std::string, const CorpusRecord*> schemes;
  for (const auto& r : corpus)
    if (r.text_id == "T4" && r.role == Role::scheme) schemes[r.position()] = &r;
  struct Side {
    int count;
    const Unit* unit;
  };
  std::vector<Side> sides;
  for (int k = 1; k <= 11; ++k) sides.push_back({k, &units::kusz3});
  // The scribe passed from 11 kusz3 to 3 gi; the 1 ninda entry is not on the tablet.
  sides.push_back({3, &units::gi});
  Generator g("T4");
  int line = 1;
  for (const Side& sd : sides) {
    Quantity s = length(sd.unit->ratio() * sd.count);
    g.cell(t4_slot(line), Role::entry_side, adab, s,
           write(s, adab, true, {{Qualifier::sa2, Placement::after}}, sd.unit));
    ++line;
    Slot at = t4_slot(line);
    Quantity a = square_area(s);
    std::string position = at.face + " " + at.column + " " + std::to_string(at.line);
    std::string text, how;
    Rational sze = a.magnitude * 10800;
    if (auto it = schemes.find(position); it != schemes.end()) {
      CutPasteScheme scheme = parse_scheme(it->second->transliteration);
      text = write(cutpaste_derive(s, scheme, sar), sar);
      how = std::to_string(sd.count) + " " + std::string(sd.unit->name) + " squared = " + to_string(sze) +
            " sze\n  scheme in kusz3: " + render_scheme(scheme);
      for (const Segment& seg : cutpaste_derive(s, scheme, sar).segments) {
        Rational part = 0;
        for (const Piece& p : seg.pieces) part += p.value();
        how += "\n  " + std::string(seg.sign == SegmentSign::plus ? "+ " : "- ") + to_string(part * 10800) + " sze";
      }
    } else {
      text = write(a, sar, true);
      how = std::to_string(sd.count) + " " + std::string(sd.unit->name) + " squared = " + to_string(sze) + " sze";
    }
    g.cell(at, Role::entry_surface, sar, a, text, how);
    ++line;
  }
  return g.take();
}

std::string s_count(int k) { return render_numeral(encode_canonical(k, NumeralSystem::S)); }

TableSpec t5(std::string_view id) {
  const auto& zab = context_lookup(ContextId::zab);
  const auto& sar = context_lookup(ContextId::sar_zab);
  std::vector<Slot> at = slots({{"obv", "i", 22},
                                {"obv", "ii", 22},
                                {"obv", "iii", 17},
                                {"obv", "iv", 12},
                                {"obv", "v", 17},
                                {"obv", "vi", 19},
                                {"obv", "vii", 18},
                                {"rev", "i", 15},
                                {"rev", "ii", 12},
                                {"rev", "iii", 2}});
  std::size_t next = 0;
  std::map<std::string, Generator> gens;
  for (auto t : {"T5A", "T5B", "T5C", "T5D", "T5E"}) gens.emplace(t, Generator(t));

  std::vector<int> sides;
  for (int k = 1; k <= 10; ++k) sides.push_back(k);
  for (int k = 2; k <= 5; ++k) sides.push_back(10 * k);
  for (int k = 1; k <= 9; ++k) sides.push_back(60 * k);
  for (int k = 1; k <= 5; ++k) sides.push_back(600 * k);
  for (int k = 1; k <= 9; ++k) sides.push_back(3600 * k);
  sides.push_back(36000);
  for (int n : sides) {
    Quantity s = length(n);
    Quantity a = square_area(s);
    gens.at("T5A").cell(at[next++], Role::entry_side, zab, s, write(s, zab, n == 1, {{Qualifier::sa2, Placement::after}}));
    std::string how = ninda(n) + " squared = " + to_string(a.magnitude) + " sar";
    if (n < 10)
      gens.at("T5A").cell(at[next++], Role::entry_surface, sar, a, write(a, sar, true), how);
    else
      gens.at("T5A").cell(at[next++], Role::entry_surface, ctx_g(), a, write(a, ctx_g(), true),
                          how + " = " + to_string(a.magnitude / 100) + " iku");
  }
  struct Sub {
    const char* id;
    const Unit* unit;
  };
  for (const Sub& sub : {Sub{"T5B", &units::nig2_kas7}, Sub{"T5C", &units::kusz3_numun}, Sub{"T5D", &units::gisz_bad},
                         Sub{"T5E", &units::szu_bad}}) {
    SexagesimalSeed seed = seed_square(*sub.unit);
    for (int k = 1; k <= 10; ++k) {
      Quantity s = length(sub.unit->ratio() * k);
      Quantity a = scale_seed_value(seed, k);
      gens.at(sub.id).cell(at[next++], Role::entry_side, zab, s,
                           s_count(k) + " " + std::string(sub.unit->name) + " sa2");
      gens.at(sub.id).cell(at[next++], Role::entry_surface, sar, a, write(scale_seed(seed, k, sar), sar),
                           std::to_string(k * k) + " x seed (" + render_value(seed.notation, sar, {Script::ascii, Notation::arabic}) +
                               ") = " + to_string(a.magnitude) + " sar");
    }
  }
  return gens.at(std::string(id)).take();
}

}  // namespace

TableSpec generate(std::string_view text_id, std::span<const CorpusRecord> corpus) {
  if (text_id == "T1" || text_id == "T3A") return square_list(text_id);
  if (text_id == "T2") return t2();
  if (text_id == "T3B") return t3b();
  if (text_id == "T4") return t4(corpus);
  if (text_id.size() == 3 && text_id.substr(0, 2) == "T5" && text_id[2] >= 'A' && text_id[2] <= 'E') return t5(text_id);
  throw CorpusError("unknown table '" + std::string(text_id) + "'");
}

TableSpec generate(std::string_view text_id) {
  static const std::vector<CorpusRecord> corpus = load_embedded_corpus();
  return generate(text_id, corpus);
}

std::string render_table_translit(const TableSpec& table, const RenderConventions& conv) {
  std::ostringstream out;
  std::size_t row = 0;
  for (const auto& c : table.cells) {
    std::string text = conv.script == Script::unicode ? to_unicode(c.text) : c.text;
    if (c.row != row) {
      if (row != 0) out << "\n";
      row = c.row;
      out << c.face << " " << c.column << " " << c.line << "\t" << text;
    } else {
      out << "\t" << text;
    }
  }
  out << "\n";
  return out.str();
}

std::string render_table_tsv(const TableSpec& table) {
  std::ostringstream out;
  out << "# text_id\tface\tcolumn\tline\trole\tcontext_id\ttransliteration\tflags\tcorrected\tnote\n";
  for (const auto& c : table.cells)
    out << table.text_id << '\t' << c.face << '\t' << c.column << '\t' << c.line << '\t' << to_string(c.role) << '\t'
        << to_string(c.context) << '\t' << c.text << "\t\t\t\n";
  return out.str();
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::exact: return "exact";
    case RowStatus::value_equal: return "value-equal";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::missing: return "missing";
    case RowStatus::extra: return "extra";
  }
  return "";
}

std::string_view to_string(VerifyLevel l) { return l == VerifyLevel::value ? "value" : "string"; }

std::size_t DiffReport::count(RowStatus s) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const RowDiff& r) { return r.status == s; }));
}

bool DiffReport::passed() const {
  return count(RowStatus::mismatch) == 0 && count(RowStatus::missing) == 0 && count(RowStatus::extra) == 0;
}

DiffReport verify(std::string_view text_id, std::span<const CorpusRecord> corpus, const VerifyOptions& options) {
  DiffReport report;
  report.text_id = text_id;
  report.level = options.level;
  TableSpec table = generate(text_id, corpus);
  std::map<std::string, const CorpusRecord*> pending;
  std::vector<std::string> order;
  for (const auto& r : corpus) {
    if (r.text_id != text_id || !(is_entry(r.role) || r.role == Role::total)) continue;
    std::string k = key(r.face, r.column, r.line, r.role);
    pending[k] = &r;
    order.push_back(k);
  }
  const unsigned skip = flag_defective | flag_reversed | flag_sic | flag_nonstandard;
  for (const auto& c : table.cells) {
    RowDiff d;
    d.position = c.face + " " + c.column + " " + std::to_string(c.line);
    d.role = c.role;
    d.generated_text = c.text;
    d.generated_value = c.value;
    auto it = pending.find(key(c.face, c.column, c.line, c.role));
    if (it == pending.end()) {
      d.status = RowStatus::missing;
      report.rows.push_back(std::move(d));
      continue;
    }
    const CorpusRecord& r = *it->second;
    pending.erase(it);
    d.corpus_text = r.transliteration;
    d.flags = r.flags;
    Quantity v = record_value(r, options.apply_corrections);
    d.corpus_value = v;
    std::string normalized = render_measure(parse_record(r, false));
    if (v != c.value)
      d.status = RowStatus::mismatch;
    else if (normalized == c.text)
      d.status = RowStatus::exact;
    else if (options.level == VerifyLevel::string && !(r.flags & skip))
      d.status = RowStatus::mismatch;
    else
      d.status = RowStatus::value_equal;
    report.rows.push_back(std::move(d));
  }
  for (const auto& k : order) {
    auto it = pending.find(k);
    if (it == pending.end()) continue;
    RowDiff d;
    d.position = it->second->position();
    d.role = it->second->role;
    d.status = RowStatus::extra;
    d.corpus_text = it->second->transliteration;
    d.flags = it->second->flags;
    report.rows.push_back(std::move(d));
  }
  return report;
}

}  // namespace edst
