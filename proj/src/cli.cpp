#include "edst/cli.hpp"

#include "edst/corpus.hpp"
#include "edst/errors.hpp"
#include "edst/procedures.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace edst::cli {

namespace {

struct Options {
  std::string expr, expr2, ctx, from, to, len_ctx = "CTX-ED3A", surf_ctx = "CTX-G";
  std::string fraction, table_id, format = "translit", level = "value", corpus_dir;
  std::size_t row = 0;
  bool lenient = false, unicode = false, arabic = false, no_corrections = false;
};

RenderConventions conventions(const Options& o) {
  RenderConventions c;
  c.script = o.unicode ? Script::unicode : Script::ascii;
  c.notation = o.arabic ? Notation::arabic : Notation::translit;
  return c;
}

ParseMode mode(const Options& o) { return o.lenient ? ParseMode::lenient : ParseMode::strict; }

std::vector<CorpusRecord> corpus(const Options& o) {
  if (!o.corpus_dir.empty()) return load_corpus_dir(o.corpus_dir);
  return load_default_corpus();
}

int cmd_units(const Options& o, std::ostream& out) {
  const auto& ctx = context_lookup(o.ctx);
  out << to_string(ctx.id) << " (" << to_string(ctx.dimension) << ", System " << to_string(ctx.numeral_system) << ")\n";
  for (const auto& s : ctx.units) {
    out << s.unit->name << "\t" << to_string(s.unit->ratio()) << " " << base_unit_name(ctx.dimension);
    if (!s.fractions.empty() || !s.accepted.empty()) {
      out << "\tfractions:";
      for (auto f : s.fractions) out << " " << fraction_label(f);
      for (auto f : s.accepted) out << " " << fraction_label(f);
    }
    out << "\n";
  }
  return ok;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto& ctx = context_lookup(o.ctx);
  MeasureExpression e = parse_measure(o.expr, ctx, mode(o));
  Quantity q = evaluate(e.value, ctx);
  out << render_measure(e, conventions(o)) << "\n= " << to_string(q) << "\n";
  return ok;
}

int cmd_convert(const Options& o, std::ostream& out) {
  const auto& from = context_lookup(o.from);
  const auto& to = context_lookup(o.to);
  Quantity q = evaluate(parse_measure(o.expr, from, mode(o)).value, from);
  out << render_value(decompose_canonical(q, to), to, conventions(o)) << "\n";
  return ok;
}

Quantity length_of(const std::string& text, const MetrologicalContext& ctx, ParseMode m) {
  if (ctx.dimension != Dimension::length) throw DimensionError(std::string(to_string(ctx.id)) + " is not a length context");
  return evaluate(parse_measure(text, ctx, m).value, ctx);
}

int cmd_square(const Options& o, std::ostream& out) {
  const auto& lc = context_lookup(o.len_ctx);
  const auto& sc = context_lookup(o.surf_ctx);
  Quantity a = square_area(length_of(o.expr, lc, mode(o)));
  out << render_value(decompose_canonical(a, sc), sc, conventions(o)) << "\n";
  return ok;
}

int cmd_rect(const Options& o, std::ostream& out) {
  const auto& lc = context_lookup(o.len_ctx);
  const auto& sc = context_lookup(o.surf_ctx);
  Quantity a = rect_area(length_of(o.expr, lc, mode(o)), length_of(o.expr2, lc, mode(o)));
  out << render_value(decompose_canonical(a, sc), sc, conventions(o)) << "\n";
  return ok;
}

int cmd_frac(const Options& o, std::ostream& out) {
  auto slash = o.fraction.find('/');
  if (slash == std::string::npos) throw ParseError(0, "expected p/q");
  Rational r = parse_rational(o.fraction);
  if (r <= 0) throw ParseError(0, "fraction must be positive");
  CompoundValue v = fraction_of_sar(static_cast<std::uint64_t>(numerator(r)), static_cast<std::uint64_t>(denominator(r)));
  RenderConventions c = conventions(o);
  c.notation = o.unicode ? Notation::translit : Notation::arabic;
  out << render_value(v, context_lookup(ContextId::sar_zab), c) << "\n";
  return ok;
}

int cmd_table(const Options& o, std::ostream& out) {
  auto recs = corpus(o);
  TableSpec t = generate(o.table_id, recs);
  if (o.format == "tsv")
    out << render_table_tsv(t);
  else
    out << render_table_translit(t, conventions(o));
  return ok;
}

int cmd_derive(const Options& o, std::ostream& out) {
  auto recs = corpus(o);
  TableSpec t = generate(o.table_id, recs);
  if (o.row == 0 || o.row > t.row_count())
    throw Error(o.table_id + " has rows 1 to " + std::to_string(t.row_count()));
  for (const auto& c : t.cells) {
    if (c.row != o.row) continue;
    out << c.face << " " << c.column << " " << c.line << " " << to_string(c.role) << ": " << c.text << "  ("
        << to_string(c.value) << ")\n";
    if (!c.derivation.empty()) out << "  " << c.derivation << "\n";
  }
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto recs = corpus(o);
  std::vector<std::string> targets;
  if (o.table_id == "all")
    for (auto id : table_ids()) targets.emplace_back(id);
  else
    targets.push_back(o.table_id);
  VerifyOptions vo;
  vo.level = o.level == "string" ? VerifyLevel::string : VerifyLevel::value;
  vo.apply_corrections = !o.no_corrections;
  bool all_passed = true;
  for (const auto& id : targets) {
    DiffReport r = verify(id, recs, vo);
    out << id << " " << to_string(r.level) << ": " << r.count(RowStatus::exact) << " exact, "
        << r.count(RowStatus::value_equal) << " value-equal, " << r.count(RowStatus::mismatch) << " mismatch, "
        << r.count(RowStatus::missing) << " missing, " << r.count(RowStatus::extra) << " extra -> "
        << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& d : r.rows) {
      if (d.status == RowStatus::exact) continue;
      out << "  " << d.position << " " << to_string(d.role) << " " << to_string(d.status);
      if (d.flags) out << " [" << flags_to_string(d.flags) << "]";
      out << ":";
      if (!d.corpus_text.empty()) {
        out << " corpus \"" << d.corpus_text << "\"";
        if (d.corpus_value) out << " = " << to_string(*d.corpus_value);
      }
      if (!d.generated_text.empty()) out << (d.corpus_text.empty() ? "" : ";") << " generated \"" << d.generated_text
                                         << "\" = " << to_string(*d.generated_value);
      out << "\n";
    }
    all_passed = all_passed && r.passed();
  }
  return all_passed ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Early Dynastic square and rectangle tables", "edst"};
  app.require_subcommand(1);
  Options o;
  std::string ctx_help = "context id, e.g. CTX-SAR-ADAB";

  auto* units = app.add_subcommand("units", "list the units of a metrological context");
  units->add_option("context", o.ctx, ctx_help)->required();

  auto* eval = app.add_subcommand("eval", "parse a measure, print its canonical form and exact value");
  eval->add_option("expr", o.expr, "transliterated measure")->required();
  eval->add_option("--ctx", o.ctx, ctx_help)->required();

  auto* convert = app.add_subcommand("convert", "rewrite a measure in another context of the same dimension");
  convert->add_option("expr", o.expr)->required();
  convert->add_option("--from", o.from, ctx_help)->required();
  convert->add_option("--to", o.to, ctx_help)->required();

  auto* square = app.add_subcommand("square", "surface of the square on a side");
  square->add_option("side", o.expr)->required();
  square->add_option("--len-ctx", o.len_ctx, "length context")->capture_default_str();
  square->add_option("--surf-ctx", o.surf_ctx, "surface context")->capture_default_str();

  auto* rect = app.add_subcommand("rect", "surface of a rectangle");
  rect->add_option("front", o.expr)->required();
  rect->add_option("ground", o.expr2)->required();
  rect->add_option("--len-ctx", o.len_ctx, "length context")->capture_default_str();
  rect->add_option("--surf-ctx", o.surf_ctx, "surface context")->capture_default_str();

  auto* frac = app.add_subcommand("frac", "a fraction of a sar in gin2 and its sub-units");
  frac->add_option("fraction", o.fraction, "p/q")->required();

  auto* table = app.add_subcommand("table", "regenerate a table");
  table->add_option("id", o.table_id, "T1, T2, T3A, T3B, T4, T5A ... T5E")->required();
  table->add_option("--format", o.format)->check(CLI::IsMember({"translit", "tsv"}))->capture_default_str();

  auto* derive = app.add_subcommand("derive", "show how one table row is computed");
  derive->add_option("id", o.table_id)->required();
  derive->add_option("row", o.row, "1-based row")->required();

  auto* verify_cmd = app.add_subcommand("verify", "compare regenerated tables with the corpus");
  verify_cmd->add_option("id", o.table_id, "table id or 'all'")->required();
  verify_cmd->add_option("--level", o.level)->check(CLI::IsMember({"value", "string"}))->capture_default_str();
  verify_cmd->add_flag("--no-corrections", o.no_corrections, "ignore the corrected column");

  for (auto* sub : {eval, convert, square, rect}) sub->add_flag("--lenient", o.lenient, "accept defective notation");
  for (auto* sub : {eval, convert, square, rect, frac, table}) sub->add_flag("--unicode", o.unicode, "Unicode output");
  for (auto* sub : {eval, convert, square, rect}) sub->add_flag("--arabic", o.arabic, "arabic counts and glosses");
  for (auto* sub : {table, derive, verify_cmd}) sub->add_option("--corpus", o.corpus_dir, "corpus directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "edst: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*units) return cmd_units(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*convert) return cmd_convert(o, out);
    if (*square) return cmd_square(o, out);
    if (*rect) return cmd_rect(o, out);
    if (*frac) return cmd_frac(o, out);
    if (*table) return cmd_table(o, out);
    if (*derive) return cmd_derive(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "edst: " << e.what() << "\n";
    return input_error;
  }
  return usage;
}

}  // namespace edst::cli
