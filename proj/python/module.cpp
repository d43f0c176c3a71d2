#include "edst/cli.hpp"
#include "edst/corpus.hpp"
#include "edst/errors.hpp"
#include "edst/procedures.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace edst;

namespace {

// Owned by the module.
PyObject* error_type = nullptr;
PyObject* parse_error_type = nullptr;

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Rational rational_from(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

RenderConventions conventions(bool unicode, bool arabic) {
  RenderConventions c;
  c.script = unicode ? Script::unicode : Script::ascii;
  c.notation = arabic ? Notation::arabic : Notation::translit;
  return c;
}

ParseMode mode(bool lenient) { return lenient ? ParseMode::lenient : ParseMode::strict; }

std::vector<CorpusRecord> corpus(const std::optional<std::string>& dir) {
  return dir ? load_corpus_dir(*dir) : load_default_corpus();
}

Quantity length_of(const std::string& text, const MetrologicalContext& ctx, bool lenient) {
  if (ctx.dimension != Dimension::length) throw DimensionError(std::string(to_string(ctx.id)) + " is not a length context");
  return evaluate(parse_measure(text, ctx, mode(lenient)).value, ctx);
}

}  // namespace

PYBIND11_MODULE(edst, m) {
  m.doc() = "Exact arithmetic for the Early Dynastic tables of squares and rectangles";

  error_type = py::exception<Error>(m, "Error", PyExc_ValueError).ptr();
  parse_error_type = py::exception<ParseError>(m, "ParseError", error_type).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(parse_error_type)(e.what());
      exc.attr("offset") = e.offset();
      PyErr_SetObject(parse_error_type, exc.ptr());
    } catch (const Error& e) {
      PyErr_SetString(error_type, e.what());
    }
  });

  m.def("contexts", [] {
    std::vector<std::string> out;
    for (ContextId id : all_contexts()) out.emplace_back(to_string(id));
    return out;
  });

  m.def("units", [](const std::string& ctx) {
    std::vector<std::pair<std::string, py::object>> out;
    for (const auto& s : context_lookup(ctx).units) out.emplace_back(std::string(s.unit->name), fraction(s.unit->ratio()));
    return out;
  }, py::arg("ctx"), "Units of a context with their size in ninda or sar.");

  m.def("evaluate", [](const std::string& text, const std::string& ctx, bool lenient) {
    const auto& c = context_lookup(ctx);
    return fraction(evaluate(parse_measure(text, c, mode(lenient)).value, c).magnitude);
  }, py::arg("text"), py::arg("ctx"), py::arg("lenient") = false, "Exact value in ninda or sar.");

  m.def("normalize", [](const std::string& text, const std::string& ctx, bool lenient, bool unicode, bool arabic) {
    return render_measure(parse_measure(text, context_lookup(ctx), mode(lenient)), conventions(unicode, arabic));
  }, py::arg("text"), py::arg("ctx"), py::arg("lenient") = false, py::arg("unicode") = false, py::arg("arabic") = false);

  m.def("decompose", [](const py::object& value, const std::string& ctx, bool unicode, bool arabic) {
    const auto& c = context_lookup(ctx);
    return render_value(decompose_canonical({c.dimension, rational_from(value)}, c), c, conventions(unicode, arabic));
  }, py::arg("value"), py::arg("ctx"), py::arg("unicode") = false, py::arg("arabic") = false,
        "Canonical writing of a value given in ninda or sar.");

  m.def("square", [](const std::string& side, const std::string& len_ctx, const std::string& surf_ctx, bool arabic) {
    const auto& sc = context_lookup(surf_ctx);
    Quantity a = square_area(length_of(side, context_lookup(len_ctx), false));
    return render_value(decompose_canonical(a, sc), sc, conventions(false, arabic));
  }, py::arg("side"), py::arg("len_ctx") = "CTX-ED3A", py::arg("surf_ctx") = "CTX-G", py::arg("arabic") = false);

  m.def("rect", [](const std::string& front, const std::string& ground, const std::string& len_ctx,
                   const std::string& surf_ctx, bool arabic) {
    const auto& lc = context_lookup(len_ctx);
    const auto& sc = context_lookup(surf_ctx);
    Quantity a = rect_area(length_of(front, lc, false), length_of(ground, lc, false));
    return render_value(decompose_canonical(a, sc), sc, conventions(false, arabic));
  }, py::arg("front"), py::arg("ground"), py::arg("len_ctx") = "CTX-ED3A", py::arg("surf_ctx") = "CTX-G",
        py::arg("arabic") = false);

  m.def("fraction_of_sar", [](std::uint64_t p, std::uint64_t q, bool arabic) {
    return render_value(fraction_of_sar(p, q), context_lookup(ContextId::sar_zab), conventions(false, arabic));
  }, py::arg("p"), py::arg("q"), py::arg("arabic") = true);

  m.def("table_ids", [] {
    std::vector<std::string> out;
    for (auto id : table_ids()) out.emplace_back(id);
    return out;
  });

  m.def("generate", [](const std::string& id, const std::optional<std::string>& corpus_dir) {
    py::list rows;
    for (const auto& c : generate(id, corpus(corpus_dir)).cells) {
      py::dict d;
      d["face"] = c.face;
      d["column"] = c.column;
      d["line"] = c.line;
      d["row"] = c.row;
      d["role"] = std::string(to_string(c.role));
      d["context"] = std::string(to_string(c.context));
      d["text"] = c.text;
      d["value"] = fraction(c.value.magnitude);
      rows.append(d);
    }
    return rows;
  }, py::arg("id"), py::arg("corpus") = py::none());

  m.def("table", [](const std::string& id, const std::string& format, const std::optional<std::string>& corpus_dir) {
    TableSpec t = generate(id, corpus(corpus_dir));
    if (format == "tsv") return render_table_tsv(t);
    if (format == "translit") return render_table_translit(t);
    throw Error("format must be translit or tsv");
  }, py::arg("id"), py::arg("format") = "translit", py::arg("corpus") = py::none());

  m.def("verify", [](const std::string& id, const std::string& level, bool corrections,
                     const std::optional<std::string>& corpus_dir) {
    if (level != "value" && level != "string") throw Error("level must be value or string");
    VerifyOptions o{level == "string" ? VerifyLevel::string : VerifyLevel::value, corrections};
    DiffReport r = verify(id, corpus(corpus_dir), o);
    py::list rows;
    for (const auto& d : r.rows) {
      py::dict row;
      row["position"] = d.position;
      row["role"] = std::string(to_string(d.role));
      row["status"] = std::string(to_string(d.status));
      row["corpus"] = d.corpus_text;
      row["generated"] = d.generated_text;
      row["corpus_value"] = d.corpus_value ? fraction(d.corpus_value->magnitude) : py::none();
      row["generated_value"] = d.generated_value ? fraction(d.generated_value->magnitude) : py::none();
      row["flags"] = flags_to_string(d.flags);
      rows.append(row);
    }
    py::dict out;
    out["id"] = r.text_id;
    out["passed"] = r.passed();
    out["rows"] = rows;
    return out;
  }, py::arg("id"), py::arg("level") = "value", py::arg("corrections") = true, py::arg("corpus") = py::none());

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
