#include "edst/cli.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = edst::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("square and rect") {
  CHECK(run({"square", "2(u) ninda-DU", "--len-ctx", "CTX-ED3A", "--surf-ctx", "CTX-G"}).out == "4(iku)\n");
  CHECK(run({"square", "1(gesz'u)"}).out == "3(szar2) 2(bur'u)\n");
  CHECK(run({"square", "8(asz) kusz3", "--len-ctx", "CTX-ADAB", "--surf-ctx", "CTX-SAR-ADAB", "--arabic"}).out ==
        "1/3 sar 6 gin2 2 samana\n");
  CHECK(run({"rect", "5(u)", "5(gesz'u)"}).out == "1(szar2) 2(bur'u) 3(bur3) 1(esze3)\n");
  CHECK(run({"square", "2(u)", "--surf-ctx", "CTX-G", "--unicode"}).out == "4(iku)\n");
}

TEST_CASE("eval prints the canonical form and the exact value") {
  Run r = run({"eval", "1 sar la2 10 gin2 + (1 sa10-ma-na 15 sze)", "--ctx", "CTX-SAR-ADAB"});
  CHECK(r.code == 0);
  CHECK(r.out == "1(as) sar la2 1(u) gin2 + 1(as) sa10-ma-na 1(u) 5(disz) sze\n= 121/144 sar\n");
  CHECK(run({"eval", "3(asz) 2/3 5 gin2", "--ctx", "CTX-SAR-ZAB", "--lenient"}).out.ends_with("= 1/16 sar\n"));
}

TEST_CASE("frac and convert") {
  CHECK(run({"frac", "1/9"}).out == "6 2/3 gin2\n");
  CHECK(run({"frac", "1/16", "--unicode"}).out == "3(aš) 2/3 gin₂ 5(aš) gin₂-bi\n");
  CHECK(run({"convert", "1(u)", "--from", "CTX-ED3A", "--to", "CTX-ZAB"}).out == "1(u)\n");
  CHECK(run({"convert", "6(asz) kusz3", "--from", "CTX-ADAB", "--to", "CTX-ZAB"}).out == "2(as) nig2-kas7\n");
}

TEST_CASE("units, table and derive") {
  std::string units = run({"units", "CTX-SAR-ADAB"}).out;
  CHECK(units.find("gin2\t1/60 sar") != std::string::npos);
  CHECK(run({"table", "T1"}).out.find("1/4(iku)") != std::string::npos);
  CHECK(run({"table", "T2", "--format", "tsv"}).out.find("total\tCTX-G\t3(szar2) 4(bur3) 3(iku)") != std::string::npos);
  std::string d = run({"derive", "T4", "11"}).out;
  CHECK(d.find("+12x12 -12x1 -12x1 +1x1") != std::string::npos);
  CHECK(d.find("9075 sze") != std::string::npos);
  CHECK(run({"derive", "T1", "9"}).out.find("strip") != std::string::npos);
}

TEST_CASE("verify") {
  Run all = run({"verify", "all", "--corpus", EDST_SOURCE_CORPUS});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  Run raw = run({"verify", "T4", "--no-corrections"});
  CHECK(raw.code == 3);
  CHECK(raw.out.find("obv ii 14 entry-surface mismatch") != std::string::npos);
  CHECK(run({"verify", "T5E", "--level", "string"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"verify", "T1", "--level", "fuzzy"}).code == 1);
  CHECK(run({"eval", "1(u)"}).code == 1);
  Run bad = run({"eval", "xyz", "--ctx", "CTX-G"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("at byte 0") != std::string::npos);
  CHECK(bad.out.empty());
  CHECK(run({"units", "CTX-NOPE"}).code == 2);
  CHECK(run({"verify", "T9"}).code == 2);
  CHECK(run({"frac", "7"}).code == 2);
  CHECK(run({"derive", "T1", "17"}).code == 2);
  CHECK(run({"verify", "all", "--corpus", "/nonexistent"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"table", "T5A"}).out == run({"table", "T5A"}).out);
}
