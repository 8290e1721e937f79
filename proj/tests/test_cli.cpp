#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "support.hpp"
#include "vkb/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = vkb::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const char* name) { return support::corpus_path(name); }

}  // namespace

TEST_CASE("cli: polynomial commands") {
  CHECK(run({"bracket", corpus("paper_knot.vld")}).out == "B^3*d + 2*A*B^2 + A*B^2*d + 3*A^2*B + A^3*d\n");
  CHECK(run({"jones", corpus("paper_knot.vld")}).out == "t^(-2) - t^(-1) - t^(-1/2) + 1 + t^(1/2)\n");
  CHECK(run({"bracket", corpus("unknot.vld")}).out == "1\n");
  CHECK(run({"brpoly", corpus("paper_knot.vld")}).out == "2 + y + 2*y*z + y^2*z + x + x*y*z^2\n");
  CHECK(run({"brpoly", "--graph", corpus("paper_graph.rg")}).out == "2 + y + 2*y*z + y^2*z + x + x*y*z^2\n");
  CHECK(run({"ribbon", corpus("paper_knot.vld")}).out == support::read_corpus("paper_graph.rg").substr(
                                                             support::read_corpus("paper_graph.rg").find('\n') + 1));
}

TEST_CASE("cli: inputs") {
  const Result a = run({"jones", "--code", "X 1 5 2 4;X 2 6 3 1;X 3 5 4 6"});
  CHECK(a.code == 0);
  CHECK(a.out == "t^(-2) - t^(-1) - t^(-1/2) + 1 + t^(1/2)\n");
  const Result b = run({"jones", "-"}, support::read_corpus("trefoil.vld"));
  CHECK(b.out == "t + t^3 - t^4\n");
  CHECK(run({"jones"}).code == 2);
  CHECK(run({"jones", corpus("trefoil.vld"), "--code", "L 1"}).code == 2);
}

TEST_CASE("cli: verify and table") {
  const Result v = run({"verify", corpus("paper_knot.vld")});
  CHECK(v.code == 0);
  CHECK(v.out == "OK\n");

  const Result t = run({"table", corpus("paper_knot.vld")});
  CHECK(t.code == 0);
  const std::string expected =
      "state  alpha  beta  delta  F        k  r  n  bc   s  check\n"
      "AAA        3     0      2  {2,3}    1  1  1   2   1     ok\n"
      "AAB        2     1      1  {2}      1  1  0   1   0     ok\n"
      "ABA        2     1      1  {3}      1  1  0   1   0     ok\n"
      "ABB        1     2      2  {}       2  0  0   2  -1     ok\n"
      "BAA        2     1      1  {1,2,3}  1  1  2   1   1     ok\n"
      "BAB        1     2      1  {1,2}    1  1  1   1   0     ok\n"
      "BBA        1     2      1  {1,3}    1  1  1   1   0     ok\n"
      "BBB        0     3      2  {1}      2  0  1   2  -1     ok\n";
  CHECK(t.out == expected);

  const Result tsv = run({"table", "--tsv", corpus("hopf.vld")});
  CHECK(tsv.out.substr(0, tsv.out.find('\n')) == "state\talpha\tbeta\tdelta\tF\tk\tr\tn\tbc\ts\tcheck");
  CHECK(std::count(tsv.out.begin(), tsv.out.end(), '\n') == 5);

  const Result fig8 = run({"table", corpus("figure8_r2.vld")});
  CHECK(std::count(fig8.out.begin(), fig8.out.end(), '\n') == 65);
  CHECK(fig8.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: fuzz") {
  const Result f = run({"fuzz", "--count", "40", "--max-crossings", "7", "--seed", "3"});
  CHECK(f.code == 0);
  CHECK(f.out == "40/40 diagrams verified\n");
  CHECK(run({"fuzz", "--count", "5", "--max-crossings", "0"}).code == 2);
}

TEST_CASE("cli: error exit codes") {
  const Result bad = run({"bracket", "--code", "X 1 2 3 4;X 7 7 7 1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"bracket", "--code", "X 1 2"}).code == 2);
  CHECK(run({"bracket", "/nonexistent/file.vld"}).code == 2);
  CHECK(run({"brpoly", "--graph", "--code", "V 1 2;V 3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);

  const Result cap = run({"bracket", "--max-states", "4", corpus("paper_knot.vld")});
  CHECK(cap.code == 3);
  CHECK(run({"bracket", "--max-states", "8", corpus("paper_knot.vld")}).code == 0);
  CHECK(run({"verify", "--max-states", "4", corpus("paper_knot.vld")}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: output is deterministic across thread counts") {
  const std::string file = corpus("figure8_r2.vld");
  CHECK(run({"bracket", "--threads", "1", file}).out == run({"bracket", "--threads", "4", file}).out);
  CHECK(run({"table", "--threads", "1", file}).out == run({"table", "--threads", "3", file}).out);
}
