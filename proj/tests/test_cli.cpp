#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace qcs;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(*cli::parse_complex("1.5") == Complex(1.5, 0.0));
  CHECK(*cli::parse_complex("0.5+0.2i") == Complex(0.5, 0.2));
  CHECK(*cli::parse_complex("0.5-i") == Complex(0.5, -1.0));
  CHECK(*cli::parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(*cli::parse_complex("-2e-3") == Complex(-2e-3, 0.0));
  CHECK(*cli::parse_complex("1,-2") == Complex(1.0, -2.0));
  CHECK_FALSE(cli::parse_complex("abc"));
  CHECK_FALSE(cli::parse_complex(""));
  CHECK(cli::parse_real_list("0.3,0.5")->size() == 2);
  CHECK_FALSE(cli::parse_real_list("0.3,x"));
}

TEST_CASE("eval") {
  Run r = run({"eval", "qexp", "--xi", "0", "--q", "0.5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("value: 1\n") != std::string::npos);
  r = run({"eval", "qnumber", "--n", "3", "--q", "0.5"});
  CHECK(r.out.find("value: 1.75") != std::string::npos);
  r = run({"eval", "energy", "--j", "0", "--q", "0.5"});
  CHECK(r.out.find("value: 0.5") != std::string::npos);
  r = run({"eval", "kernel_qm_closed", "--z", "0.3+0.2i", "--w", "-0.1+0.4i", "--m", "0", "--q", "0.5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("1.03755497911") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"eval", "nope"}).code == cli::kExitUsage);
  CHECK(run({"eval", "qexp", "--q", "0.5"}).code == cli::kExitUsage);
  CHECK(run({"eval", "qexp", "--xi", "0", "--q", "0.5", "--m", "1"}).code == cli::kExitUsage);
  CHECK(run({"eval", "qnumber", "--n", "1.5", "--q", "0.5"}).code == cli::kExitUsage);
  CHECK(run({"verify", "nope"}).code == cli::kExitUsage);
  CHECK(run({"table", "kernel", "-o", "/nonexistent/dir/x.csv"}).code == cli::kExitUsage);
}

TEST_CASE("verify and table") {
  Run r = run({"verify", "qidentities", "--q", "0.5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("\"schema_version\": 1") != std::string::npos);
  r = run({"table", "kernel", "--q", "0.5", "--m", "0"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.find("kernel_re") != std::string::npos);
  r = run({"list"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("qidentities") != std::string::npos);
}
