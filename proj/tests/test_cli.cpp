#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "bandinv/cli.hpp"
#include "bandinv/io.hpp"
#include "bandinv/reconstruct.hpp"
#include "support/instances.hpp"

using namespace bandinv;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bandinv");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (fs::path(BANDINV_FIXTURES) / name).string(); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bandinv_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("validate") {
  const Result ok = run({"validate", fixture("m37_example.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "m = [3,5,7], j0 = 2\n");

  const Result lz = run({"validate", fixture("leading_zero.json")});
  CHECK(lz.code == 2);
  CHECK(lz.err.find("1<m_1< N-n+1") != std::string::npos);

  CHECK(run({"validate", fixture("malformed.json")}).code == 1);
  CHECK(run({"validate", "/nonexistent.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("direct") {
  const Result r = run({"direct", fixture("swap2.json")});
  CHECK(r.code == 0);
  const SpectralFunction s = io::parse_sigma(r.out);
  CHECK(s.jumps()[0].x == doctest::Approx(-1.0));
  CHECK(r.out.find("0.7071067811865476") != std::string::npos);

  const Result with_t = run({"direct", fixture("swap2.json"), "--tinit", fixture("tinit_identity1.json")});
  CHECK(with_t.code == 0);
  CHECK(with_t.out == r.out);

  const Result sum = run({"direct", fixture("m37_example.json"), "--summary", "-o", scratch("s.json").string()});
  CHECK(sum.code == 0);
  const auto pos = sum.out.find("deviation from identity: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(sum.out.substr(pos + 25)) < 1e-9);

  CHECK(run({"direct", fixture("leading_zero.json")}).code == 2);
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = testing::random_instance(rng, 1 + trial % 3, 5 + trial % 7);
    const fs::path mfile = scratch("m.json"), sfile = scratch("sigma.json"), back = scratch("back.json"),
                   tfile = scratch("t.json");
    io::write_file(mfile, io::dump_matrix(inst.matrix));
    REQUIRE(run({"direct", mfile.string(), "-o", sfile.string()}).code == 0);
    const Result r = run({"inverse", sfile.string(), "-o", back.string(), "-t", tfile.string(), "--verify-band"});
    REQUIRE(r.code == 0);
    CHECK(max_deviation(io::parse_matrix(io::read_file(back)), inst.matrix) < 1e-8);
    CHECK(io::parse_tinit(io::read_file(tfile)).dim() == inst.matrix.half_bandwidth());
    const std::size_t n = inst.matrix.half_bandwidth(), big_n = inst.matrix.dim();
    const long expect = long(big_n * n + n * (n - 1) / 2);
    CHECK(r.out.find("height sum: " + std::to_string(expect) + " (expected " + std::to_string(expect) + ")") !=
          std::string::npos);
  }

  const Result dead = run({"inverse", fixture("dead_component.json")});
  CHECK(dead.code == 2);
  CHECK(dead.err.find("DeadComponent") != std::string::npos);

  io::write_file(scratch("flat.json"), io::dump_sigma(SpectralFunction(1, 2, {{0.0, {0.7}}, {1.0, {5e-9}}})));
  const Result amb = run({"inverse", scratch("flat.json").string()});
  CHECK(amb.code == 3);
  CHECK(amb.err.find("AmbiguousNorm") != std::string::npos);
}

TEST_CASE("spring") {
  const Result f = run({"spring", fixture("two_mass.json"), "--frequencies"});
  CHECK(f.code == 0);
  CHECK(f.out == "1.0, 1.7320508075688772\n");

  const Result m = run({"spring", fixture("uniform3.json"), "--matrix"});
  CHECK(m.code == 0);
  const BandMatrix l = io::parse_matrix(m.out);
  CHECK(l.diagonals()[0] == std::vector<double>{-3, -4, -3});

  const Result cf = run({"spring", fixture("uniform5.json"), "--cf-check"});
  CHECK(cf.code == 0);
  CHECK(cf.out.find("j = 2: lhs = 2.0, residual = 0.0") != std::string::npos);
  CHECK(cf.out.find("j = 3: lhs = 2.0, residual = 0.0") != std::string::npos);

  io::write_file(scratch("bad_chain.json"), "{\"masses\": [1, 0], \"k\": [1, 1, 1], \"kp\": [0, 0]}");
  CHECK(run({"spring", scratch("bad_chain.json").string()}).code == 2);
}

TEST_CASE("roundtrip") {
  const Result r = run({"roundtrip", fixture("m37_example.json"), "--tol", "1e-8"});
  CHECK(r.code == 0);

  const Result p = run({"roundtrip", fixture("m37_example.json"), "--perturb", "1e-3"});
  CHECK(p.code == 3);
  const auto pos = p.out.find("max deviation: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(p.out.substr(pos + 15)) > 0.0);

  std::mt19937_64 rng(62);
  const auto jac = testing::random_instance(rng, 1, 9);
  io::write_file(scratch("jac.json"), io::dump_matrix(jac.matrix));
  const Result j = run({"roundtrip", scratch("jac.json").string(), "--tol", "1e-10"});
  CHECK(j.code == 0);
  CHECK(j.out.find("scalar oracle deviation: ") != std::string::npos);
}

TEST_CASE("size caps") {
  std::mt19937_64 rng(63);
  const auto big = testing::random_instance(rng, 1, 65);
  io::write_file(scratch("big.json"), io::dump_matrix(big.matrix));
  CHECK(run({"validate", scratch("big.json").string()}).code == 1);
}
