// Runs the golden corpus against the built `ultra` binary as a subprocess.
//
//   golden_runner <ultra binary> <golden dir> [--regenerate]

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "golden.hpp"

namespace {

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_runner <ultra binary> <golden dir> [--regenerate]\n";
    return 2;
  }
  namespace fs = std::filesystem;
  const fs::path binary = fs::absolute(argv[1]);
  const fs::path dir = fs::absolute(argv[2]);
  const bool regenerate = argc > 3 && std::string(argv[3]) == "--regenerate";
  const fs::path capture = fs::temp_directory_path() / ("ultra_golden_io_" + std::to_string(::getpid()));
  fs::create_directories(capture);

  auto exec = [&](const std::vector<std::string>& args) {
    std::string cmd = "NO_COLOR=1 " + quote(binary.string());
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " > " + quote((capture / "out").string()) + " 2> " + quote((capture / "err").string()) + " < /dev/null";
    const int status = std::system(cmd.c_str());
    ultra::golden::Invocation inv;
    inv.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    inv.out = ultra::golden::read_bytes(capture / "out");
    inv.err = ultra::golden::read_bytes(capture / "err");
    return inv;
  };

  int failures = 0;
  for (const auto& r : ultra::golden::run_corpus(dir, exec, regenerate)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.why) << "\n";
    failures += r.passed ? 0 : 1;
  }
  fs::remove_all(capture);
  return failures == 0 ? 0 : 1;
}
