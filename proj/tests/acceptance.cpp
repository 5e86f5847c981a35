#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include "poncelet/checks.hpp"

namespace {

// Appends the stdout of a shell command.
bool capture(const std::string& cmd, std::string& out) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return false;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return true;
}

void line(int id, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s %2d %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  int failed = 0;
  const auto& names = poncelet::check_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const poncelet::CheckResult r = poncelet::run_check(names[i]);
    line(static_cast<int>(i + 1), names[i], r.passed, r.passed ? "" : r.report.dump());
    failed += !r.passed;
  }

  const int id = static_cast<int>(names.size() + 1);
  if (argc < 2) {
    line(id, "determinism", false, "no CLI path given");
    return 1;
  }
  const std::string cmd = std::string("\"") + argv[1] + "\" verify --all";
  std::string first, second;
  const bool ran = capture(cmd, first) && capture(cmd, second);
  const bool same = ran && !first.empty() && first == second;
  line(id, "determinism", same, same ? std::to_string(first.size()) + " bytes" : "reports differ");
  failed += !same;
  return failed == 0 ? 0 : 1;
}
