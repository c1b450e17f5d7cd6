// xreal: exact real arithmetic on [0,1] to arbitrary bit precision.
//
//   xreal <command> [operands...] --bits N [--digits] [--decimal] [--bounds]
//
// commands:
//   const <e2|pi4|zero|one>          named constant
//   add|sub|mul|halfsum <p/q> <p/q>  arithmetic on rationals
//   affine --a A --a' A2 --b B --b' B2 --c C --c' C2 <p/q> <p/q>
//                                    (A/A2)x + (B/B2)y + C/C2
//   cut-demo <p/q>                   bisection of a rational cut
//   cauchy-demo <p/q>                constant Cauchy sequence conversion
//
// Prints a certified enclosure "lo/2^k <= value <= hi/2^k" of width
// exactly 2^-N, then optionally the digit string and a certified decimal
// expansion.

#include <cstdio>
#include <cstring>
#include <string>

#include "xreal/cli.hpp"

namespace {

constexpr const char* kUsage =
    "usage: xreal <command> [operands...] [--bits N] [--digits] [--decimal]\n"
    "             [--bounds] [affine: --a --a' --b --b' --c --c']\n"
    "commands: const add sub mul halfsum affine cut-demo cauchy-demo\n";

bool parse_count(const char* s, unsigned long& out) {
  if (!s || !*s) return false;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (*end) return false;
  out = v;
  return true;
}

bool parse_int(const char* s, mpz_class& out) {
  if (!s || !*s) return false;
  const char* p = s;
  if (*p == '-') ++p;
  if (!*p) return false;
  for (; *p; ++p)
    if (*p < '0' || *p > '9') return false;
  out = mpz_class(s);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fputs(kUsage, stderr);
    return 1;
  }

  xreal::CliRequest req;
  req.command = argv[1];

  struct CoeffFlag {
    const char* name;
    mpz_class* dest;
  };
  CoeffFlag coeffs[] = {
      {"--a", &req.af_a},  {"--a'", &req.af_ad}, {"--b", &req.af_b},
      {"--b'", &req.af_bd}, {"--c", &req.af_c},  {"--c'", &req.af_cd},
  };

  for (int i = 2; i < argc; ++i) {
    const char* arg = argv[i];
    if (std::strcmp(arg, "--bits") == 0) {
      if (++i >= argc || !parse_count(argv[i], req.bits)) {
        std::fputs("xreal: --bits needs a positive integer\n", stderr);
        return 1;
      }
      continue;
    }
    if (std::strcmp(arg, "--digits") == 0) {
      req.show_digits = true;
      continue;
    }
    if (std::strcmp(arg, "--decimal") == 0) {
      req.show_decimal = true;
      continue;
    }
    if (std::strcmp(arg, "--bounds") == 0) {
      req.show_bounds = true;
      continue;
    }
    bool matched = false;
    for (const CoeffFlag& cf : coeffs) {
      if (std::strcmp(arg, cf.name) == 0) {
        if (++i >= argc || !parse_int(argv[i], *cf.dest)) {
          std::fprintf(stderr, "xreal: %s needs an integer\n", cf.name);
          return 1;
        }
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (arg[0] == '-' && arg[1] == '-') {
      std::fprintf(stderr, "xreal: unknown flag '%s'\n%s", arg, kUsage);
      return 1;
    }
    req.operands.emplace_back(arg);
  }

  try {
    std::string out = xreal::run(req);
    std::fwrite(out.data(), 1, out.size(), stdout);
  } catch (const xreal::CliError& e) {
    std::fprintf(stderr, "xreal: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "xreal: internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
