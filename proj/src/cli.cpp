#include "xreal/cli.hpp"

#include <utility>

#include "xreal/affine.hpp"
#include "xreal/basic_ops.hpp"
#include "xreal/bounds.hpp"
#include "xreal/conversions.hpp"
#include "xreal/oracle.hpp"
#include "xreal/series.hpp"
#include "xreal/stream.hpp"

namespace xreal {

namespace {

struct ParsedRational {
  mpz_class p, q;
};

ParsedRational parse_rational(const std::string& tok) {
  std::string ps = tok, qs = "1";
  if (auto slash = tok.find('/'); slash != std::string::npos) {
    ps = tok.substr(0, slash);
    qs = tok.substr(slash + 1);
  }
  auto digits_only = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits_only(ps) || !digits_only(qs))
    throw CliError("malformed rational '" + tok + "' (want p/q)");
  ParsedRational r{mpz_class(ps), mpz_class(qs)};
  if (r.q == 0) throw CliError("zero denominator in '" + tok + "'");
  if (r.p > r.q) throw CliError("operand " + tok + " is outside [0,1]");
  return r;
}

Rational value_of(const ParsedRational& r) { return make_rational(r.p, r.q); }

DigitStream stream_of(const ParsedRational& r) {
  return rat_to_stream(r.p, r.q);
}

ParsedRational operand(const CliRequest& req, std::size_t i) {
  if (i >= req.operands.size())
    throw CliError("command '" + req.command + "' needs more operands");
  return parse_rational(req.operands[i]);
}

DigitStream build_stream(const CliRequest& req) {
  const std::string& cmd = req.command;
  if (cmd == "const") {
    if (req.operands.size() != 1) throw CliError("const needs one name");
    const std::string& name = req.operands[0];
    if (name == "e2") return number_e_minus2();
    if (name == "pi4") return pi_over_4();
    if (name == "zero") return zero();
    if (name == "one") return one();
    throw CliError("unknown constant '" + name + "' (e2|pi4|zero|one)");
  }
  if (cmd == "add" || cmd == "sub" || cmd == "mul" || cmd == "halfsum") {
    ParsedRational x = operand(req, 0), y = operand(req, 1);
    if (req.operands.size() != 2) throw CliError(cmd + " needs two operands");
    if (cmd == "add") return add(stream_of(x), stream_of(y));
    if (cmd == "mul") return mult(stream_of(x), stream_of(y));
    if (cmd == "halfsum") return half_sum(stream_of(x), stream_of(y));
    if (value_of(x) < value_of(y))
      throw CliError("sub needs x >= y (exact pre-check failed)");
    return sub(stream_of(x), stream_of(y));
  }
  if (cmd == "affine") {
    if (req.operands.size() != 2) throw CliError("affine needs two operands");
    ParsedRational x = operand(req, 0), y = operand(req, 1);
    if (req.af_a < 0 || req.af_b < 0 || req.af_c < 0 || req.af_ad <= 0 ||
        req.af_bd <= 0 || req.af_cd <= 0)
      throw CliError("affine needs a,b,c >= 0 and a',b',c' > 0");
    AffineState s{req.af_a,  req.af_ad,    req.af_b,    req.af_bd, req.af_c,
                  req.af_cd, stream_of(x), stream_of(y)};
    Rational v = affine_value(s, value_of(x), value_of(y));
    if (v < 0 || v > 1)
      throw CliError("affine value " + v.get_str() + " is outside [0,1]");
    return axbyc(std::move(s));
  }
  if (cmd == "cut-demo") {
    if (req.operands.size() != 1) throw CliError("cut-demo needs one operand");
    ParsedRational r = operand(req, 0);
    // decide(a, b): r <= a/b  <=>  p*b <= q*a
    return stream_of_cut([p = r.p, q = r.q](const mpz_class& a,
                                            const mpz_class& b) {
      return p * b <= q * a;
    });
  }
  if (cmd == "cauchy-demo") {
    if (req.operands.size() != 1)
      throw CliError("cauchy-demo needs one operand");
    ParsedRational r = operand(req, 0);
    CauchyInput in;
    in.values = [p = r.p, q = r.q](long) { return std::make_pair(p, q); };
    in.modulus = [](long) { return 0L; };
    return stream_of_cauchy(std::move(in));
  }
  throw CliError("unknown command '" + cmd + "'");
}

// Decimal digit count certified for a bit count: floor(bits*log10(2)),
// at least one digit.
std::size_t decimal_digits_for(unsigned long bits) {
  unsigned long d = static_cast<unsigned long>(
      (static_cast<unsigned long long>(bits) * 30103ull) / 100000ull);
  return d == 0 ? 1 : d;
}

}  // namespace

std::string run(const CliRequest& req) {
  if (req.bits == 0) throw CliError("--bits must be at least 1");
  DigitStream s = build_stream(req);
  DyadicBounds b = bounds(s, req.bits);

  std::string out;
  if (req.show_bounds) {
    out += b.lo.get_str();
    out += "/2^";
    out += std::to_string(b.k);
    out += " <= value <= ";
    out += b.hi.get_str();
    out += "/2^";
    out += std::to_string(b.k);
    out += "\n";
  }
  if (req.show_digits) {
    out += digit_string(s, req.bits);
    out += "\n";
  }
  if (req.show_decimal) {
    out += decimal_render(s, decimal_digits_for(req.bits));
    out += "\n";
  }
  return out;
}

}  // namespace xreal
