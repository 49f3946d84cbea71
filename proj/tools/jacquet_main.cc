// Copyright 2026 The Jacquet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: Jacquet-module calculations and the case sweep.

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacquet/cl_comodule.h"
#include "jacquet/gl_hopf.h"
#include "jacquet/langlands_oracle.h"
#include "jacquet/regular_regions.h"
#include "jacquet/syntax.h"
#include "jacquet/verifier.h"
#include "json.hpp"

namespace {

using jacquet::CuspidalContext;
using jacquet::Exponent;
using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::int64_t max_n = 6;
  std::string alpha = "1";
  unsigned threads = 0;
};

std::string Str(const jacquet::Coefficient& c) { return c.str(); }

void CheckN(std::int64_t n, const Options& o) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > o.max_n) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds --max-n " +
                                std::to_string(o.max_n));
  }
}

bool LooksLikeParam(const std::string& s) {
  const auto p = s.find_first_not_of(" \t");
  return p != std::string::npos &&
         (s.compare(p, 2, "L(") == 0 || s.compare(p, 2, "d(") == 0);
}

int RunMstar(const std::string& expr, bool ordinary, const Options& o) {
  const jacquet::GLElement x = jacquet::ParseGLExpression(expr);
  const jacquet::GLTensorElement y =
      ordinary ? jacquet::Comultiply(x) : jacquet::TwistedComultiply(x);
  if (o.json) {
    ordered_json j;
    j["input"] = jacquet::ToString(x);
    j["operator"] = ordinary ? "m*" : "M*";
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : y) {
      terms.push_back({{"left", k.first.ToString()},
                       {"right", k.second.ToString()},
                       {"coefficient", Str(c)}});
    }
    j["terms"] = terms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << jacquet::ToString(y) << "\n";
  }
  return 0;
}

int RunMustar(const std::string& expr, const Options& o) {
  const CuspidalContext ctx(Exponent::Parse(o.alpha));
  const jacquet::ParsedClassical parsed = jacquet::ParseClassical(expr, ctx);
  jacquet::MuSum value;
  bool upper = false;
  if (parsed.pair) {
    if (expr.find("|x") != std::string::npos) {
      throw std::invalid_argument("a +/- pair sum takes no GL factor");
    }
    const jacquet::PairSum p = jacquet::MuStarPairSum(parsed.pair_symbol, ctx);
    value = p.value;
    upper = p.upper_bound;
  } else {
    value = jacquet::MuStar(parsed.element, ctx);
  }
  if (o.json) {
    ordered_json j;
    j["input"] = parsed.pair ? parsed.pair_symbol.ToString() + " pair"
                             : jacquet::ToString(parsed.element);
    j["upper_bound"] = upper;
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : value) {
      terms.push_back({{"left", k.first.ToString()},
                       {"right", k.second.ToString()},
                       {"coefficient", Str(c)}});
    }
    j["terms"] = terms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << jacquet::ToString(value) << "\n";
    if (upper) std::cout << "(upper bound: the pair sum is not split exactly)\n";
  }
  return 0;
}

int RunMult(const std::string& left, const std::string& right,
            const std::string& expr, const Options& o) {
  const CuspidalContext ctx(Exponent::Parse(o.alpha));
  const jacquet::ParsedClassical parsed = jacquet::ParseClassical(expr, ctx);
  jacquet::ClassicalElement x = parsed.element;
  if (parsed.pair) x = jacquet::MuStarPairSum(parsed.pair_symbol, ctx).carrier;
  const jacquet::Word l = jacquet::ParseWord(left);
  const jacquet::Word r = jacquet::ParseWord(right);
  const jacquet::Coefficient v = jacquet::TensorMultUpperBound(l, r, x, ctx);
  if (o.json) {
    ordered_json j;
    j["left"] = jacquet::WordToString(l);
    j["right"] = jacquet::WordToString(r);
    j["input"] = jacquet::ToString(x);
    j["bound"] = Str(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << Str(v) << "\n";
  }
  return 0;
}

int RunDual(const std::string& expr, const Options& o) {
  std::string in;
  std::string out;
  if (LooksLikeParam(expr)) {
    const CuspidalContext ctx(Exponent::Parse(o.alpha));
    const jacquet::SubquotientParam p = jacquet::ParseParam(expr, ctx);
    in = p.ToString();
    out = jacquet::AubertDual(p, ctx).ToString();
  } else {
    const jacquet::GLElement x = jacquet::ParseGLExpression(expr);
    in = jacquet::ToString(x);
    out = jacquet::ToString(jacquet::Involution(x));
  }
  if (o.json) {
    std::cout << ordered_json{{"input", in}, {"dual", out}}.dump(2) << "\n";
  } else {
    std::cout << out << "\n";
  }
  return 0;
}

int RunEnumerate(std::int64_t n, const Options& o) {
  CheckN(n, o);
  const CuspidalContext ctx(Exponent::Parse(o.alpha));
  const auto params = jacquet::SubquotientEnumerate(n, ctx);
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : params) {
      arr.push_back({{"gamma", p.ToString()},
                     {"case", jacquet::ToString(jacquet::ClassifyCase(p))}});
    }
    std::cout << ordered_json{{"alpha", ctx.alpha().ToString()},
                              {"n", n},
                              {"parameters", arr}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& p : params) {
      std::cout << p.ToString() << "  " << jacquet::ToString(jacquet::ClassifyCase(p))
                << "\n";
    }
  }
  return 0;
}

int RunVerify(std::int64_t n, const std::string& gamma, const Options& o) {
  CheckN(n, o);
  const CuspidalContext ctx(Exponent::Parse(o.alpha));
  if (!gamma.empty()) {
    const jacquet::SubquotientParam p = jacquet::ParseParam(gamma, ctx);
    if (jacquet::LadderLength(p) != n) {
      throw std::invalid_argument(p.ToString() + " does not cover a ladder of length n = " +
                                  std::to_string(n));
    }
    const jacquet::VerificationReport r = jacquet::Verify(p, ctx);
    std::cout << (o.json ? jacquet::ToJson(r).dump(2) + "\n" : jacquet::RenderText(r));
    return r.Pass() ? 0 : 1;
  }
  const jacquet::SweepBlock b = jacquet::SweepOne(ctx, n, o.threads);
  std::cout << (o.json ? jacquet::ToJson(b).dump(2) + "\n" : jacquet::RenderText(b));
  return b.Pass() ? 0 : 1;
}

int RunSweep(const std::string& alphas, const std::string& ns,
             const std::string& out_dir, const Options& o) {
  const std::vector<Exponent> as = jacquet::ParseExponentList(alphas);
  const std::vector<std::int64_t> nv = jacquet::ParseIntList(ns);
  for (std::int64_t n : nv) CheckN(n, o);
  const std::vector<jacquet::SweepBlock> blocks = jacquet::Sweep(as, nv, o.threads);

  bool pass = true;
  ordered_json summary = ordered_json::array();
  for (const jacquet::SweepBlock& b : blocks) {
    pass = pass && b.Pass();
    if (!out_dir.empty()) jacquet::WriteBlockFiles(b, out_dir);
    summary.push_back({{"alpha", b.alpha.ToString()},
                       {"n", b.n},
                       {"reports", b.reports.size()},
                       {"verdict", b.Pass() ? "PASS" : "FAIL"}});
    if (!b.Pass()) {
      for (const auto& r : b.reports) {
        if (!r.Pass()) std::cerr << jacquet::ToJson(r).dump(2) << "\n";
      }
    }
  }
  if (o.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    for (const auto& s : summary) {
      std::cout << "alpha=" << s["alpha"].get<std::string>() << " n=" << s["n"].get<int>()
                << " reports=" << s["reports"].get<std::size_t>() << " "
                << s["verdict"].get<std::string>() << "\n";
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacquet-module calculator and case verifier for classical groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--max-n", o.max_n, "Largest ladder length accepted")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for sweeps (0 = all cores)");

  std::string expr, left, right, gamma, alphas, ns, out_dir;
  std::int64_t n = 1;
  bool ordinary = false;

  auto* mstar = app.add_subcommand("mstar", "GL comultiplication M* (or m*) of an expression");
  mstar->add_option("EXPR", expr, "GL expression")->required();
  mstar->add_flag("--ordinary", ordinary, "Use m* instead of the twisted M*");

  auto* mustar = app.add_subcommand("mustar", "Classical Jacquet comultiplication mu*");
  mustar->add_option("EXPR", expr, "Classical expression")->required();
  mustar->add_option("--alpha", o.alpha, "Reducibility point")->capture_default_str();

  auto* mult = app.add_subcommand("mult", "Upper bound for a tensor multiplicity");
  mult->add_option("LEFTWORD", left, "GL detection word")->required();
  mult->add_option("RIGHTWORD", right, "Classical detection word")->required();
  mult->add_option("EXPR", expr, "Classical expression")->required();
  mult->add_option("--alpha", o.alpha, "Reducibility point")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Involution of a GL expression or Aubert dual of a parameter");
  dual->add_option("EXPR", expr, "GL expression or parameter")->required();
  dual->add_option("--alpha", o.alpha, "Reducibility point")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List subquotient parameters and their cases");
  enumerate->add_option("--alpha", o.alpha, "Reducibility point")->required();
  enumerate->add_option("--n", n, "Ladder length")->required();

  auto* verify = app.add_subcommand("verify", "Verify one parameter or all of one ladder");
  verify->add_option("--alpha", o.alpha, "Reducibility point")->required();
  verify->add_option("--n", n, "Ladder length")->required();
  verify->add_option("--gamma", gamma, "Single parameter, e.g. L([1,2];sigma)");

  auto* sweep = app.add_subcommand("sweep", "Verify every ladder and write per-block reports");
  sweep->add_option("--alphas", alphas, "Comma separated, e.g. 1/2,1,3/2")->required();
  sweep->add_option("--ns", ns, "Comma separated, e.g. 1,2,3")->required();
  sweep->add_option("--out", out_dir, "Output directory for .json/.txt files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mstar) return RunMstar(expr, ordinary, o);
    if (*mustar) return RunMustar(expr, o);
    if (*mult) return RunMult(left, right, expr, o);
    if (*dual) return RunDual(expr, o);
    if (*enumerate) return RunEnumerate(n, o);
    if (*verify) return RunVerify(n, gamma, o);
    if (*sweep) return RunSweep(alphas, ns, out_dir, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
