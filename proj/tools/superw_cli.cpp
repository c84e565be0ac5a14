// superw: builds W(n)-modules and runs the verification battery from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "superw/superw.hpp"

using namespace superw;

namespace {

struct Common {
  std::string lambda, mu, out;
  int n = 0;
  bool dump = false;
};

void add_pair(CLI::App* cmd, Common& c) {
  cmd->add_option("-l,--lambda", c.lambda, "partition λ as p1,p2,... (empty for ∅)");
  cmd->add_option("-m,--mu", c.mu, "partition μ as p1,p2,... (empty for ∅)");
  cmd->add_flag("--dump", c.dump, "include basis labels and operator matrices in the JSON report");
}

void emit(const Common& c, const Json& j) {
  if (c.out.empty()) return;
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << j.dump(2) << '\n';
}

std::string pair_text(const Partition& lam, const Partition& mu) {
  return "(" + lam.to_string() + "|" + mu.to_string() + ")";
}

int cmd_dims(const Common& c) {
  if (c.n < 2 || c.n > 12) throw RankError("dims: n must lie in 2..12");
  Json dims = Json::array();
  long long total = 0;
  std::printf("dim W(%d)^k\n", c.n);
  for (int k = -1; k <= c.n - 1; ++k) {
    long long d = static_cast<long long>(component_terms(c.n, k).size());
    std::printf("  k = %2d: %lld\n", k, d);
    dims.push_back(d);
    total += d;
  }
  std::printf("  total:  %lld\n", total);
  emit(c, Json{{"n", c.n}, {"dims", dims}, {"total", total}});
  return 0;
}

int cmd_check(const Common& c, std::size_t samples, std::uint64_t seed, bool sign_bug) {
  if (c.n < 1 || c.n > 12) throw RankError("check: n must lie in 1..12");
  auto props = check_algebra(c.n, samples, seed, sign_bug ? BracketSign::flipped : BracketSign::correct);
  bool ok = true;
  for (const auto& p : props) {
    std::printf("%-15s %s (%zu trials)\n", p.name.c_str(), p.pass ? "PASS" : "FAIL", p.trials);
    if (!p.pass) std::printf("  counterexample: %s\n", p.counterexample.c_str());
    ok = ok && p.pass;
  }
  emit(c, Json{{"n", c.n}, {"samples", samples}, {"seed", seed}, {"sign_bug", sign_bug}, {"properties", property_json(props)},
               {"pass", ok}});
  return ok ? 0 : 1;
}

int cmd_socle(const Common& c, const Partition& lam, const Partition& mu) {
  int n = c.n ? c.n : lam.size() + mu.size() + 2;
  auto r = verify_socle_identity(lam, mu, n);
  std::printf("socle layers of S_%s(V)⊗S_%s(V*) at n = %d\n", lam.to_string().c_str(), mu.to_string().c_str(), n);
  for (const auto& layer : r.layers) {
    std::printf("  k = %d\n", layer.k);
    for (const auto& row : layer.constituents)
      std::printf("    %-14s expected %lld observed %lld\n", pair_text(row.lam, row.mu).c_str(), row.expected,
                  row.observed);
  }
  for (const auto& note : r.notes) std::printf("  note: %s\n", note.c_str());
  std::printf("%s\n", r.pass ? "PASS" : "FAIL");
  emit(c, socle_json(r));
  return r.pass ? 0 : 1;
}

int cmd_kac(const Common& c, const Partition& lam, const Partition& mu, bool minus, int cutoff,
            const std::string& order) {
  OrderKind kind = order == "natural" ? OrderKind::natural : OrderKind::interleaved;
  int n = c.n ? c.n : std::max(2, min_rank(lam, mu, kind));
  auto x = gl_simple(lam, mu, n, kind);
  auto m = minus ? kac_minus_truncated(x, n, cutoff) : kac_plus(x, n);
  Weight hw = stable_highest_weight(lam, mu, kind, n);
  // the atypicality pattern refers to the natural order
  auto typ = typicality(stable_highest_weight(lam, mu, OrderKind::natural, n), n);
  BorelOrder b{kind, n, minus ? Extension::min : Extension::max};
  auto prims = find_primitive(*m, b);
  std::printf("%s: dim %zu (X = %s, dim %zu)\n", m->name().c_str(), m->dim(), x->name().c_str(), x->dim());
  std::printf("highest weight %s, %s", hw.to_string().c_str(), typ.typical ? "typical\n" : "atypical");
  if (!typ.typical) std::printf(" (i = %d, a = %d)\n", typ.i, typ.a);
  Json j{{"kind", minus ? "kac_minus" : "kac_plus"}, {"lambda", partition_json(lam)}, {"mu", partition_json(mu)},
         {"n", n}};
  if (minus) j["D"] = cutoff;
  j["order"] = order;
  j["highest_weight"] = weight_json(hw);
  j["typicality"] = typ.typical ? Json{{"typical", true}} : Json{{"typical", false}, {"i", typ.i}, {"a", typ.a}};
  j["module"] = module_json(*m, c.dump, c.dump);
  Json pj = Json::array();
  for (const auto& p : prims) {
    std::printf("  primitive in layer %d, weight %s: %s\n", p.layer, p.grade.weight.to_string().c_str(),
                vector_string(*m, p.vector).c_str());
    pj.push_back({{"weight", weight_json(p.grade.weight)}, {"degree", p.layer}, {"zdeg", p.grade.zdeg},
                  {"parity", p.grade.parity}, {"vector", vector_json(*m, p.vector)}});
  }
  j["primitives"] = std::move(pj);
  bool ok;
  if (minus) {
    j["simplicity_verdict"] = prims.empty() ? "inconclusive" : "not-simple";
    ok = !prims.empty();
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", ok ? "not simple (primitive found)" : "no primitive found");
  } else {
    auto s = is_simple(m);
    bool expected_simple = !(lam.empty() && mu.length() <= 1);
    ok = s.verdict == (expected_simple ? Verdict::simple : Verdict::not_simple);
    std::printf("verdict %s, expected %s: %s\n", to_string(s.verdict).c_str(), expected_simple ? "simple" : "not-simple",
                ok ? "PASS" : "FAIL");
    j["simplicity_verdict"] = to_string(s.verdict);
    j["simplicity"] = simplicity_json(*m, s);
  }
  j["pass"] = ok;
  emit(c, j);
  return ok ? 0 : 1;
}

int cmd_tensorfield(const Common& c, const Partition& lam, const Partition& mu, bool extract) {
  int n = c.n ? c.n : l_minus_min_rank(lam, mu);
  auto x = gl_simple(lam, mu, n, OrderKind::interleaved);
  auto t = tensor_field(x, n);
  auto duality = coinduction_duality_check(x, n);
  std::printf("%s: dim %zu\n", t->name().c_str(), t->dim());
  std::printf("T(X) ≅ K+(X*)*: %s (%s)\n", duality.pass ? "yes" : "no", duality.iso.reason.c_str());
  Json j{{"lambda", partition_json(lam)}, {"mu", partition_json(mu)}, {"n", n}, {"dim_T", t->dim()}};
  bool ok = duality.pass;
  if (extract) {
    auto l = extract_L_minus(lam, mu, n);
    auto psi = iso_check(psi_invariants(l.module), x);
    auto simple = is_simple(l.field);
    std::printf("L-%s: dim %zu, highest weight %s\n", pair_text(lam, mu).c_str(), l.module->dim(),
                l.highest_weight.to_string().c_str());
    std::printf("  generator %s\n", vector_string(*l.field, l.generator).c_str());
    std::printf("  Psi(L-) ≅ X: %s\n", psi.isomorphic ? "yes" : "no");
    std::printf("  T(X) is %s\n", to_string(simple.verdict).c_str());
    j["dim_L_minus"] = l.module->dim();
    j["highest_weight"] = weight_json(l.highest_weight);
    j["simple"] = simple.verdict == Verdict::simple;
    j["psi_iso"] = psi.isomorphic;
    j["generator"] = vector_json(*l.field, l.generator);
    j["simplicity"] = simplicity_json(*l.field, simple);
    ok = ok && psi.isomorphic;
  }
  j["duality"] = iso_json(duality.iso);
  j["tensor_field"] = module_json(*t, c.dump, c.dump);
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  j["pass"] = ok;
  emit(c, j);
  return ok ? 0 : 1;
}

int cmd_stabilize(const Common& c, const Partition& lam, const Partition& mu, int n_from, int n_to,
                  const std::string& object) {
  auto r = stabilize(lam, mu, n_from, n_to, parse_family(object));
  std::printf("%s%s, W(%d)-part across n = %d..%d\n", object.c_str(), pair_text(lam, mu).c_str(), n_from, n_from, n_to);
  for (const auto& [n, ch] : r.characters)
    std::printf("  n = %d: dim %lld over %zu grades\n", n, ch.total(), ch.dims.size());
  if (!r.stabilized) std::printf("  %s\n", r.detail.c_str());
  std::printf("stabilized: %s\n", r.stabilized ? "true" : "false");
  emit(c, stabilization_json(r));
  return r.stabilized ? 0 : 1;
}

int cmd_suite(const Common& c, bool serial) {
  auto rs = run_suite(!serial);
  bool ok = true;
  for (const auto& r : rs) {
    std::printf("criterion %d %-28s %s  %s\n", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str());
    ok = ok && r.pass;
  }
  emit(c, Json{{"criteria", suite_json(rs)}, {"pass", ok}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the Lie superalgebra W(n) and its modules"};
  app.require_subcommand(1);
  Common c;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool sign_bug = false, minus = false, extract = false, serial = false;
  int cutoff = 2, n_from = 0, n_to = 0;
  std::string order = "interleaved", object = "L-";

  auto with_common = [&](CLI::App* s) {
    s->add_option("--n", c.n, "rank");
    s->add_option("--out", c.out, "write a JSON report to this file");
    return s;
  };
  auto* dims = with_common(app.add_subcommand("dims", "dimensions of the Z-graded pieces of W(n)"));
  auto* check = with_common(app.add_subcommand("check", "Jacobi, Leibniz and representation checks"));
  check->add_option("--samples", samples);
  check->add_option("--seed", seed);
  check->add_flag("--inject-sign-bug", sign_bug, "use the sign-flipped bracket");
  auto* socle = with_common(app.add_subcommand("socle", "compare S_λ(V)⊗S_μ(V*) with the socle-layer multiplicities"));
  add_pair(socle, c);
  auto* kac = with_common(app.add_subcommand("kac", "induced modules K+ and truncated K-"));
  add_pair(kac, c);
  kac->add_flag("--minus", minus, "K- instead of K+");
  kac->add_option("-D,--degree-cutoff", cutoff, "PBW degree cutoff for K-");
  kac->add_option("--order", order, "Borel order for V_{λ,μ}")->check(CLI::IsMember({"natural", "interleaved"}));
  auto* tf = with_common(app.add_subcommand("tensorfield", "tensor-field module T(V_{λ,μ})"));
  add_pair(tf, c);
  tf->add_flag("--extract", extract, "also extract the highest weight submodule L-");
  auto* stab = with_common(app.add_subcommand("stabilize", "compare a family across ranks"));
  add_pair(stab, c);
  stab->add_option("--n-from", n_from)->required();
  stab->add_option("--n-to", n_to)->required();
  stab->add_option("--object", object, "L-, T or K+");
  auto* suite = with_common(app.add_subcommand("suite", "run the full acceptance battery"));
  suite->add_flag("--serial", serial, "run criteria one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Partition lam = Partition::parse(c.lambda), mu = Partition::parse(c.mu);
    if (*dims) return cmd_dims(c);
    if (*check) return cmd_check(c, samples, seed, sign_bug);
    if (*socle) return cmd_socle(c, lam, mu);
    if (*kac) return cmd_kac(c, lam, mu, minus, cutoff, order);
    if (*tf) return cmd_tensorfield(c, lam, mu, extract);
    if (*stab) return cmd_stabilize(c, lam, mu, n_from, n_to, object);
    if (*suite) return cmd_suite(c, serial);
  } catch (const std::invalid_argument& e) {  // includes RankError
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
