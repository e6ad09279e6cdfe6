// Command-line front end: generating sets, closures, tables, verification.
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mingens/boolmat.hpp"
#include "mingens/breen.hpp"
#include "mingens/cache.hpp"
#include "mingens/exec.hpp"
#include "mingens/genset.hpp"
#include "mingens/io.hpp"
#include "mingens/monoid.hpp"
#include "mingens/prime_filter.hpp"
#include "mingens/reproduce.hpp"
#include "mingens/tropical.hpp"
#include "mingens/version.hpp"
#include "mingens/zn.hpp"

using nlohmann::json;
using namespace mingens;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCap = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool long_tier = false;
  int threads = 0;
  std::string cache_dir;
  std::uint64_t seed = 1;
};

// Prime representatives through the cache when one is configured.
class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {
    auto dir = ResultCache::default_dir(g.cache_dir);
    if (!dir.empty()) cache_.emplace(dir);
  }

  std::vector<BoolMat> primes(int n, const PrimeOptions& opt, FilterStats* stats) {
    const CacheKey key{"primes", n, "filter=" + to_string(opt.kind)};
    if (cache_) {
      if (auto lines = cache_->load(key)) {
        std::vector<BoolMat> out;
        for (const auto& l : *lines) out.push_back(BoolMat::from_bits(l));
        return out;
      }
    }
    auto p = prime_representatives(n, opt, stats);
    if (cache_) {
      std::vector<std::string> lines;
      for (const auto& a : p) lines.push_back(a.to_string());
      cache_->store(key, lines);
    }
    return p;
  }

  std::size_t cache_hits() const { return cache_ ? cache_->hits() : 0; }

  // Prints the result and the run manifest. Run statistics are left out of
  // the digest; a warm cache skips the work they describe.
  int emit(RunManifest& m, json result, const std::string& text, int code) {
    json digested = result;
    digested.erase("stats");
    m.finish(digested, cache_hits());
    if (g_.json) {
      result["manifest"] = m.to_json();
      std::cout << result.dump(2) << '\n';
    } else {
      std::cout << text;
    }
    return code;
  }

  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
  std::optional<ResultCache> cache_;
};

std::string yesno(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

// Largest n for which closure certification is attempted.
int certify_limit(MonoidTag t) {
  switch (t) {
    case MonoidTag::ut:
    case MonoidTag::lt:
      return 5;
    default:
      return 4;
  }
}

GenSetReport build_genset(Session& s, MonoidTag tag, int n, const PrimeOptions& popt) {
  if (n < 1) throw UsageError("--n must be positive");
  const bool primes_needed = (tag == MonoidTag::full || tag == MonoidTag::hall) && n >= 3;
  if (primes_needed) {
    if (n > 7) throw UsageError("full and hall sets are supported for n <= 7");
    if (n == 7 && !s.globals().long_tier) throw TierExceeded("n = 7 needs --long");
    FilterStats st;
    auto p = s.primes(n, popt, &st);
    GenSetReport r;
    r.n = n;
    r.generators = {named::T(n), named::U(n), named::E(n)};
    if (tag == MonoidTag::full) r.generators.push_back(named::F(n));
    r.generators.insert(r.generators.end(), p.begin(), p.end());
    r.monoid = tag;
    r.rank = r.generators.size();
    r.notes.push_back(std::to_string(p.size()) + " prime J-class representatives");
    return r;
  }
  if (tag == MonoidTag::reflexive) {
    if (n > 6) throw UsageError("reflexive sets are supported for n <= 6");
    return reflexive_generators(n);
  }
  if (tag == MonoidTag::gossip && n < 2) throw UsageError("gossip needs n >= 2");
  return generators_for(tag, n);
}

int cmd_genset(Session& s, const std::string& monoid, int n, bool certify_flag, const std::string& filter,
               bool use_prefilter) {
  const MonoidTag tag = monoid_from_string(monoid);
  PrimeOptions popt;
  popt.kind = filter_kind_from_string(filter);
  popt.use_prefilter = use_prefilter;
  RunManifest m("genset", {{"monoid", monoid}, {"n", std::to_string(n)}, {"certify", certify_flag ? "1" : "0"},
                           {"filter", filter}, {"prefilter", use_prefilter ? "1" : "0"}});
  GenSetReport r = build_genset(s, tag, n, popt);
  if (certify_flag) {
    if (n > certify_limit(tag))
      throw CapExceeded(static_cast<std::size_t>(ClosureOptions{}.cap));
    certify(r);
  }
  std::ostringstream text;
  text << "monoid " << to_string(tag) << ", n = " << n << ", rank " << r.rank << '\n';
  if (certify_flag)
    text << "closure size " << r.certified.closure_size << ", generates " << yesno(r.certified.generates)
         << ", irredundant " << yesno(r.certified.irredundant) << '\n';
  for (const auto& note : r.notes) text << "note: " << note << '\n';
  const bool ok = !certify_flag || (r.certified.generates.value_or(true) && r.certified.irredundant.value_or(true));
  return s.emit(m, to_json(r), text.str(), ok ? kOk : kFail);
}

int cmd_verify(Session& s, const std::string& file, const std::string& target, bool check_irredundant) {
  RunManifest m("verify", {{"file", file}, {"target", target}});
  const MonoidTag tag = monoid_from_string(target);
  GenSetReport r;
  try {
    r.generators = read_boolmats(file);
  } catch (const ParseError& e) {
    throw UsageError(file + ": " + e.what());
  }
  if (r.generators.empty()) throw UsageError(file + ": no matrices");
  r.n = r.generators.front().dim();
  for (const auto& g : r.generators)
    if (g.dim() != r.n) throw UsageError(file + ": matrices of different sizes");
  r.monoid = tag;
  r.rank = r.generators.size();
  certify(r, {}, check_irredundant);
  json j = {{"target", target}, {"n", r.n}, {"generators", r.rank}, {"certified", to_json(r.certified)}};
  std::ostringstream text;
  text << "generates " << yesno(r.certified.generates) << ", irredundant " << yesno(r.certified.irredundant)
       << ", closure " << r.certified.closure_size;
  if (r.certified.target_size) text << " of " << *r.certified.target_size;
  text << '\n';
  const bool ok = r.certified.generates.value_or(false) && r.certified.irredundant.value_or(true);
  return s.emit(m, j, text.str(), ok ? kOk : kFail);
}

int cmd_closure(Session& s, const std::string& file, const std::string& green) {
  RunManifest m("closure", {{"file", file}, {"green", green}});
  std::vector<BoolMat> gens;
  try {
    gens = read_boolmats(file);
  } catch (const ParseError& e) {
    throw UsageError(file + ": " + e.what());
  }
  if (gens.empty()) throw UsageError(file + ": no matrices");
  auto cl = closure<BoolMat>(std::span<const BoolMat>(gens));
  json j = {{"size", cl.size()}};
  std::ostringstream text;
  text << "closure size " << cl.size() << '\n';
  if (!green.empty()) {
    const Green g = green_from_string(green);
    auto p = greens_classes(cl, std::span<const BoolMat>(gens), g);
    j["classes"] = p.count;
    text << green << "-classes " << p.count << '\n';
  }
  return s.emit(m, j, text.str(), kOk);
}

int cmd_tropical(Session& s, const std::string& flavor, int t, bool list, bool verify) {
  RunManifest m("tropical", {{"flavor", flavor}, {"t", std::to_string(t)}});
  const Flavor f = flavor_from_string(flavor);
  if (t < 1) throw UsageError("--t must be at least 1; t = 0 is the boolean monoid (use genset --monoid full --n 2)");
  auto gens = f == Flavor::min_plus ? minplus_generators(t) : maxplus_generators(t);
  json j = {{"flavor", to_string(f)}, {"t", t}, {"count", gens.size()}};
  std::ostringstream text;
  text << gens.size() << " generators\n";
  if (list || !verify) {
    auto arr = json::array();
    for (const auto& g : gens) {
      arr.push_back(g.to_string());
      text << g.to_string() << '\n';
    }
    j["generators"] = arr;
  }
  int code = kOk;
  if (verify) {
    if (t > 4) throw CapExceeded(ClosureOptions{}.cap);
    auto cl = closure<TropMat>(std::span<const TropMat>(gens));
    const std::size_t target = static_cast<std::size_t>((t + 2) * (t + 2) * (t + 2) * (t + 2));
    auto irr = is_irredundant<TropMat>(std::span<const TropMat>(gens));
    j["closure_size"] = cl.size();
    j["target_size"] = target;
    j["irredundant"] = irr.irredundant;
    text << "closure " << cl.size() << " of " << target << ", irredundant " << (irr.irredundant ? "yes" : "no")
         << '\n';
    if (cl.size() != target || !irr.irredundant) code = kFail;
  }
  return s.emit(m, j, text.str(), code);
}

int cmd_zn(Session& s, Residue n, int k, const std::string& diag_file, bool rel_rank, bool verify) {
  RunManifest m("zn", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"diag", diag_file}});
  if (n < 1) throw UsageError("--n must be positive");
  json j = {{"n", n}, {"k", k}};
  std::ostringstream text;
  int code = kOk;
  if (!diag_file.empty()) {
    if (n < 2) throw UsageError("diagonal form needs n >= 2");
    std::ifstream in(diag_file);
    if (!in) throw UsageError("cannot open " + diag_file);
    ZnMat a;
    try {
      a = parse_znmat(in, n);
    } catch (const ParseError& e) {
      throw UsageError(diag_file + ": " + e.what());
    }
    auto d = standard_diagonal_form(a);
    j["diagonal_form"] = to_json(d);
    text << "diagonal";
    for (int i = 0; i < d.diag.dim(); ++i) text << ' ' << d.diag.at(i, i);
    text << "\nleft unit\n" << d.left_unit.to_string() << "right unit\n" << d.right_unit.to_string();
  }
  if (rel_rank || (diag_file.empty() && !verify)) {
    j["relative_rank"] = relative_rank(n);
    text << "relative rank " << relative_rank(n) << '\n';
  }
  if (verify) {
    if (n < 2 || k < 1) throw UsageError("--verify needs n >= 2 and k >= 1");
    auto units = enumerate_units(n, k);
    auto xs = xp_generators(n, k);
    std::vector<ZnMat> gens = units;
    gens.insert(gens.end(), xs.begin(), xs.end());
    auto cl = closure<ZnMat>(std::span<const ZnMat>(gens));
    std::uint64_t target = 1;
    for (int i = 0; i < k * k; ++i) target *= static_cast<std::uint64_t>(n);
    bool irredundant = true;
    for (std::size_t p = 0; p < xs.size(); ++p) {
      std::vector<ZnMat> rest = units;
      for (std::size_t q = 0; q < xs.size(); ++q)
        if (q != p) rest.push_back(xs[q]);
      if (closure<ZnMat>(std::span<const ZnMat>(rest)).size() == cl.size()) irredundant = false;
    }
    j["units"] = units.size();
    j["closure_size"] = cl.size();
    j["target_size"] = target;
    j["xp_irredundant"] = irredundant;
    text << "|GL| " << units.size() << ", closure " << cl.size() << " of " << target << ", X_p irredundant "
         << (irredundant ? "yes" : "no") << '\n';
    if (cl.size() != target || !irredundant) code = kFail;
  }
  return s.emit(m, j, text.str(), code);
}

int cmd_reproduce(Session& s, const std::string& table, int max_n) {
  RunManifest m("reproduce", {{"table", table}, {"max_n", std::to_string(max_n)},
                              {"long", s.globals().long_tier ? "1" : "0"}});
  ReproOptions opt;
  opt.max_n = max_n;
  opt.long_tier = s.globals().long_tier;
  const int t = table_from_string(table);
  auto rows = reproduce_table(t, opt);
  json arr = json::array();
  std::ostringstream text;
  bool failed = false;
  for (const auto& r : rows) {
    arr.push_back({{"quantity", r.quantity},
                   {"n", r.n},
                   {"expected", r.expected},
                   {"computed", r.computed ? json(*r.computed) : json(nullptr)},
                   {"status", to_string(r.status)},
                   {"note", r.note}});
    text << r.quantity << " n=" << r.n << " expected " << r.expected << " computed "
         << (r.computed ? std::to_string(*r.computed) : std::string("-")) << "  " << to_string(r.status);
    if (!r.note.empty()) text << " (" << r.note << ')';
    text << '\n';
    failed |= r.status == RowStatus::fail;
  }
  return s.emit(m, {{"table", t}, {"rows", arr}}, text.str(), failed ? kFail : kOk);
}

int cmd_enumerate(Session& s, int n, const std::string& what, bool count_only) {
  RunManifest m("enumerate", {{"n", std::to_string(n)}, {"what", what}});
  if (n < 1 || n > kMaxEnumDim) throw UsageError("--n must be in 1..8");
  if (n >= 7 && !s.globals().long_tier) throw TierExceeded("n >= 7 needs --long");
  std::vector<BoolMat> mats;
  std::uint64_t count = 0;
  if (what == "trim") {
    mats = trim_breen(n);
  } else if (what == "superset") {
    mats = canonical_superset(n);
  } else if (what == "reflexive") {
    mats = reflexive_representatives(n);
  } else if (what == "breen") {
    count = count_breen(n);
    count_only = true;
  } else if (what == "jclasses") {
    count = count_jclasses(n);
    count_only = true;
  } else {
    throw UsageError("unknown --what: " + what);
  }
  if (!mats.empty() || count == 0) count = mats.size();
  json j = {{"what", what}, {"n", n}, {"count", count}};
  std::ostringstream text;
  text << count << '\n';
  if (!count_only) {
    auto arr = json::array();
    for (const auto& a : mats) {
      arr.push_back(a.to_string());
      text << a.to_string() << '\n';
    }
    j["matrices"] = arr;
  }
  return s.emit(m, j, text.str(), kOk);
}

int cmd_primes(Session& s, int n, const std::string& filter, bool use_prefilter) {
  RunManifest m("primes", {{"n", std::to_string(n)}, {"filter", filter}, {"prefilter", use_prefilter ? "1" : "0"}});
  if (n < 1 || n > 7) throw UsageError("--n must be in 1..7");
  if (n == 7 && !s.globals().long_tier) throw TierExceeded("n = 7 needs --long");
  PrimeOptions opt;
  opt.kind = filter_kind_from_string(filter);
  opt.use_prefilter = use_prefilter;
  FilterStats st;
  const std::size_t hits_before = s.cache_hits();
  auto p = s.primes(n, opt, &st);
  const bool cached = s.cache_hits() > hits_before;
  json arr = json::array();
  std::ostringstream text;
  text << p.size() << " primes\n";
  for (const auto& a : p) {
    arr.push_back(a.to_string());
    text << a.to_string() << '\n';
  }
  json j = {{"n", n}, {"filter", filter}, {"count", p.size()}, {"primes", arr}};
  if (cached)
    j["stats"] = nullptr;
  else
    j["stats"] = {{"input", st.input}, {"row_spaces", st.x_size}, {"embedding_searches", st.embedding_searches},
                  {"prefiltered", st.prefiltered}};
  return s.emit(m, j, text.str(), kOk);
}

// Randomised spot checks of algebraic contracts, reproducible by --seed.
int cmd_selfcheck(Session& s, int samples) {
  RunManifest m("selfcheck", {{"seed", std::to_string(s.globals().seed)}, {"samples", std::to_string(samples)}});
  std::mt19937_64 rng(s.globals().seed);
  std::uniform_int_distribution<int> dim(1, 8);
  std::size_t failures = 0;
  for (int i = 0; i < samples; ++i) {
    const int n = dim(rng);
    std::uniform_int_distribution<Word> bits(0, low_mask(n));
    BoolMat a(n), b(n);
    for (int r = 0; r < n; ++r) {
      a.set_row(r, bits(rng));
      b.set_row(r, bits(rng));
    }
    if (!row_space(a * b).subset_of(row_space(b))) ++failures;
    const bool inside = row_space(a).subset_of(row_space(b));
    if ((greedy_left_multiplier(a, b) * b == a) != inside) ++failures;
    std::uniform_int_distribution<Residue> mod_dist(2, 12);
    const Residue zn = mod_dist(rng);
    const int k = 2 + (i % 2);
    std::uniform_int_distribution<Residue> entry(0, zn - 1);
    std::vector<Residue> e(static_cast<std::size_t>(k * k));
    for (auto& x : e) x = entry(rng);
    ZnMat z(k, zn, e);
    auto d = standard_diagonal_form(z);
    if (d.left_unit * d.diag * d.right_unit != z || !is_standard_diagonal(d.diag)) ++failures;
  }
  json j = {{"samples", samples}, {"failures", failures}};
  std::ostringstream text;
  text << samples << " samples, " << failures << " failures\n";
  return s.emit(m, j, text.str(), failures ? kFail : kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal generating sets for boolean, tropical and Z_n matrix monoids"};
  app.set_version_flag("--version", std::string(kVersion) + " (" + kGitHash + ")");
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--long", g.long_tier, "Allow long-running tiers");
  app.add_option("--threads", g.threads, "Worker threads (default: all)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", g.cache_dir, "Result cache directory (env MINGENS_CACHE_DIR)");
  app.add_option("--seed", g.seed, "Seed for randomised checks");

  std::function<int(Session&)> run;

  auto* genset = app.add_subcommand("genset", "Minimal generating set of a boolean matrix monoid");
  std::string monoid, filter = "rowspace";
  int n = 0;
  bool certify_flag = false, prefilter = false;
  genset->add_option("--monoid", monoid)
      ->required()
      ->check(CLI::IsMember({"full", "reflexive", "hall", "ut", "lt", "gossip"}));
  genset->add_option("--n", n)->required();
  genset->add_flag("--certify", certify_flag, "Check generation and irredundancy by closure");
  genset->add_option("--filter", filter)->check(CLI::IsMember({"rowspace", "embedding"}));
  genset->add_flag("--prefilter", prefilter);
  genset->callback([&] { run = [&](Session& s) { return cmd_genset(s, monoid, n, certify_flag, filter, prefilter); }; });

  auto* verify = app.add_subcommand("verify", "Certify a generator file against a target monoid");
  std::string file, target = "full";
  bool skip_irr = false;
  verify->add_option("--file", file)->required()->check(CLI::ExistingFile);
  verify->add_option("--target", target)->check(CLI::IsMember({"full", "reflexive", "hall", "ut", "lt", "gossip"}));
  verify->add_flag("--no-irredundant", skip_irr);
  verify->callback([&] { run = [&](Session& s) { return cmd_verify(s, file, target, !skip_irr); }; });

  auto* clos = app.add_subcommand("closure", "Size and Green's classes of the generated semigroup");
  std::string green;
  clos->add_option("--file", file)->required()->check(CLI::ExistingFile);
  clos->add_option("--green", green)->check(CLI::IsMember({"L", "R", "J", "H"}));
  clos->callback([&] { run = [&](Session& s) { return cmd_closure(s, file, green); }; });

  auto* trop = app.add_subcommand("tropical", "2x2 thresholded tropical generating sets");
  std::string flavor = "min";
  int t = 1;
  bool list = false, tverify = false;
  trop->add_option("--flavor", flavor)->check(CLI::IsMember({"min", "max"}));
  trop->add_option("--t", t)->required();
  trop->add_flag("--list-gens", list);
  trop->add_flag("--verify", tverify);
  trop->callback([&] { run = [&](Session& s) { return cmd_tropical(s, flavor, t, list, tverify); }; });

  auto* zn = app.add_subcommand("zn", "Matrices over Z/nZ");
  Residue modulus = 0;
  int k = 2;
  std::string diag_file;
  bool rel = false, zverify = false;
  zn->add_option("--n", modulus)->required();
  zn->add_option("--k", k);
  zn->add_option("--diag", diag_file, "File with k rows of k residues");
  zn->add_flag("--relative-rank", rel);
  zn->add_flag("--verify", zverify);
  zn->callback([&] { run = [&](Session& s) { return cmd_zn(s, modulus, k, diag_file, rel, zverify); }; });

  auto* repro = app.add_subcommand("reproduce", "Recompute reference tables");
  std::string table;
  int max_n = 5;
  repro->add_option("--table", table, "1|ranks, 2|lclasses, 3|enumeration, 4|filter")->required();
  repro->add_option("--max-n", max_n);
  repro->callback([&] { run = [&](Session& s) { return cmd_reproduce(s, table, max_n); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Breen-form enumeration");
  std::string what = "superset";
  bool count_only = false;
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--what", what)->check(CLI::IsMember({"trim", "superset", "reflexive", "breen", "jclasses"}));
  enumerate->add_flag("--count", count_only);
  enumerate->callback([&] { run = [&](Session& s) { return cmd_enumerate(s, n, what, count_only); }; });

  auto* primes = app.add_subcommand("primes", "Prime J-class representatives");
  primes->add_option("--n", n)->required();
  primes->add_option("--filter", filter)->check(CLI::IsMember({"rowspace", "embedding"}));
  primes->add_flag("--prefilter", prefilter);
  primes->callback([&] { run = [&](Session& s) { return cmd_primes(s, n, filter, prefilter); }; });

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomised property checks");
  int samples = 1000;
  selfcheck->add_option("--samples", samples)->check(CLI::PositiveNumber);
  selfcheck->callback([&] { run = [&](Session& s) { return cmd_selfcheck(s, samples); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (g.threads > 0) set_threads(g.threads);
  Session session(g);
  try {
    return run(session);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const TierExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
