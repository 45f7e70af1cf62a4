#include "schubert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "schubert/birkhoff.hpp"
#include "schubert/chains.hpp"
#include "schubert/lattice.hpp"
#include "schubert/monomials.hpp"

namespace schubert {

namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::tuple, "tuple"},         {Check::tau, "tau"},
    {Check::chains, "chains"},       {Check::structure, "structure"},
    {Check::birkhoff, "birkhoff"},   {Check::monomials, "monomials"},
    {Check::gorenstein, "gorenstein"},
};

// Per-instance cache so the checks share one lattice and one poset.
class Instance {
 public:
  Instance(const GammaTuple& gamma, const Budgets& budgets) : gamma_(gamma), budgets_(budgets) {}

  const GammaTuple& gamma() const { return gamma_; }
  const Budgets& budgets() const { return budgets_; }

  const SchubertLattice& lattice() {
    if (!lattice_) lattice_ = SchubertLattice::enumerate(gamma_, budgets_.lattice);
    return *lattice_;
  }

  const IrreduciblePoset& poset() {
    if (!poset_) poset_ = lattice().size() == 1 ? IrreduciblePoset{} : join_irreducibles(lattice());
    return *poset_;
  }

 private:
  GammaTuple gamma_;
  Budgets budgets_;
  std::optional<SchubertLattice> lattice_;
  std::optional<IrreduciblePoset> poset_;
};

// Collects the first failed condition of a check.
struct Verdict {
  std::string failure;
  bool sampled = false;
  bool not_applicable = false;

  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  void absorb(const CheckOutcome& outcome, const std::string& what) {
    sampled = sampled || outcome.sampled;
    if (outcome.skipped)
      throw Error(ErrorKind::budget_exceeded, what + " skipped: " + outcome.detail);
    require(outcome.passed, what + ": " + outcome.detail);
  }
};

std::string chain_string(const std::vector<GammaTuple>& chain) {
  std::string out;
  for (const auto& x : chain) out += x.to_string();
  return out;
}

void check_tuple(Instance& in, Verdict& v) {
  const auto& g = in.gamma();
  const auto dec = decompose(g);
  v.require(reassemble(dec) == g, "decompose/reassemble round trip");
  const int expected_t = g[static_cast<std::size_t>(g.d() - 1)] == g.n() ? dec.s - 1 : dec.s;
  v.require(dec.t == expected_t, "t rule");
  const auto dual = twist(g);
  v.require(twist(dual) == g, "twist is not an involution");
  for (const auto& c : increment_covers(g)) {
    const auto tc = twist(c);
    v.require(leq(tc, dual) && tc != dual, "twist does not reverse " + g.to_string() + " < " + c.to_string());
    const auto back = increment_covers(tc);
    v.require(std::ranges::find(back, dual) != back.end(),
              "twist does not map the cover " + c.to_string() + " to a cover");
  }
  if (!g.is_top()) {
    const auto profile = kappa_profile(dec);
    v.require(profile.kappa_min <= profile.kappa_max, "kappa' > kappa");
    v.require(fpt(g) == profile.kappa_min && neg_a_invariant(g) == profile.kappa_max, "fpt/neg_a formulas");
  } else {
    v.require(fpt(g) == 1 && neg_a_invariant(g) == 1, "top tuple must give fpt = neg_a = 1");
  }
  if (!g.is_bottom()) v.require(check_m_value_decrement(g.entries()), "m-value decrement");
}

void check_tau(Instance& in, Verdict& v, std::string& tau_case) {
  const auto& g = in.gamma();
  if (g.is_bottom()) {
    v.not_applicable = true;
    return;
  }
  tau_case = std::string(to_string(classify_tau_case(g.entries())));
  v.require(verify_tau_formula(g),
            "tau=" + std::to_string(tau(g)) + " but m+d+1=" + std::to_string(m_value(g) + g.d() + 1));
}

void check_chains(Instance& in, Verdict& v) {
  const auto& g = in.gamma();
  const auto chain = principal_chain(in.lattice());
  const auto direct = principal_chain_direct(g);
  v.require(chain == direct, "lattice chain " + chain_string(chain) + " != direct " + chain_string(direct));
  const int neg_a = neg_a_invariant(g);
  v.require(static_cast<int>(chain.size()) == neg_a,
            "chain length " + std::to_string(chain.size()) + " != neg_a " + std::to_string(neg_a));
  const auto dual = twist(g);
  v.require(tau(dual) == neg_a, "tau(twist) " + std::to_string(tau(dual)) + " != neg_a");
  std::vector<GammaTuple> twisted;
  for (const auto& x : chain) twisted.push_back(twist(x));
  v.require(decrement_chain(dual).steps == twisted, "twisted principal chain != Algorithm 2 chain");
}

void check_structure(Instance& in, Verdict& v) {
  const auto& lat = in.lattice();
  const auto& limits = in.budgets().structure;
  v.absorb(check_upward_closed(lat), "upward closure");
  v.absorb(check_lattice_closed(lat, limits), "join/meet closure");
  v.absorb(check_distributive(lat, limits), "distributivity");
  v.absorb(check_cover_rule(lat, limits), "cover rule");
  v.absorb(check_omega_sets(lat), "omega sets");
  auto covers = lat.covers(lat.gamma());
  auto neighbours = upper_neighbors(lat.gamma());
  std::ranges::sort(covers);
  std::ranges::sort(neighbours);
  v.require(covers == neighbours, "upper neighbours differ from the covers of gamma");
}

void check_birkhoff(Instance& in, Verdict& v) {
  const auto& g = in.gamma();
  const auto& poset = in.poset();
  const auto stats = chain_stats(poset);
  v.require(stats.dist == fpt(g), "dist " + std::to_string(stats.dist) + " != fpt " + std::to_string(fpt(g)));
  v.require(stats.rank == neg_a_invariant(g),
            "rank " + std::to_string(stats.rank) + " != neg_a " + std::to_string(neg_a_invariant(g)));
  const auto ideals = ideal_lattice(poset, in.budgets().ideals);
  v.require(verify_birkhoff_isomorphism(in.lattice(), poset, ideals), "ideal lattice is not isomorphic");
}

void check_monomials(Instance& in, Verdict& v) {
  const auto& g = in.gamma();
  if (g.is_top()) {
    v.not_applicable = true;
    return;
  }
  const auto& lat = in.lattice();
  const auto& opts = in.budgets().monomials;
  const auto profile = kappa_profile(decompose(g));
  const auto canonical = min_generation_degree(canonical_spec(g), lat, opts);
  v.require(canonical.verified() && canonical.degree == profile.kappa_max,
            "canonical spec: degree " + std::to_string(canonical.degree) + ", smallest member " +
                std::to_string(canonical.minimal_member));
  for (int m = 1; m <= 3; ++m) {
    const auto anti = min_generation_degree(anticanonical_shifted_spec(g, m), lat, opts);
    v.require(anti.verified() && anti.degree == m * (profile.kappa_max - profile.kappa_min),
              "anticanonical spec m=" + std::to_string(m) + ": degree " + std::to_string(anti.degree) +
                  ", smallest member " + std::to_string(anti.minimal_member));
  }
  const auto gens = generators(principal_spec(lat), lat, opts);
  v.require(gens.size() == 1 && gens.front() == Multichain(lat, {lat.bottom()}),
            "principal spec has " + std::to_string(gens.size()) + " generators");
}

void check_gorenstein(Instance& in, Verdict& v) {
  const auto& g = in.gamma();
  const bool combinatorial = is_gorenstein(decompose(g));
  const bool equal_invariants = fpt(g) == neg_a_invariant(g);
  const auto stats = chain_stats(in.poset());
  const bool equal_chains = stats.dist == stats.rank;
  v.require(combinatorial == equal_invariants && equal_invariants == equal_chains,
            std::string("gorenstein ") + (combinatorial ? "yes" : "no") + ", kappa=kappa' " +
                (equal_invariants ? "yes" : "no") + ", equal chains " + (equal_chains ? "yes" : "no"));
}

CheckResult run_one(Check check, Instance& in, std::string& tau_case) {
  CheckResult r{.check = check, .detail = {}};
  Verdict v;
  try {
    switch (check) {
      case Check::tuple: check_tuple(in, v); break;
      case Check::tau: check_tau(in, v, tau_case); break;
      case Check::chains: check_chains(in, v); break;
      case Check::structure: check_structure(in, v); break;
      case Check::birkhoff: check_birkhoff(in, v); break;
      case Check::monomials: check_monomials(in, v); break;
      case Check::gorenstein: check_gorenstein(in, v); break;
    }
  } catch (const Error& e) {
    r.status = e.kind() == ErrorKind::budget_exceeded ? Status::skipped : Status::failed;
    r.detail = e.what();
    return r;
  } catch (const std::exception& e) {
    r.status = Status::failed;
    r.detail = e.what();
    return r;
  }
  r.sampled = v.sampled;
  if (!v.failure.empty()) {
    r.status = Status::failed;
    r.detail = v.failure;
  } else if (v.not_applicable) {
    r.status = Status::not_applicable;
  }
  return r;
}

std::string label(const GammaTuple& g) { return g.to_string() + " n=" + std::to_string(g.n()); }

}  // namespace

std::string_view to_string(Check c) noexcept {
  for (const auto& [check, name] : kCheckNames)
    if (check == c) return name;
  return "unknown";
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (const auto& entry : kCheckNames) out.push_back(entry.first);
    return out;
  }();
  return checks;
}

std::vector<Check> parse_checks(std::string_view text) {
  if (text == "all") return all_checks();
  std::vector<Check> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto name = text.substr(pos, comma - pos);
    const auto it = std::ranges::find(kCheckNames, name, &std::pair<Check, std::string_view>::second);
    if (it == std::end(kCheckNames))
      throw Error(ErrorKind::invalid_argument, "unknown check '" + std::string(name) + "'");
    if (std::ranges::find(out, it->first) == out.end()) out.push_back(it->first);
    pos = comma + 1;
  }
  std::ranges::sort(out);
  return out;
}

InstanceResult verify_instance(const GammaTuple& gamma, const std::vector<Check>& checks,
                               const Budgets& budgets) {
  InstanceResult out{.gamma = gamma, .results = {}, .tau_case = {}};
  Instance in(gamma, budgets);
  for (auto c : checks) out.results.push_back(run_one(c, in, out.tau_case));
  return out;
}

std::vector<GammaTuple> sweep_instances(int max_n) {
  if (max_n < 1) throw Error(ErrorKind::invalid_argument, "max-n must be at least 1");
  if (max_n > 30) throw Error(ErrorKind::invalid_argument, "max-n above 30 is outside the sweep policy");
  std::vector<GammaTuple> out;
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= n; ++d) {
      std::vector<int> a(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) a[static_cast<std::size_t>(j)] = j + 1;
      while (true) {
        out.emplace_back(n, a);
        int j = d - 1;
        while (j >= 0 && a[static_cast<std::size_t>(j)] == n - d + j + 1) --j;
        if (j < 0) break;
        ++a[static_cast<std::size_t>(j)];
        for (int k = j + 1; k < d; ++k) a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)] + 1;
      }
    }
  return out;
}

VerifySummary run_verify(const VerifyOptions& options) {
  const auto instances = sweep_instances(options.max_n);
  std::vector<std::optional<InstanceResult>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      results[i] = verify_instance(instances[i], options.checks, options.budgets);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerifySummary summary;
  summary.max_n = options.max_n;
  summary.instances = instances.size();
  for (auto c : options.checks) summary.tallies[c];
  for (const auto& r : results) {
    if (!r->tau_case.empty()) ++summary.tau_cases[r->tau_case];
    for (const auto& cr : r->results) {
      auto& t = summary.tallies[cr.check];
      t.sampled += cr.sampled;
      switch (cr.status) {
        case Status::passed: ++t.passed; break;
        case Status::not_applicable: ++t.not_applicable; break;
        case Status::failed:
          ++t.failed;
          t.failures.push_back(label(r->gamma) + ": " + cr.detail);
          break;
        case Status::skipped:
          ++t.skipped;
          t.skips.push_back(label(r->gamma) + ": " + cr.detail);
          break;
      }
    }
  }
  return summary;
}

bool VerifySummary::any_failed() const noexcept {
  return std::ranges::any_of(tallies, [](const auto& kv) { return kv.second.failed > 0; });
}

bool VerifySummary::any_skipped() const noexcept {
  return std::ranges::any_of(tallies, [](const auto& kv) { return kv.second.skipped > 0; });
}

bool VerifySummary::all_passed() const noexcept { return !any_failed() && !any_skipped(); }

int VerifySummary::exit_code() const noexcept {
  if (any_failed()) return 1;
  if (any_skipped()) return 3;
  return 0;
}

std::string summary_to_json(const VerifySummary& s) {
  nlohmann::ordered_json j;
  j["schema"] = "schubert.verify-summary";
  j["schema_version"] = 1;
  j["max_n"] = s.max_n;
  j["instances"] = s.instances;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& [c, t] : s.tallies) {
    nlohmann::ordered_json cj;
    cj["check"] = to_string(c);
    cj["passed"] = t.passed;
    cj["failed"] = t.failed;
    cj["skipped"] = t.skipped;
    cj["not_applicable"] = t.not_applicable;
    cj["sampled"] = t.sampled;
    cj["failures"] = t.failures;
    cj["skips"] = t.skips;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["tau_cases"] = s.tau_cases;
  j["result"] = s.any_failed() ? "fail" : (s.any_skipped() ? "incomplete" : "pass");
  return j.dump(2) + "\n";
}

std::string summary_to_text(const VerifySummary& s) {
  std::ostringstream out;
  out << "verify max-n=" << s.max_n << " instances=" << s.instances << "\n";
  out << "check        passed  failed skipped     n/a sampled\n";
  for (const auto& [c, t] : s.tallies) {
    std::string name(to_string(c));
    name.resize(10, ' ');
    char line[96];
    std::snprintf(line, sizeof line, "%s %8zu %7zu %7zu %7zu %7zu\n", name.c_str(), t.passed, t.failed,
                  t.skipped, t.not_applicable, t.sampled);
    out << line;
  }
  if (!s.tau_cases.empty()) {
    out << "tau cases:";
    for (const auto& [k, v] : s.tau_cases) out << " " << k << "=" << v;
    out << "\n";
  }
  for (const auto& [c, t] : s.tallies) {
    for (const auto& f : t.failures) out << "FAIL " << to_string(c) << " " << f << "\n";
    for (const auto& f : t.skips) out << "SKIP " << to_string(c) << " " << f << "\n";
  }
  out << "result: " << (s.any_failed() ? "FAIL" : (s.any_skipped() ? "INCOMPLETE" : "PASS")) << "\n";
  return out.str();
}

}  // namespace schubert
