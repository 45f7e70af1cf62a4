#include "schubert/report.hpp"

#include <sstream>

#include "json.hpp"
#include "schubert/birkhoff.hpp"
#include "schubert/chains.hpp"
#include "schubert/lattice.hpp"

namespace schubert {

bool OracleResults::all_agree() const noexcept {
  return chain_matches_direct && chain_length_matches && tau_matches && twist_duality &&
         dist_matches_fpt && rank_matches_neg_a && birkhoff_roundtrip;
}

namespace {

OracleResults run_oracles(const GammaTuple& gamma, int fpt_value, int neg_a, const Budgets& budgets) {
  OracleResults o;
  const auto lat = SchubertLattice::enumerate(gamma, budgets.lattice);
  o.principal_chain = principal_chain(lat);
  o.chain_matches_direct = o.principal_chain == principal_chain_direct(gamma);
  o.chain_length_matches = static_cast<int>(o.principal_chain.size()) == neg_a;

  const auto dual = twist(gamma);
  o.tau_of_twist = tau(dual);
  o.tau_matches = o.tau_of_twist == neg_a;
  std::vector<GammaTuple> twisted;
  for (const auto& x : o.principal_chain) twisted.push_back(twist(x));
  o.twist_duality = decrement_chain(dual).steps == twisted;

  if (lat.size() == 1) {
    const IrreduciblePoset empty;
    const auto stats = chain_stats(empty);
    o.dist = stats.dist;
    o.rank = stats.rank;
    o.birkhoff_roundtrip = verify_birkhoff_isomorphism(lat, empty, ideal_lattice(empty, budgets.ideals));
  } else {
    const auto poset = join_irreducibles(lat);
    const auto stats = chain_stats(poset);
    o.dist = stats.dist;
    o.rank = stats.rank;
    o.birkhoff_roundtrip = verify_birkhoff_isomorphism(lat, poset, ideal_lattice(poset, budgets.ideals));
  }
  o.dist_matches_fpt = o.dist == fpt_value;
  o.rank_matches_neg_a = o.rank == neg_a;
  return o;
}

std::vector<int> to_vector(const GammaTuple& g) { return {g.entries().begin(), g.entries().end()}; }

std::vector<int> interval_sizes(const std::vector<IntInterval>& parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(p.size());
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

InvariantReport build_report(const GammaTuple& gamma, bool oracles, const Budgets& budgets) {
  InvariantReport r{.gamma = gamma, .decomposition = decompose(gamma), .kappas = {}, .oracles = {}};
  r.degenerate_top = gamma.is_top();
  if (!r.degenerate_top) r.kappas = kappa_profile(r.decomposition).kappas;
  r.fpt = fpt(gamma);
  r.neg_a = neg_a_invariant(gamma);
  r.gorenstein = r.fpt == r.neg_a;
  r.chain_length = static_cast<int>(principal_chain_direct(gamma).size());
  if (oracles) r.oracles = run_oracles(gamma, r.fpt, r.neg_a, budgets);
  return r;
}

std::string report_to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "schubert.invariant-report";
  j["schema_version"] = kReportSchemaVersion;
  j["gamma"] = to_vector(r.gamma);
  j["d"] = r.gamma.d();
  j["n"] = r.gamma.n();
  j["blocks"] = interval_sizes(r.decomposition.blocks);
  j["gaps"] = interval_sizes(r.decomposition.gaps);
  j["s"] = r.decomposition.s;
  j["t"] = r.decomposition.t;
  j["kappas"] = r.kappas;
  j["fpt"] = r.fpt;
  j["neg_a"] = r.neg_a;
  j["gorenstein"] = r.gorenstein;
  j["degenerate_top"] = r.degenerate_top;
  j["chain_length"] = r.chain_length;
  if (r.oracles) {
    const auto& o = *r.oracles;
    nlohmann::ordered_json oj;
    auto chain = nlohmann::ordered_json::array();
    for (const auto& x : o.principal_chain) chain.push_back(to_vector(x));
    oj["principal_chain"] = std::move(chain);
    oj["tau_of_twist"] = o.tau_of_twist;
    oj["dist"] = o.dist;
    oj["rank"] = o.rank;
    oj["agreement"] = {
        {"chain_matches_direct", o.chain_matches_direct},
        {"chain_length_matches_neg_a", o.chain_length_matches},
        {"tau_matches_neg_a", o.tau_matches},
        {"twist_duality", o.twist_duality},
        {"dist_matches_fpt", o.dist_matches_fpt},
        {"rank_matches_neg_a", o.rank_matches_neg_a},
        {"birkhoff_roundtrip", o.birkhoff_roundtrip},
    };
    oj["all_agree"] = o.all_agree();
    j["oracles"] = std::move(oj);
  }
  return j.dump(2) + "\n";
}

std::string report_to_table(const InvariantReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 16 ? 16 - key.size() : 1, ' ') << value << "\n";
  };
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  row("gamma", r.gamma.to_string());
  row("d", std::to_string(r.gamma.d()));
  row("n", std::to_string(r.gamma.n()));
  row("blocks", join_ints(interval_sizes(r.decomposition.blocks)));
  row("gaps", join_ints(interval_sizes(r.decomposition.gaps)));
  row("s", std::to_string(r.decomposition.s));
  row("t", std::to_string(r.decomposition.t));
  row("kappas", r.kappas.empty() ? "-" : join_ints(r.kappas));
  row("fpt", std::to_string(r.fpt));
  row("neg_a", std::to_string(r.neg_a));
  row("gorenstein", yes_no(r.gorenstein));
  row("degenerate_top", yes_no(r.degenerate_top));
  row("chain_length", std::to_string(r.chain_length));
  if (r.oracles) {
    const auto& o = *r.oracles;
    row("oracle.chain", std::to_string(o.principal_chain.size()) + " tuples, direct " + yes_no(o.chain_matches_direct));
    row("oracle.tau", std::to_string(o.tau_of_twist) + " (" + yes_no(o.tau_matches) + ")");
    row("oracle.duality", yes_no(o.twist_duality));
    row("oracle.dist", std::to_string(o.dist) + " (" + yes_no(o.dist_matches_fpt) + ")");
    row("oracle.rank", std::to_string(o.rank) + " (" + yes_no(o.rank_matches_neg_a) + ")");
    row("oracle.birkhoff", yes_no(o.birkhoff_roundtrip));
    row("all_agree", yes_no(o.all_agree()));
  }
  return out.str();
}

}  // namespace schubert
