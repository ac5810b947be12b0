#include "psgcr/cli_run.hpp"

#include <algorithm>
#include <fstream>

#include "psgcr/instance_io.hpp"
#include "psgcr/largeness.hpp"
#include "psgcr/parallel.hpp"
#include "psgcr/report.hpp"

namespace psgcr {

namespace {

std::string prefix_values_str(const Psg& s, const SeqPrefix& f) {
  std::string out = "[";
  for (int t = 1; t <= f.length(); ++t) {
    if (t > 1) out += ",";
    out += s.element(f.value(t)).str();
  }
  return out + "]";
}

void add_bounds(Record& rec, const LargenessReport& rep) {
  for (const auto& [name, value] : rep.bounds) rec.add(name, (long long)value);
}

void run_check(const RunConfig& cfg, Reporter& rep) {
  LoadedInstance li = parse_instance_file(cfg.instance_path);
  const ElemSet& A = li.set(cfg.set_name);
  PsgPtr s = li.instance;

  rep.section("check --notion " + cfg.notion + " --set " + cfg.set_name);
  Record rec;
  rec.add("record", "check").add("notion", cfg.notion).add("set", cfg.set_name);
  rec.add("universe", s->size());
  rec.add("semantics", kLargenessSemantics);

  if (cfg.notion == "ipr") {
    auto f = find_ip_r(s, A, cfg.r);
    rec.add("r", cfg.r);
    rec.add("verdict", f.has_value());
    rec.add("witness", f ? prefix_values_str(*s, *f) : "-");
    rep.emit(rec);
    return;
  }

  LargenessReport lr;
  if (cfg.notion == "thick") {
    lr = is_thick(s, A, cfg.b);
  } else if (cfg.notion == "syndetic") {
    lr = is_syndetic(s, A, cfg.g_max);
  } else if (cfg.notion == "ps") {
    lr = is_piecewise_syndetic(s, A, cfg.g_max, cfg.b);
  } else if (cfg.notion == "cps") {
    lr = is_c_piecewise_syndetic(s, A, cfg.h_max, cfg.t_bound);
  } else if (cfg.notion == "iprstar") {
    lr = is_ip_r_star(s, A, cfg.r);
  } else {
    raise(Err::BadArgument, "unknown notion '" + cfg.notion + "'");
  }
  add_bounds(rec, lr);
  rec.add("verdict", lr.verdict);
  rec.add("vacuous", lr.vacuous);
  rec.add("witness_family",
          lr.witness_family ? join_elems(*s, *lr.witness_family) : "-");
  rec.add("avoiding_prefix",
          lr.avoiding_prefix ? prefix_values_str(*s, *lr.avoiding_prefix) : "-");
  rep.emit(rec);
}

void run_cr(const RunConfig& cfg, Reporter& rep) {
  LoadedInstance li = parse_instance_file(cfg.instance_path);
  const ElemSet& A = li.set(cfg.set_name);
  std::vector<ElemId> L = li.set(cfg.L_name).to_vector();
  std::vector<SeqPrefix> pool = li.pool(cfg.pool_name);
  PsgPtr s = li.instance;

  auto res = k_cr_radius(s, A, cfg.k, L, pool, cfg.m_max, cfg.r_max,
                         cfg.pool_name, cfg.workers);
  rep.section("cr --k " + std::to_string(cfg.k));
  Record rec;
  rec.add("record", "cr").add("k", cfg.k).add("L", cfg.L_name);
  rec.add("pool", res.pool_id).add("pool_size", pool.size());
  rec.add("m_max", res.m_max).add("r_max", res.r_max);
  if (res.r) {
    rec.add("status", "Found").add("r", *res.r);
  } else {
    rec.add("status", "Failure").add("r", "-");
    rec.add("blocking", join_sizes(res.blocking));
    rec.add("blocking_status", to_string(res.blocking_status));
    if (!res.blocking_certificate.empty())
      rec.add("certificate", res.blocking_certificate);
  }
  rep.emit(rec);

  for (const auto& [fam, w] : res.per_family) {
    Record wr;
    wr.add("record", "cr-witness").add("family", join_sizes(fam));
    add_witness_fields(wr, *s, w);
    auto bad = witness_check(*s, A, L, [&] {
      std::vector<SeqPrefix> sub;
      for (size_t i : fam) sub.push_back(pool[i]);
      return sub;
    }(), w);
    wr.add("verified", !bad.has_value());
    rep.emit(wr);
  }
}

void run_dagger(const RunConfig& cfg, Reporter& rep) {
  LoadedInstance li = parse_instance_file(cfg.instance_path);
  std::vector<ElemId> L = li.set(cfg.L_name).to_vector();
  std::vector<SeqPrefix> pool = li.pool(cfg.pool_name);

  auto res = dagger_radius(li.instance, cfg.k, L, pool, cfg.r_max);
  rep.section("dagger --k " + std::to_string(cfg.k));
  Record rec;
  rec.add("record", "dagger").add("k", cfg.k).add("L", cfg.L_name);
  rec.add("pool", cfg.pool_name).add("pool_size", pool.size());
  rec.add("r_max", cfg.r_max);
  rec.add("status", res.r ? "Found" : "Failure");
  rec.add("r", res.r ? std::to_string(*res.r) : "-");
  rec.add("formula_bound",
          res.formula_bound ? std::to_string(*res.formula_bound) : "-");
  if (!res.r) rec.add("blocking", join_sizes(res.blocking));
  rep.emit(rec);
}

void run_ddagger(const RunConfig& cfg, Reporter& rep) {
  LoadedInstance li = parse_instance_file(cfg.instance_path);
  std::vector<ElemId> L = li.set(cfg.L_name).to_vector();
  std::vector<SeqPrefix> pool = li.pool(cfg.pool_name);

  auto r = has_ddagger(li.instance, L, pool, cfg.r_max);
  rep.section("ddagger");
  Record rec;
  rec.add("record", "ddagger").add("L", cfg.L_name);
  rec.add("pool", cfg.pool_name).add("pool_size", pool.size());
  rec.add("r_max", cfg.r_max);
  rec.add("status", r ? "Found" : "Failure");
  rec.add("r", r ? std::to_string(*r) : "-");
  rep.emit(rec);
}

void run_ramsey(const RunConfig& cfg, Reporter& rep) {
  auto res = fu_ramsey_number(cfg.fu_s, cfg.fu_k, cfg.fu_r_max, cfg.workers);
  rep.section("ramsey --s " + std::to_string(cfg.fu_s) + " --k " +
              std::to_string(cfg.fu_k));
  Record rec;
  rec.add("record", "ramsey").add("s", cfg.fu_s).add("k", cfg.fu_k);
  rec.add("r_max", cfg.fu_r_max);
  rec.add("status", res.r ? "Found" : "BoundExhausted");
  rec.add("r", res.r ? std::to_string(*res.r) : "-");

  rec.add("good_at_prev", res.good_at_prev ? "present" : "-");
  rec.add("good_verified",
          res.good_at_prev
              ? (find_mono_ip(*res.good_at_prev, cfg.fu_s) ? "false" : "true")
              : "-");

  if (!cfg.certificate_path.empty()) {
    if (res.good_at_prev) {
      std::ofstream out(cfg.certificate_path);
      if (!out)
        raise(Err::ParseError, cfg.certificate_path + ": cannot write");
      out << res.good_at_prev->str();
      rec.add("certificate", cfg.certificate_path);
    } else {
      rec.add("certificate", "-");
    }
  }
  rep.emit(rec);
}

void run_counterexample(const RunConfig& cfg, Reporter& rep) {
  auto cert = snotcr_verify(cfg.T, cfg.workers);
  rep.section("counterexample --T " + std::to_string(cfg.T));
  for (const auto& run : cert.runs) {
    Record rec;
    rec.add("record", "counterexample").add("T", cfg.T).add("r", run.r);
    rec.add("m_max", kDefaultMMax);
    rec.add("status", to_string(run.result.status));
    rec.add("certificate", run.result.certificate.empty()
                               ? "-"
                               : run.result.certificate);
    rep.emit(rec);
  }
  Record sum;
  sum.add("record", "counterexample-summary").add("T", cfg.T);
  sum.add("universe", cert.instance->size());
  sum.add("all_proven_empty", cert.all_proven_empty);
  sum.add("sigma_min_above_one", cert.sigma_min_above_one);
  sum.add("f_min_below_one", cert.f_min_below_one);
  rep.emit(sum);
}

std::pair<std::string, std::string> split_pair(const std::string& v,
                                               const char* flag) {
  size_t colon = v.find(':');
  if (colon == std::string::npos)
    raise(Err::BadArgument,
          std::string(flag) + " expects left:right names, got '" + v + "'");
  return {v.substr(0, colon), v.substr(colon + 1)};
}

void run_product(const RunConfig& cfg, Reporter& rep) {
  LoadedInstance left = parse_instance_file(cfg.left_path);
  LoadedInstance right = parse_instance_file(cfg.right_path);
  const ElemSet& A = left.set(cfg.A_name);
  const ElemSet& B = right.set(cfg.B_name);
  auto [la_name, lb_name] = split_pair(cfg.product_L, "--L");
  auto [pl_name, pr_name] = split_pair(cfg.product_pool, "--pool");
  const ElemSet& LA = left.set(la_name);
  const ElemSet& LB = right.set(lb_name);
  std::vector<SeqPrefix> PL = left.pool(pl_name);
  std::vector<SeqPrefix> PR = right.pool(pr_name);
  if (PL.size() != PR.size())
    raise(Err::LengthMismatch, "product pools must pair up one to one");

  PsgPtr prod = Psg::product(left.instance, right.instance);
  std::vector<ElemId> L;
  LA.for_each([&](ElemId a) {
    LB.for_each([&](ElemId b) { L.push_back(prod->pair_id(a, b)); });
  });
  std::sort(L.begin(), L.end());
  std::vector<SeqPrefix> pool;
  pool.reserve(PL.size());
  for (size_t i = 0; i < PL.size(); ++i)
    pool.push_back(pair_prefixes(prod, PL[i], PR[i]));

  ProductCrBounds bounds;
  bounds.m_max = cfg.m_max;
  bounds.r_max = cfg.r_max;
  bounds.fu_r_max = cfg.fu_r_max;
  bounds.theta_cap = (size_t)cfg.theta_cap;
  auto res = product_cr_witness(prod, A, B, cfg.k, L, pool, bounds,
                                cfg.workers);

  rep.section("product --k " + std::to_string(cfg.k));
  Record rec;
  rec.add("record", "product").add("k", cfg.k);
  rec.add("A", cfg.A_name).add("B", cfg.B_name);
  rec.add("L", cfg.product_L).add("pool", cfg.product_pool);
  rec.add("pool_size", pool.size());
  rec.add("m_max", cfg.m_max).add("r_max", cfg.r_max);
  rec.add("fu_r_max", cfg.fu_r_max);
  rec.add("status", to_string(res.status));
  rec.add("u", res.u ? std::to_string(*res.u) : "-");
  rec.add("v", res.v ? std::to_string(*res.v) : "-");
  rec.add("q", res.q ? std::to_string(*res.q) : "-");
  rec.add("R", res.R ? join_ints_compact(*res.R) : "-");
  rep.emit(rec);

  if (!res.witness) return;
  const Witness& w = *res.witness;
  Record wr;
  wr.add("record", "product-witness");
  add_witness_fields(wr, *prod, w);
  ElemSet AxB = product_set(*prod, A, B);
  wr.add("verified", !witness_check(*prod, AxB, L, pool, w).has_value());

  // componentwise verifications of the projected witnesses
  std::vector<SeqPrefix> G1, G2;
  for (const auto& h : pool) {
    auto [p1, p2] = project_prefix(h);
    G1.push_back(p1);
    G2.push_back(p2);
  }
  Witness wl{w.m, {}, w.t}, wrw{w.m, {}, w.t};
  for (ElemId c : w.a) {
    auto [cl, cr] = prod->split_id(c);
    wl.a.push_back(cl);
    wrw.a.push_back(cr);
  }
  auto L1 = project_set(*prod, L, 1);
  auto L2 = project_set(*prod, L, 2);
  wr.add("left_verified",
         !witness_check(*left.instance, A, L1, G1, wl).has_value());
  wr.add("right_verified",
         !witness_check(*right.instance, B, L2, G2, wrw).has_value());
  rep.emit(wr);
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunConfig local = cfg;
  if (local.workers <= 0) local.workers = default_workers();
  Reporter rep(out, local.machine);
  try {
    if (local.subcommand == "check") {
      run_check(local, rep);
    } else if (local.subcommand == "cr") {
      run_cr(local, rep);
    } else if (local.subcommand == "dagger") {
      run_dagger(local, rep);
    } else if (local.subcommand == "ddagger") {
      run_ddagger(local, rep);
    } else if (local.subcommand == "ramsey") {
      run_ramsey(local, rep);
    } else if (local.subcommand == "counterexample") {
      run_counterexample(local, rep);
    } else if (local.subcommand == "product") {
      run_product(local, rep);
    } else {
      raise(Err::BadArgument, "unknown subcommand '" + local.subcommand + "'");
    }
  } catch (const PsgError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace psgcr
