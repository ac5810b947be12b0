// Command-line front end. Parses one subcommand into a RunConfig and hands
// it to run(); all computation lives in the library.
#include <iostream>

#include "CLI11.hpp"
#include "psgcr/cli_run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"finite partial-semigroup largeness and witness toolkit"};
  app.require_subcommand(1);
  // the checker bound flag --h needs the single-letter namespace, so help is
  // --help only
  app.set_help_flag("--help", "print help");

  psgcr::RunConfig cfg;
  app.add_flag("--machine", cfg.machine,
               "one key=value record per line, byte-stable across runs");
  app.add_option("--parallel", cfg.workers,
                 "worker threads (default: PSGCR_PARALLEL or 1)");

  auto* check = app.add_subcommand("check", "bounded largeness checkers");
  check->set_help_flag("--help", "print help");
  check->add_option("--instance", cfg.instance_path, "instance file")
      ->required();
  check->add_option("--notion", cfg.notion,
                    "thick|syndetic|ps|cps|ipr|iprstar")
      ->required();
  check->add_option("--set", cfg.set_name, "named set under test")->required();
  check->add_option("--b", cfg.b, "thick family-size bound");
  check->add_option("--g", cfg.g_max, "syndetic/ps cover-size bound");
  check->add_option("--h", cfg.h_max, "cps translate-family bound");
  check->add_option("--r", cfg.r, "prefix length for ipr/iprstar");
  check->add_option("--tbound", cfg.t_bound, "cps inner family bound");

  auto* cr = app.add_subcommand("cr", "minimal combined witness radius");
  cr->add_option("--instance", cfg.instance_path, "instance file")->required();
  cr->add_option("--set", cfg.set_name, "target set A")->required();
  cr->add_option("--k", cfg.k, "subfamily size bound");
  cr->add_option("--L", cfg.L_name, "named set, the base family")->required();
  cr->add_option("--pool", cfg.pool_name, "named pool")->required();
  cr->add_option("--mmax", cfg.m_max, "interleaving depth bound");
  cr->add_option("--rmax", cfg.r_max, "radius bound");

  auto* dagger = app.add_subcommand("dagger", "uniform good-index radius");
  dagger->add_option("--instance", cfg.instance_path, "instance file")
      ->required();
  dagger->add_option("--k", cfg.k, "subfamily size bound");
  dagger->add_option("--L", cfg.L_name, "named set, the base family")
      ->required();
  dagger->add_option("--pool", cfg.pool_name, "named pool")->required();
  dagger->add_option("--rmax", cfg.r_max, "radius bound");

  auto* ddagger =
      app.add_subcommand("ddagger", "single shared good index for the pool");
  ddagger->add_option("--instance", cfg.instance_path, "instance file")
      ->required();
  ddagger->add_option("--L", cfg.L_name, "named set, the base family")
      ->required();
  ddagger->add_option("--pool", cfg.pool_name, "named pool")->required();
  ddagger->add_option("--rmax", cfg.r_max, "radius bound");

  auto* ramsey =
      app.add_subcommand("ramsey", "finite-unions Ramsey radius for (s,k)");
  ramsey->add_option("--s", cfg.fu_s, "monochromatic block-tuple length")
      ->required();
  ramsey->add_option("--k", cfg.fu_k, "number of colors")->required();
  ramsey->add_option("--rmax", cfg.fu_r_max, "radius bound");
  ramsey->add_option("--emit-certificate", cfg.certificate_path,
                     "write the good coloring at r-1 to this path");

  auto* ce = app.add_subcommand(
      "counterexample", "ordered-union instance with no witness at any radius");
  ce->add_option("--T", cfg.T, "truncation depth")->required();

  auto* product =
      app.add_subcommand("product", "assemble a product witness from factors");
  product->add_option("--left", cfg.left_path, "left factor instance file")
      ->required();
  product->add_option("--right", cfg.right_path, "right factor instance file")
      ->required();
  product->add_option("--A", cfg.A_name, "target set in the left factor")
      ->required();
  product->add_option("--B", cfg.B_name, "target set in the right factor")
      ->required();
  product->add_option("--k", cfg.k, "subfamily size bound");
  product
      ->add_option("--L", cfg.product_L,
                   "left:right set names, base family = their product")
      ->required();
  product
      ->add_option("--pool", cfg.product_pool,
                   "left:right pool names, members paired in order")
      ->required();
  product->add_option("--mmax", cfg.m_max, "interleaving depth bound");
  product->add_option("--rmax", cfg.r_max, "componentwise radius bound");
  product->add_option("--furmax", cfg.fu_r_max, "Ramsey radius bound for q");
  product->add_option("--cap", cfg.theta_cap, "per-position candidate cap");

  // --machine and --parallel are accepted after the subcommand as well
  for (auto* sub : {check, cr, dagger, ddagger, ramsey, ce, product})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (auto* sub : {check, cr, dagger, ddagger, ramsey, ce, product}) {
    if (sub->parsed()) {
      cfg.subcommand = sub->get_name();
      break;
    }
  }
  return psgcr::run(cfg, std::cout, std::cerr);
}
