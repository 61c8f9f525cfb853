// maxvem command line front end.
//
// Exit codes: 0 success, 1 solver divergence, 2 usage or configuration error,
// 3 any other failure.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "maxvem/maxvem.hpp"

namespace
{

using namespace maxvem;

constexpr int kOk = 0;
constexpr int kDiverged = 1;
constexpr int kUsage = 2;
constexpr int kFailure = 3;

struct MeshChoice
{
  int hex = 0;
  int tet = 0;
  std::string path;

  void add(CLI::App *cmd)
  {
    auto *h = cmd->add_option("--hex", hex, "structured cube mesh with N cells per axis");
    auto *t = cmd->add_option("--tet", tet, "6-tetrahedra split of the N^3 cube mesh");
    auto *m = cmd->add_option("--mesh", path, "PMESH file");
    h->excludes(t)->excludes(m);
    t->excludes(m);
  }

  bool given() const { return hex > 0 || tet > 0 || !path.empty(); }

  std::pair<PolyMesh, std::string> build(int default_hex) const
  {
    if (!path.empty())
    {
      MeshSource s;
      s.kind = MeshSource::Kind::File;
      s.paths = {path};
      return {load_mesh(path), s.label(0)};
    }
    if (tet > 0)
    {
      return {generate_tet(tet), "tet-" + std::to_string(tet)};
    }
    const int n = hex > 0 ? hex : default_hex;
    return {generate_hex(n), "hex-" + std::to_string(n)};
  }
};

// Writes to the file when a path is given, to stdout otherwise.
class Output
{
public:
  explicit Output(const std::string &path)
  {
    if (!path.empty())
    {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_)
      {
        throw InvalidArgument("cannot open '" + path + "' for writing");
      }
    }
  }
  std::ostream &stream() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_mesh(const MeshChoice &choice, const std::string &out, bool check)
{
  if (!choice.given())
  {
    throw InvalidArgument("mesh: one of --hex, --tet or --mesh is required");
  }
  const auto [mesh, label] = choice.build(1);
  std::cout << label << ": " << mesh.num_vertices() << " vertices, " << mesh.num_edges()
            << " edges, " << mesh.num_faces() << " faces, " << mesh.num_cells() << " cells, "
            << mesh.total_dofs() << " DoFs\n";
  int status = kOk;
  if (check)
  {
    const auto report = validate_topology(mesh);
    std::cout << report.summary();
    if (report.passed())
    {
      const auto geom = compute_geometry(mesh);
      double volume = 0.0;
      for (double v : geom.cell_volume)
      {
        volume += v;
      }
      std::cout << "volume " << std::setprecision(15) << volume << ", h " << geom.mesh_size
                << '\n';
    }
    else
    {
      status = kFailure;
    }
  }
  if (!out.empty())
  {
    save_mesh(mesh, out);
  }
  return status;
}

struct SolveArgs
{
  std::string config;
  MeshChoice mesh;
  std::optional<double> tau, alpha;
  std::string variant;
  int steps = 0;
  int threads = 0;
  std::string vtk, history, matrix_market;
};

int cmd_solve(const SolveArgs &a)
{
  ExperimentConfig cfg = a.config.empty() ? ExperimentConfig{} : load_config(a.config);
  PolyMesh mesh;
  std::string label;
  if (a.mesh.given())
  {
    std::tie(mesh, label) = a.mesh.build(2);
  }
  else
  {
    mesh = cfg.mesh.build(0);
    label = cfg.mesh.label(0);
  }
  const double tau = a.tau.value_or(cfg.timesteps.front());
  const double alpha = a.alpha.value_or(cfg.solve_alphas().front());
  const auto variant = a.variant.empty() ? cfg.variants.back() : parse_variant(a.variant);
  const int threads = a.threads > 0 ? a.threads : 0;

  const auto disc = Discretization::build(std::move(mesh), label);
  RunOptions o = run_options(cfg, tau, alpha, variant, threads);
  o.max_steps = a.steps;
  o.vtk_path = a.vtk;
  if (o.vtk_path.empty() && cfg.write_vtk)
  {
    std::filesystem::create_directories(cfg.output_dir);
    o.vtk_path = cfg.output_dir + "/" + label + ".vtk";
  }
  if (!a.matrix_market.empty())
  {
    const auto sys = assemble_blocks(disc.mesh, disc.local, disc.incidence,
                                     PhysParams::uniform(disc.mesh.num_cells(), cfg.epsilon,
                                                         cfg.sigma, cfg.mu, tau),
                                     alpha);
    Output mm(a.matrix_market);
    sys.matrix.write_matrix_market(mm.stream());
  }

  const RunRecord rec = run_transient(disc, o);
  std::cout << rec.mesh << ": " << rec.total_dofs << " DoFs (" << rec.free_dofs
            << " free), tau " << rec.tau << ", alpha " << rec.alpha << ", "
            << to_string(rec.variant) << ", " << rec.threads << " thread(s)\n";
  for (std::size_t m = 0; m < rec.steps.size(); m++)
  {
    const auto &s = rec.steps[m];
    std::cout << "step " << m + 1 << ": " << s.iterations << " its, rel " << std::scientific
              << std::setprecision(3) << s.rel_residual << ", " << std::defaultfloat
              << s.solve_time << " s" << (s.converged ? "" : " (not converged)") << '\n';
  }
  std::cout << "setup " << rec.setup_time << " s, total " << rec.total_time << " s\n";
  if (!a.history.empty() && !rec.steps.empty())
  {
    Output h(a.history);
    write_residual_history(rec.steps.back(), h.stream());
  }
  if (rec.diverged)
  {
    std::cerr << "solver diverged after " << rec.steps.size() << " step(s)\n";
    return kDiverged;
  }
  return kOk;
}

int cmd_bench(const std::string &kind, const std::string &config, const std::string &out,
              bool quiet)
{
  const ExperimentConfig cfg = load_config(config);
  std::ostream *progress = quiet ? nullptr : &std::cerr;
  std::vector<BenchRow> rows;
  Output o(out);
  if (kind == "optimality")
  {
    rows = bench_optimality(cfg, progress);
    write_optimality_csv(rows, o.stream());
  }
  else if (kind == "scalability")
  {
    rows = bench_scalability(cfg, progress);
    write_scalability_csv(rows, o.stream());
  }
  else
  {
    rows = bench_stabilization(cfg, progress);
    write_stabilization_csv(rows, o.stream());
  }
  for (const auto &r : rows)
  {
    if (r.diverged)
    {
      return kDiverged;
    }
  }
  return kOk;
}

struct SystemArgs
{
  MeshChoice mesh;
  double tau = 0.05;
  double alpha = 1.0;
  std::string variant = "exact-exact";
  bool unpreconditioned = false;
  std::string out;
};

BlockSystem system_for(const Discretization &disc, double tau, double alpha)
{
  return assemble_blocks(disc.mesh, disc.local, disc.incidence,
                         PhysParams::uniform(disc.mesh.num_cells(), 1.0, 1.0, 1.0, tau), alpha);
}

int cmd_spectrum(const SystemArgs &a)
{
  auto [mesh, label] = a.mesh.build(2);
  const auto disc = Discretization::build(std::move(mesh), label);
  const auto sys = system_for(disc, a.tau, a.alpha);
  const MatrixOperator op(sys.matrix);
  std::vector<std::complex<double>> ev;
  if (a.unpreconditioned)
  {
    ev = spectrum_estimate(op);
  }
  else
  {
    if (sys.size() > kMaxSpectrumSize)
    {
      throw SizeError("spectrum: system of size " + std::to_string(sys.size()) +
                      " exceeds the dense limit " + std::to_string(kMaxSpectrumSize));
    }
    const auto pre = build_preconditioner(sys, disc.incidence, parse_variant(a.variant));
    ev = spectrum_estimate(ProductOperator(*pre, op));
  }
  Output o(a.out);
  o.stream() << "real,imag\n" << std::setprecision(17);
  for (const auto &z : ev)
  {
    o.stream() << z.real() << ',' << z.imag() << '\n';
  }
  std::cerr << label << ": " << ev.size() << " eigenvalues, " << count_distinct(ev)
            << " distinct (1e-8)\n";
  return kOk;
}

int cmd_cond(const SystemArgs &a)
{
  auto [mesh, label] = a.mesh.build(2);
  const auto disc = Discretization::build(std::move(mesh), label);
  const auto sys = system_for(disc, a.tau, a.alpha);
  const double kappa = condition_estimate(sys.matrix);
  Output o(a.out);
  o.stream() << "mesh,dofs,free_dofs,tau,alpha,condition\n"
             << label << ',' << disc.total_dofs() << ',' << sys.size() << ',' << a.tau << ','
             << a.alpha << ',' << std::setprecision(10) << kappa << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Polyhedral virtual element solver for the two-field Maxwell equations"};
  app.require_subcommand(1);

  MeshChoice mesh_choice;
  std::string mesh_out;
  bool mesh_check = false;
  auto *mesh = app.add_subcommand("mesh", "generate, convert or check a mesh");
  mesh_choice.add(mesh);
  mesh->add_option("-o,--output", mesh_out, "write the mesh as PMESH");
  mesh->add_flag("--check", mesh_check, "validate topology and geometry");

  SolveArgs solve_args;
  auto *solve = app.add_subcommand("solve", "run one transient simulation");
  solve->add_option("-c,--config", solve_args.config, "JSON experiment config");
  solve_args.mesh.add(solve);
  solve->add_option("--tau", solve_args.tau, "timestep");
  solve->add_option("--alpha", solve_args.alpha, "stabilization parameter");
  solve->add_option("--variant", solve_args.variant,
                    "exact-exact, jacobi-exact, exact-ams or jacobi-ams");
  solve->add_option("--steps", solve_args.steps, "stop after this many steps");
  solve->add_option("--threads", solve_args.threads, "kernel threads");
  solve->add_option("--vtk", solve_args.vtk, "VTK snapshot of the last step");
  solve->add_option("--history", solve_args.history, "residual history CSV of the last step");
  solve->add_option("--matrix-market", solve_args.matrix_market,
                    "write the block matrix in MatrixMarket format");

  std::string bench_config, bench_out;
  bool bench_quiet = false;
  std::vector<std::pair<std::string, CLI::App *>> benches;
  for (const char *kind : {"optimality", "scalability", "stabilization"})
  {
    auto *b = app.add_subcommand(std::string("bench-") + kind, std::string(kind) + " table (CSV)");
    b->add_option("-c,--config", bench_config, "JSON experiment config")->required();
    b->add_option("-o,--output", bench_out, "CSV file (default stdout)");
    b->add_flag("-q,--quiet", bench_quiet, "no progress on stderr");
    benches.emplace_back(kind, b);
  }

  SystemArgs spec_args;
  auto *spectrum = app.add_subcommand("spectrum", "eigenvalues of the preconditioned system");
  spec_args.mesh.add(spectrum);
  spectrum->add_option("--tau", spec_args.tau, "timestep");
  spectrum->add_option("--alpha", spec_args.alpha, "stabilization parameter");
  spectrum->add_option("--variant", spec_args.variant, "preconditioner variant");
  spectrum->add_flag("--unpreconditioned", spec_args.unpreconditioned, "plain system matrix");
  spectrum->add_option("-o,--output", spec_args.out, "CSV file (default stdout)");

  SystemArgs cond_args;
  auto *cond = app.add_subcommand("cond", "2-norm condition number of the system matrix");
  cond_args.mesh.add(cond);
  cond->add_option("--tau", cond_args.tau, "timestep");
  cond->add_option("--alpha", cond_args.alpha, "stabilization parameter");
  cond->add_option("-o,--output", cond_args.out, "CSV file (default stdout)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return kUsage;
  }

  try
  {
    if (mesh->parsed())
    {
      return cmd_mesh(mesh_choice, mesh_out, mesh_check);
    }
    if (solve->parsed())
    {
      return cmd_solve(solve_args);
    }
    for (const auto &[kind, b] : benches)
    {
      if (b->parsed())
      {
        return cmd_bench(kind, bench_config, bench_out, bench_quiet);
      }
    }
    if (spectrum->parsed())
    {
      return cmd_spectrum(spec_args);
    }
    if (cond->parsed())
    {
      return cmd_cond(cond_args);
    }
  }
  catch (const InvalidArgument &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  catch (const ParseError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  catch (const SizeError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
