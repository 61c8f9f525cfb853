#include "maxvem/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "maxvem/error.hpp"
#include "maxvem/pmesh_io.hpp"

namespace maxvem
{

using nlohmann::json;

int MeshSource::count() const
{
  return kind == Kind::File ? int(paths.size()) : int(levels.size());
}

std::string MeshSource::label(int i) const
{
  switch (kind)
  {
  case Kind::Hex:
    return "hex-" + std::to_string(levels.at(i));
  case Kind::Tet:
    return "tet-" + std::to_string(levels.at(i));
  case Kind::File:
    break;
  }
  const std::string &p = paths.at(i);
  const auto slash = p.find_last_of('/');
  std::string name = slash == std::string::npos ? p : p.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

PolyMesh MeshSource::build(int i) const
{
  switch (kind)
  {
  case Kind::Hex:
    return generate_hex(levels.at(i), box);
  case Kind::Tet:
    return generate_tet(levels.at(i), box);
  case Kind::File:
    break;
  }
  return load_mesh(paths.at(i));
}

std::vector<double> ExperimentConfig::solve_alphas() const
{
  return alphas ? *alphas : std::vector<double>{1.0};
}

std::vector<double> ExperimentConfig::sweep_alphas() const
{
  return alphas ? *alphas : std::vector<double>{0.001, 0.01, 0.1, 1.0, 10.0, 100.0};
}

void ExperimentConfig::validate() const
{
  auto fail = [](const std::string &what) { throw InvalidArgument("config: " + what); };
  if (mesh.count() == 0)
  {
    fail(mesh.kind == MeshSource::Kind::File ? "mesh.paths is empty" : "mesh.levels is empty");
  }
  for (int n : mesh.levels)
  {
    if (n < 1)
    {
      fail("mesh.levels entries must be >= 1");
    }
  }
  for (int k = 0; k < 3; k++)
  {
    if (!(mesh.box.hi[k] > mesh.box.lo[k]))
    {
      fail("mesh.box is degenerate");
    }
  }
  if (timesteps.empty())
  {
    fail("timesteps is empty");
  }
  if (!(final_time > 0.0))
  {
    fail("final_time must be positive");
  }
  for (double tau : {scalability_tau, stabilization_tau})
  {
    if (!(tau > 0.0))
    {
      fail("timesteps must be positive");
    }
  }
  for (double tau : timesteps)
  {
    if (!(tau > 0.0))
    {
      fail("timesteps must be positive");
    }
    if (tau > final_time * (1.0 + 1e-12))
    {
      fail("final_time must be at least every timestep");
    }
  }
  if (bench_steps < 0)
  {
    fail("bench_steps must be >= 0");
  }
  if (!(epsilon > 0.0) || !(mu > 0.0) || !(sigma >= 0.0))
  {
    fail("physics needs epsilon > 0, mu > 0, sigma >= 0");
  }
  if (alphas)
  {
    if (alphas->empty())
    {
      fail("alphas is empty");
    }
    for (double a : *alphas)
    {
      if (!(a >= 0.0))
      {
        fail("alphas must be non-negative");
      }
    }
  }
  if (variants.empty())
  {
    fail("variants is empty");
  }
  if (threads.empty())
  {
    fail("threads is empty");
  }
  for (int p : threads)
  {
    if (p < 1)
    {
      fail("threads entries must be >= 1");
    }
  }
  if (aux.smoothing_sweeps < 0 || !(aux.cg_tol > 0.0) || aux.cg_max_iterations < 1)
  {
    fail("invalid auxiliary-space solver options");
  }
  try
  {
    solver.validate();
  }
  catch (const Error &e)
  {
    fail(e.what());
  }
}

namespace
{

void check_keys(const json &j, const std::string &where, const std::set<std::string> &allowed)
{
  if (!j.is_object())
  {
    throw InvalidArgument("config: " + where + " must be an object");
  }
  for (const auto &item : j.items())
  {
    if (!allowed.count(item.key()))
    {
      throw InvalidArgument("config: unknown key '" + item.key() + "' in " + where);
    }
  }
}

template <class T>
void read(const json &j, const char *key, T &out)
{
  if (j.contains(key))
  {
    out = j.at(key).get<T>();
  }
}

ExperimentConfig from_json(const json &j)
{
  ExperimentConfig c;
  check_keys(j, "config",
             {"mesh", "timesteps", "final_time", "bench_steps", "physics", "alphas",
              "stabilization", "variants", "threads", "scalability_tau", "solver",
              "output_dir", "write_vtk"});
  if (j.contains("mesh"))
  {
    const json &m = j.at("mesh");
    check_keys(m, "mesh", {"type", "levels", "paths", "box"});
    const std::string type = m.value("type", std::string("hex"));
    if (type == "hex")
    {
      c.mesh.kind = MeshSource::Kind::Hex;
    }
    else if (type == "tet")
    {
      c.mesh.kind = MeshSource::Kind::Tet;
    }
    else if (type == "file")
    {
      c.mesh.kind = MeshSource::Kind::File;
    }
    else
    {
      throw InvalidArgument("config: mesh.type must be hex, tet or file");
    }
    read(m, "levels", c.mesh.levels);
    read(m, "paths", c.mesh.paths);
    if (m.contains("box"))
    {
      const json &b = m.at("box");
      check_keys(b, "mesh.box", {"lo", "hi"});
      for (const char *key : {"lo", "hi"})
      {
        if (b.contains(key))
        {
          const auto v = b.at(key).get<std::array<double, 3>>();
          (std::string(key) == "lo" ? c.mesh.box.lo : c.mesh.box.hi) = Vec3(v[0], v[1], v[2]);
        }
      }
    }
  }
  read(j, "timesteps", c.timesteps);
  read(j, "final_time", c.final_time);
  read(j, "bench_steps", c.bench_steps);
  if (j.contains("physics"))
  {
    const json &p = j.at("physics");
    check_keys(p, "physics", {"epsilon", "sigma", "mu", "source"});
    read(p, "epsilon", c.epsilon);
    read(p, "sigma", c.sigma);
    read(p, "mu", c.mu);
    read(p, "source", c.source);
  }
  if (j.contains("alphas"))
  {
    c.alphas = j.at("alphas").get<std::vector<double>>();
  }
  if (j.contains("stabilization"))
  {
    const json &s = j.at("stabilization");
    check_keys(s, "stabilization", {"scope", "tau"});
    const std::string scope = s.value("scope", std::string("system"));
    if (scope == "schur")
    {
      c.stabilization_scope = StabilizationScope::Schur;
    }
    else if (scope == "system")
    {
      c.stabilization_scope = StabilizationScope::System;
    }
    else
    {
      throw InvalidArgument("config: stabilization.scope must be schur or system");
    }
    read(s, "tau", c.stabilization_tau);
  }
  if (j.contains("variants"))
  {
    c.variants.clear();
    for (const auto &v : j.at("variants"))
    {
      c.variants.push_back(parse_variant(v.get<std::string>()));
    }
  }
  read(j, "threads", c.threads);
  read(j, "scalability_tau", c.scalability_tau);
  if (j.contains("solver"))
  {
    const json &s = j.at("solver");
    check_keys(s, "solver",
               {"abs_tol", "rel_tol", "max_iterations", "aux_solver", "smoothing_sweeps",
                "aux_cg_tol"});
    read(s, "abs_tol", c.solver.abs_tol);
    read(s, "rel_tol", c.solver.rel_tol);
    read(s, "max_iterations", c.solver.max_iterations);
    read(s, "smoothing_sweeps", c.aux.smoothing_sweeps);
    read(s, "aux_cg_tol", c.aux.cg_tol);
    const std::string aux = s.value("aux_solver", std::string("direct"));
    if (aux == "direct")
    {
      c.aux.solver = AuxSpaceOptions::Solver::Direct;
    }
    else if (aux == "cg")
    {
      c.aux.solver = AuxSpaceOptions::Solver::CG;
    }
    else
    {
      throw InvalidArgument("config: solver.aux_solver must be direct or cg");
    }
  }
  read(j, "output_dir", c.output_dir);
  read(j, "write_vtk", c.write_vtk);
  return c;
}

}  // namespace

ExperimentConfig parse_config(const std::string &json_text)
{
  ExperimentConfig c;
  try
  {
    c = from_json(json::parse(json_text));
  }
  catch (const json::exception &e)
  {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw InvalidArgument("config: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_json(const ExperimentConfig &c)
{
  json j;
  const char *types[] = {"hex", "tet", "file"};
  j["mesh"] = {{"type", types[int(c.mesh.kind)]},
               {"levels", c.mesh.levels},
               {"paths", c.mesh.paths},
               {"box",
                {{"lo", {c.mesh.box.lo[0], c.mesh.box.lo[1], c.mesh.box.lo[2]}},
                 {"hi", {c.mesh.box.hi[0], c.mesh.box.hi[1], c.mesh.box.hi[2]}}}}};
  j["timesteps"] = c.timesteps;
  j["final_time"] = c.final_time;
  j["bench_steps"] = c.bench_steps;
  j["physics"] = {{"epsilon", c.epsilon}, {"sigma", c.sigma}, {"mu", c.mu}, {"source", c.source}};
  if (c.alphas)
  {
    j["alphas"] = *c.alphas;
  }
  j["stabilization"] = {
    {"scope", c.stabilization_scope == StabilizationScope::Schur ? "schur" : "system"},
    {"tau", c.stabilization_tau}};
  std::vector<std::string> variants;
  for (auto v : c.variants)
  {
    variants.push_back(to_string(v));
  }
  j["variants"] = variants;
  j["threads"] = c.threads;
  j["scalability_tau"] = c.scalability_tau;
  j["solver"] = {{"abs_tol", c.solver.abs_tol},
                 {"rel_tol", c.solver.rel_tol},
                 {"max_iterations", c.solver.max_iterations},
                 {"aux_solver", c.aux.solver == AuxSpaceOptions::Solver::Direct ? "direct" : "cg"},
                 {"smoothing_sweeps", c.aux.smoothing_sweeps},
                 {"aux_cg_tol", c.aux.cg_tol}};
  j["output_dir"] = c.output_dir;
  j["write_vtk"] = c.write_vtk;
  return j.dump(2);
}

}  // namespace maxvem
