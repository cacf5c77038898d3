#include "lfec/genio.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lfec/discharge.hpp"
#include "lfec/exact.hpp"
#include "lfec/reduce.hpp"

namespace lfec {

// --- generators ---------------------------------------------------------

PlaneGraph gen_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<VertexId> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) fwd[i] = i;
  for (int i = 0; i < n; ++i) bwd[i] = n - 1 - i;
  return build_from_simple_faces({fwd, bwd});
}

PlaneGraph gen_wheel(int n) {
  if (n < 3) throw GraphError("wheel needs n >= 3 rim vertices");
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < n; ++i) faces.push_back({n, i, (i + 1) % n});
  std::vector<VertexId> outer(n);
  for (int i = 0; i < n; ++i) outer[i] = n - 1 - i;
  faces.push_back(outer);
  return build_from_simple_faces(faces);
}

PlaneGraph gen_prism(int n) {
  if (n < 3) throw GraphError("prism needs n >= 3");
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < n; ++i)
    faces.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
  std::vector<VertexId> top(n), bottom(n);
  for (int i = 0; i < n; ++i) top[i] = n - 1 - i;
  for (int i = 0; i < n; ++i) bottom[i] = n + i;
  faces.push_back(top);
  faces.push_back(bottom);
  return build_from_simple_faces(faces);
}

PlaneGraph gen_cube() { return gen_prism(4); }

PlaneGraph gen_octahedron() {
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < 4; ++i) faces.push_back({4, i, (i + 1) % 4});
  for (int i = 0; i < 4; ++i) faces.push_back({5, (i + 1) % 4, i});
  return build_from_simple_faces(faces);
}

PlaneGraph gen_dodecahedron() {
  auto b = [](int i) { return i % 5; };
  auto l = [](int i) { return 5 + i % 5; };
  auto m = [](int i) { return 10 + i % 5; };
  auto t = [](int i) { return 15 + i % 5; };
  std::vector<std::vector<VertexId>> faces;
  faces.push_back({4, 3, 2, 1, 0});
  for (int i = 0; i < 5; ++i) faces.push_back({b(i), b(i + 1), l(i + 1), m(i), l(i)});
  for (int i = 0; i < 5; ++i) faces.push_back({m(i), l(i + 1), m(i + 1), t(i + 1), t(i)});
  faces.push_back({15, 16, 17, 18, 19});
  return build_from_simple_faces(faces);
}

PlaneGraph gen_tight_family(int l) {
  if (l < 1) throw GraphError("tight_family needs l >= 1");
  // paths A, B of length l and C of length l+1 between vertices 0 and 1
  auto pathA = [&](int i) { return i == 0 ? 0 : (i == l ? 1 : 1 + i); };
  auto pathB = [&](int i) { return i == 0 ? 0 : (i == l ? 1 : l + i); };
  auto pathC = [&](int i) { return i == 0 ? 0 : (i == l + 1 ? 1 : 2 * l - 1 + i); };
  auto edgeA = [&](int i) { return i; };
  auto edgeB = [&](int i) { return l + i; };
  auto edgeC = [&](int i) { return 2 * l + i; };

  std::vector<std::vector<FaceSpecEntry>> faces(3);
  for (int i = 0; i < l; ++i) faces[0].push_back({pathA(i), pathA(i + 1), edgeA(i)});
  for (int i = l - 1; i >= 0; --i) faces[0].push_back({pathB(i + 1), pathB(i), edgeB(i)});
  for (int i = 0; i < l; ++i) faces[1].push_back({pathB(i), pathB(i + 1), edgeB(i)});
  for (int i = l; i >= 0; --i) faces[1].push_back({pathC(i + 1), pathC(i), edgeC(i)});
  for (int i = 0; i <= l; ++i) faces[2].push_back({pathC(i), pathC(i + 1), edgeC(i)});
  for (int i = l - 1; i >= 0; --i) faces[2].push_back({pathA(i + 1), pathA(i), edgeA(i)});
  return build_from_faces(faces);
}

PlaneGraph gen_subdivided_k4(int l) {
  if (l < 1) throw GraphError("subdivided_k4 needs l >= 1");
  const VertexId x = 0, y = 1, z = 2, h = 3;
  // three h-paths of length l, internals numbered from 4
  auto path = [&](int leg, int i) -> VertexId {
    if (i == 0) return h;
    if (i == l) return leg;  // x, y, z are 0, 1, 2
    return 4 + leg * (l - 1) + (i - 1);
  };
  std::vector<std::vector<VertexId>> faces(4);
  auto walk_leg = [&](int leg, bool fwd, std::vector<VertexId>& f) {
    if (fwd)
      for (int i = 0; i <= l; ++i) f.push_back(path(leg, i));  // h, internals, leg end
    else
      for (int i = l; i >= 1; --i) f.push_back(path(leg, i));  // leg end, internals
  };
  // F1: h -> x, edge xy, y -> h; F2 and F3 cyclically; outer triangle reversed.
  walk_leg(x, true, faces[0]);
  walk_leg(y, false, faces[0]);
  walk_leg(y, true, faces[1]);
  walk_leg(z, false, faces[1]);
  walk_leg(z, true, faces[2]);
  walk_leg(x, false, faces[2]);
  faces[3] = {z, y, x};
  return build_from_simple_faces(faces);
}

PlaneGraph gen_random_planar(int n, unsigned long long seed) {
  if (n < 3) throw GraphError("random_planar needs n >= 3");
  std::mt19937_64 rng(seed);
  // Stacked triangulation: insert each new vertex into a random face.
  std::vector<std::array<VertexId, 3>> tri = {{0, 1, 2}, {2, 1, 0}};
  for (VertexId v = 3; v < n; ++v) {
    size_t i = (size_t)(rng() % tri.size());
    auto [a, b, c] = tri[i];
    tri.erase(tri.begin() + i);
    tri.push_back({a, b, v});
    tri.push_back({b, c, v});
    tri.push_back({c, a, v});
  }
  std::vector<std::vector<VertexId>> faces;
  for (auto& t : tri) faces.push_back({t[0], t[1], t[2]});
  PlaneGraph g = build_from_simple_faces(faces);

  // Random non-bridge deletions keep the graph connected and simple.
  unsigned long long attempts = rng() % (g.edge_count() / 2 + 1);
  for (unsigned long long i = 0; i < attempts; ++i) {
    std::vector<EdgeId> removable;
    for (EdgeId e : g.edges()) {
      auto [da, db] = g.edge_darts(e);
      if (g.face_of(da) != g.face_of(db)) removable.push_back(e);
    }
    if (removable.empty()) break;
    g = delete_edge(g, removable[(size_t)(rng() % removable.size())]);
  }
  return g;
}

PlaneGraph generate(const std::string& family, int n, int l, unsigned long long seed) {
  if (family == "cycle") return gen_cycle(n);
  if (family == "wheel") return gen_wheel(n);
  if (family == "prism") return gen_prism(n);
  if (family == "cube") return gen_cube();
  if (family == "octahedron") return gen_octahedron();
  if (family == "dodecahedron") return gen_dodecahedron();
  if (family == "tight_family") return gen_tight_family(l);
  if (family == "subdivided_k4") return gen_subdivided_k4(l);
  if (family == "random_planar") return gen_random_planar(n, seed);
  throw GraphError("unknown family: " + family);
}

// --- .pg format -----------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text,
                                               std::vector<int>* line_numbers) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    rows.push_back(std::move(toks));
    if (line_numbers) line_numbers->push_back(lineno);
  }
  return rows;
}

int to_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" + s + "'");
  }
}

}  // namespace

PlaneGraph parse_pg(const std::string& text) {
  std::vector<int> lines;
  auto rows = tokenize(text, &lines);
  if (rows.empty() || rows[0][0] != "pg")
    throw ParseError("line 1: expected header 'pg <nVertices> <nEdges>'");
  if (rows[0].size() != 3) throw ParseError("line " + std::to_string(lines[0]) + ": bad header");
  int nv = to_int(rows[0][1], lines[0]);
  int ne = to_int(rows[0][2], lines[0]);

  std::vector<EdgeSpec> edges;
  std::vector<RotationSpec> rotations;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& toks = rows[r];
    int line = lines[r];
    if (toks[0] == "e") {
      if (toks.size() != 4) throw ParseError("line " + std::to_string(line) + ": bad edge line");
      edges.push_back(
          {to_int(toks[1], line), to_int(toks[2], line), to_int(toks[3], line)});
    } else if (toks[0] == "v") {
      if (toks.size() > 3) throw ParseError("line " + std::to_string(line) + ": bad vertex line");
      RotationSpec rs;
      rs.vertex = to_int(toks[1], line);
      if (toks.size() == 3) {
        std::istringstream ds(toks[2]);
        std::string piece;
        while (std::getline(ds, piece, ',')) rs.darts.push_back(to_int(piece, line));
      }
      rotations.push_back(std::move(rs));
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown record '" + toks[0] + "'");
    }
  }
  if ((int)rotations.size() != nv)
    throw ParseError("header announces " + std::to_string(nv) + " vertices, found " +
                     std::to_string(rotations.size()));
  if ((int)edges.size() != ne)
    throw ParseError("header announces " + std::to_string(ne) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return build_from_rotation(rotations, edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid embedding: ") + e.what());
  }
}

std::string serialize_pg(const PlaneGraph& g) {
  std::ostringstream os;
  os << "pg " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.edge_darts(e);
    os << "e " << e << " " << std::min(a, b) << " " << std::max(a, b) << "\n";
  }
  for (VertexId v : g.vertices()) {
    os << "v " << v;
    std::vector<DartId> rot = g.rotation(v);
    if (!rot.empty()) {
      os << " ";
      for (size_t i = 0; i < rot.size(); ++i) os << (i ? "," : "") << rot[i];
    }
    os << "\n";
  }
  return os.str();
}

// --- .col format ------------------------------------------------------------

facial::Coloring parse_col(const std::string& text) {
  std::vector<int> lines;
  auto rows = tokenize(text, &lines);
  facial::Coloring c;
  bool have_k = false;
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& toks = rows[r];
    int line = lines[r];
    if (toks[0] == "k" && toks.size() == 2) {
      c.palette = to_int(toks[1], line);
      have_k = true;
    } else if (toks[0] == "c" && toks.size() == 3) {
      c.set(to_int(toks[1], line), to_int(toks[2], line));
    } else {
      throw ParseError("line " + std::to_string(line) + ": bad coloring record");
    }
  }
  if (!have_k) throw ParseError("missing palette line 'k <int>'");
  return c;
}

std::string serialize_col(const facial::Coloring& c) {
  std::ostringstream os;
  os << "k " << c.palette << "\n";
  for (auto& [e, col] : c.assignment) os << "c " << e << " " << col << "\n";
  return os.str();
}

// --- CLI ----------------------------------------------------------------

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"l-facial edge coloring toolkit"};
  app.require_subcommand(1);

  std::string family, out_path, trace_path, in_path, col_path;
  int n = 5, l = 2, kmax = -1, jobs = 1;
  unsigned long long seed = 1;
  long long budget = 200'000'000;

  CLI::App* gen = app.add_subcommand("gen", "generate a plane graph");
  gen->add_option("--family", family)->required();
  gen->add_option("--n", n);
  gen->add_option("--l", l);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path);

  CLI::App* solve = app.add_subcommand("solve", "exact l-facial chromatic index");
  solve->add_option("--l", l);
  solve->add_option("--max-colors", kmax);
  solve->add_option("--jobs", jobs);
  solve->add_option("--node-budget", budget);
  solve->add_option("input", in_path)->required();

  CLI::App* verify = app.add_subcommand("verify", "check a coloring file");
  verify->add_option("--l", l);
  verify->add_option("input", in_path)->required();
  verify->add_option("coloring", col_path)->required();

  CLI::App* construct = app.add_subcommand("construct", "constructive 2-facial 7-coloring");
  construct->add_option("input", in_path)->required();
  construct->add_option("-o,--output", out_path);
  construct->add_option("--trace", trace_path);

  CLI::App* audit_cmd = app.add_subcommand("audit", "discharging audit");
  audit_cmd->add_option("input", in_path)->required();

  CLI::App* medial_cmd = app.add_subcommand("medial", "medial graph");
  medial_cmd->add_option("input", in_path)->required();
  medial_cmd->add_option("-o,--output", out_path);

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("lfec");
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      PlaneGraph g = generate(family, n, l, seed);
      std::string text = serialize_pg(g);
      if (out_path.empty())
        out << text;
      else
        spit(out_path, text);
      return 0;
    }
    if (solve->parsed()) {
      PlaneGraph g = parse_pg(slurp(in_path));
      exact::Options opt;
      opt.node_budget = budget;
      opt.jobs = jobs;
      exact::SolveReport rep = exact::min_colors(g, l, kmax, opt);
      if (rep.status == exact::Status::Colorable) {
        out << "chi=" << rep.chi << "\n";
        return 0;
      }
      if (rep.status == exact::Status::NotColorable) {
        out << "chi>" << rep.kmax << "\n";
        return 0;
      }
      err << "unknown: node budget exhausted after " << rep.nodes << " nodes\n";
      return 1;
    }
    if (verify->parsed()) {
      PlaneGraph g = parse_pg(slurp(in_path));
      facial::Coloring phi = parse_col(slurp(col_path));
      std::vector<facial::Violation> bad = facial::verify(g, l, phi);
      if (bad.empty()) {
        out << "ok\n";
        return 0;
      }
      for (const auto& v : bad)
        out << "violation e" << v.e << " e" << v.f << " face=" << v.face
            << " distance=" << v.distance << "\n";
      return 1;
    }
    if (construct->parsed()) {
      PlaneGraph g = parse_pg(slurp(in_path));
      reduce::ConstructResult res = reduce::construct_7_coloring(g);
      std::string col = serialize_col(res.coloring);
      if (out_path.empty())
        out << col;
      else
        spit(out_path, col);
      if (!trace_path.empty()) spit(trace_path, reduce::render_trace(res.trace));
      out << "colors<=7 steps=" << res.trace.size() << " detect_gaps=" << res.detect_gaps
          << "\n";
      return 0;
    }
    if (audit_cmd->parsed()) {
      PlaneGraph g = parse_pg(slurp(in_path));
      out << discharge::render_audit(discharge::audit(g));
      return 0;
    }
    if (medial_cmd->parsed()) {
      PlaneGraph g = parse_pg(slurp(in_path));
      std::string text = serialize_pg(medial_graph(g));
      if (out_path.empty())
        out << text;
      else
        spit(out_path, text);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const reduce::ExtensionFailedError& e) {
    err << "error: " << e.what() << "\ninstance:\n" << e.instance;
    return 1;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace lfec
