#include "homaff/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homaff/affine.hpp"
#include "homaff/cover.hpp"
#include "homaff/displacement.hpp"
#include "homaff/io.hpp"
#include "homaff/mesh.hpp"

namespace homaff::cli {

namespace {

// Quandles up to this size get the quadruple mediality scan and the
// brute-force affine recognition in `analyze`.
constexpr std::size_t kMedialScanLimit = 64;
constexpr std::size_t kAffineSearchLimit = 16;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& xs, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

void write_or_print(const std::string& path, std::ostream& out,
                    const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  emit(file);
}

void analyze(const std::string& path, std::ostream& out) {
  const Quandle q = io::read_quandle_file(path);
  const auto orbs = orbits(q);
  const auto lmlt = multiplication_group(q);
  const auto dis = displacement_group(q);
  const auto kernel = cayley_kernel(q);
  const bool abelian = is_abelian(dis);
  const bool semiregular = is_semiregular(dis);
  const bool tiny = is_tiny(q);
  const bool homim = is_homim_of_affine(q);

  out << "n=" << q.size() << '\n';
  out << "orbits=" << orbs.num_blocks() << '\n';
  out << "orbit_sizes=" << join(orbs.block_sizes()) << '\n';
  out << "lmlt_order=" << lmlt.order() << '\n';
  out << "dis_order=" << dis.order() << '\n';
  out << "cayley_blocks=" << kernel.num_blocks() << '\n';
  if (q.size() <= kMedialScanLimit) {
    out << "medial=" << yes_no(is_medial(q)) << '\n';
  } else {
    out << "medial=" << yes_no(abelian) << '\n';
    out << "medial_method=dis_abelian\n";
  }
  out << "dis_abelian=" << yes_no(abelian) << '\n';
  out << "dis_semiregular=" << yes_no(semiregular) << '\n';
  out << "tiny=" << yes_no(tiny) << '\n';
  out << "embeds_into_affine=" << yes_no(abelian && semiregular) << '\n';
  out << "homim_of_affine=" << yes_no(homim) << '\n';

  // Affine quandles satisfy both criteria, so either failing settles it.
  if (!(abelian && semiregular && homim)) {
    out << "affine=no\n";
  } else if (q.size() > kAffineSearchLimit) {
    out << "affine=unknown\n";
  } else if (auto rep = find_affine_representation(q)) {
    out << "affine=yes\n";
    std::string spec;
    for (auto m : rep->group.moduli()) spec += (spec.empty() ? "" : "x") + std::to_string(m);
    spec += ":";
    for (Element a = 0; a < rep->f.size(); ++a)
      spec += (a ? "," : "") + std::to_string(rep->f(a));
    out << "affine_representation=" << spec << '\n';
  } else {
    out << "affine=no\n";
  }
}

int cover(const std::string& path, const std::string& transversal,
          const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const Quandle q = io::read_quandle_file(path);
  if (!is_homim_of_affine(q)) {
    err << "homim_of_affine=no: Dis(Q) is not abelian and tiny, no affine "
           "quandle maps onto this quandle\n";
    out << "homim_of_affine=no\n";
    return kNegativeVerdict;
  }
  const Multitransversal t = transversal == "simple"
                                 ? simple_multitransversal(q)
                                 : optimized_multitransversal(q);
  const CoverResult r = build_cover(q, t);
  const CoverReport report = verify_cover(r, q);
  out << "homim_of_affine=yes\n";
  out << "transversal=" << transversal << '\n';
  out << "dis_order=" << r.dis_order << '\n';
  out << "kappa=" << t.kappa << '\n';
  out << "T=" << t.size() << '\n';
  out << "A=" << r.group.order() << '\n';
  out << "psi_surjective=yes\n";
  out << "psi_bijective=" << yes_no(r.psi_bijective()) << '\n';
  out << "verified=" << yes_no(report.passed) << '\n';
  if (!report.passed) {
    err << "cover verification failed: " << report.failure << '\n';
    return kInternal;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto table = std::filesystem::path(out_dir) / "cover.txt";
    const auto sidecar = std::filesystem::path(out_dir) / "cover.sidecar";
    std::ofstream tf(table), sf(sidecar);
    if (!tf || !sf) throw std::runtime_error("cannot write into " + out_dir);
    io::write_quandle(tf, r.cover.quandle);
    io::write_cover_sidecar(sf, r);
    out << "cover_table=" << table.string() << '\n';
    out << "cover_sidecar=" << sidecar.string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite quandles and their affine covers", "homaff"};
  app.require_subcommand(1);

  std::string path, path2, out_path, transversal = "optimized", spec;
  std::size_t gen_n = 0, gen_k = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants and verdicts of a quandle");
  analyze_cmd->add_option("quandle", path, "Quandle table file")->required();

  auto* cover_cmd = app.add_subcommand("cover", "Construct an affine quandle covering Q");
  cover_cmd->add_option("quandle", path, "Quandle table file")->required();
  cover_cmd->add_option("--transversal", transversal, "Multitransversal choice")
      ->check(CLI::IsMember({"simple", "optimized"}));
  cover_cmd->add_option("--out", out_path, "Directory for cover.txt and cover.sidecar");

  auto* mesh_cmd = app.add_subcommand("mesh", "Affine mesh operations");
  mesh_cmd->require_subcommand(1);
  auto* mesh_validate = mesh_cmd->add_subcommand("validate", "Check the mesh axioms");
  mesh_validate->add_option("mesh", path)->required();
  auto* mesh_sum_cmd = mesh_cmd->add_subcommand("sum", "Write the sum as a quandle table");
  mesh_sum_cmd->add_option("mesh", path)->required();
  mesh_sum_cmd->add_option("--out", out_path, "Output file (default stdout)");
  auto* mesh_coset = mesh_cmd->add_subcommand("coset", "Coset criterion for homomorphic images");
  mesh_coset->add_option("mesh", path)->required();
  auto* mesh_semireg = mesh_cmd->add_subcommand("semireg", "Semiregular-extension shape test");
  mesh_semireg->add_option("mesh", path)->required();
  auto* mesh_genmax = mesh_cmd->add_subcommand("genmax", "Generate the worst-case mesh family");
  mesh_genmax->add_option("n", gen_n)->required();
  mesh_genmax->add_option("k", gen_k)->required();
  mesh_genmax->add_option("--out", out_path, "Output file (default stdout)");

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a congruence");
  quotient_cmd->add_option("quandle", path)->required();
  quotient_cmd->add_option("partition", path2)->required();
  quotient_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
  iso_cmd->add_option("first", path)->required();
  iso_cmd->add_option("second", path2)->required();

  auto* affine_cmd = app.add_subcommand("affine", "Table of Aff(A, f)");
  affine_cmd->add_option("spec", spec, "<m1>x<m2>...:mul:<u> or <m1>x...:<images>")
      ->required();
  affine_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }

  try {
    if (*analyze_cmd) {
      analyze(path, out);
    } else if (*cover_cmd) {
      return cover(path, transversal, out_path, out, err);
    } else if (*mesh_validate) {
      const auto mesh = io::read_mesh_file(path);
      out << "valid=yes\n";
      out << "indices=" << mesh.size() << '\n';
      out << "sum_size=" << mesh.total_size() << '\n';
      out << "indecomposable=" << yes_no(is_indecomposable(mesh)) << '\n';
    } else if (*mesh_sum_cmd) {
      const auto q = mesh_sum(io::read_mesh_file(path));
      write_or_print(out_path, out, [&](std::ostream& o) { io::write_quandle(o, q); });
    } else if (*mesh_coset) {
      out << "coset=" << yes_no(coset_criterion(io::read_mesh_file(path))) << '\n';
    } else if (*mesh_semireg) {
      out << "semiregular_extension_form="
          << yes_no(semiregular_extension_form(io::read_mesh_file(path))) << '\n';
    } else if (*mesh_genmax) {
      const auto mesh = generate_max_mesh(gen_n, gen_k);
      write_or_print(out_path, out, [&](std::ostream& o) { io::write_mesh(o, mesh); });
      if (!out_path.empty()) out << "sum_size=" << mesh.total_size() << '\n';
    } else if (*quotient_cmd) {
      const auto q = io::read_quandle_file(path);
      std::ifstream pin(path2);
      if (!pin) throw ParseError(ParseErrorKind::Syntax, "cannot open " + path2);
      const auto qq = quotient(q, io::read_partition(pin, q.size()));
      write_or_print(out_path, out, [&](std::ostream& o) { io::write_quandle(o, qq); });
    } else if (*iso_cmd) {
      const auto a = io::read_quandle_file(path);
      const auto b = io::read_quandle_file(path2);
      if (auto map = is_isomorphic(a, b)) {
        std::vector<std::size_t> images(map->begin(), map->end());
        out << "isomorphic=yes\nmap=" << join(images) << '\n';
      } else {
        out << "isomorphic=no\n";
      }
    } else if (*affine_cmd) {
      const auto aff = io::parse_affine_spec(spec);
      write_or_print(out_path, out,
                     [&](std::ostream& o) { io::write_quandle(o, aff.quandle); });
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CoverError& e) {
    err << "cover error: " << e.what() << '\n';
    return e.kind() == CoverErrorKind::NotHomImage ? kNegativeVerdict : kInternal;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << '\n';
    return kInvalidAlgebra;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace homaff::cli
