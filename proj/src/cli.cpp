#include "latkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latkit/cjr_orders.hpp"
#include "latkit/generators.hpp"
#include "latkit/io.hpp"

namespace latkit {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidParameter:
    case ErrorKind::TooLarge:
    case ErrorKind::DuplicateName:
    case ErrorKind::UnknownName:
      return kExitUsage;
    case ErrorKind::CyclicCovers:
    case ErrorKind::RedundantCover:
    case ErrorKind::NotALattice:
    case ErrorKind::NoBoundedStructure:
      return kExitNotALattice;
    case ErrorKind::NotSemidistributive:
    case ErrorKind::NotAPartialOrder:
      return kExitNotSemidistributive;
    case ErrorKind::NotAnArrow:
    case ErrorKind::NotJoinIrreducible:
    case ErrorKind::NotMeetIrreducible:
    case ErrorKind::InvalidInterval:
    case ErrorKind::InvalidElement:
      return kExitInvalidQuery;
  }
  return kExitUsage;
}

namespace {

Lattice load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LatticeError(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string describe(const Lattice& L, const SdViolation& w) {
  return std::string(w.law == SdViolation::Law::Join ? "join" : "meet") + " law fails at (" + L.name(w.a) + ", " +
         L.name(w.x) + ", " + L.name(w.y) + ")";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semidistributive lattice toolkit", "latkit"};
  app.require_subcommand(1);

  std::string file;
  std::string lower, upper, element, kind, format = "json", family;
  bool dot = false, scan = false;
  std::size_t n = 0;
  std::string output;

  auto* check = app.add_subcommand("check", "Validate a lattice and print jirr, mirr and kappa");
  check->add_option("FILE", file, "Lattice JSON file")->required();

  auto* labels = app.add_subcommand("labels", "Print gamma/mu labels of every Hasse arrow");
  labels->add_option("FILE", file)->required();
  labels->add_flag("--dot", dot, "Emit a labeled Graphviz diagram instead");
  labels->add_option("--lower", lower, "Shade the interval [lower, upper] in the diagram");
  labels->add_option("--upper", upper);

  auto* jl = app.add_subcommand("jlabel", "Join-irreducible labels of an interval");
  jl->add_option("FILE", file)->required();
  jl->add_option("--lower", lower)->required();
  jl->add_option("--upper", upper)->required();
  jl->add_flag("--scan", scan, "Collect arrow labels inside the interval instead");

  auto* posets = app.add_subcommand("posets", "Inclusion poset of jlabel images");
  posets->add_option("FILE", file)->required();
  posets->add_option("--kind", kind)->required()->check(CLI::IsMember({"all", "wide", "ice"}));
  posets->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* cjr_cmd = app.add_subcommand("cjr", "Canonical join representations");
  cjr_cmd->add_option("FILE", file)->required();
  cjr_cmd->add_option("--element", element);

  auto* orders = app.add_subcommand("orders", "Kappa order or core label order");
  orders->add_option("FILE", file)->required();
  orders->add_option("--kind", kind)->required()->check(CLI::IsMember({"kappa", "clo"}));
  orders->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* compare = app.add_subcommand("compare", "Compare the kappa and core label orders");
  compare->add_option("FILE", file)->required();

  auto* gen = app.add_subcommand("gen", "Write a generated lattice as JSON");
  gen->add_option("--family", family, "fig1, a2, ex424, ex426, chain, boolean, weak_sym, weak_dihedral")->required();
  auto* n_opt = gen->add_option("--n", n, "Family parameter");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const Family fam = parse_family(family);
      if (is_parametric(fam) && n_opt->count() == 0)
        throw LatticeError(ErrorKind::InvalidParameter, "family '" + family + "' needs --n");
      const Lattice L = generate({fam, n});
      std::map<std::string, std::string> meta{{"family", family}};
      if (is_parametric(fam)) meta.emplace("n", std::to_string(n));
      const std::string text = emit_document(to_document(L, meta));
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw LatticeError(ErrorKind::InvalidParameter, "cannot write '" + output + "'");
        f << text;
      }
      return kExitOk;
    }

    const Lattice L = load(file);

    if (*check) {
      out << "elements: " << L.size() << "\n";
      out << "arrows: " << L.arrow_count() << "\n";
      out << "bottom: " << L.name(L.bottom()) << "\n";
      out << "top: " << L.name(L.top()) << "\n";
      const auto sd = is_semidistributive(L);
      if (!sd) {
        out << "semidistributive: no (" << describe(L, *sd.witness) << ")\n";
        return kExitNotSemidistributive;
      }
      out << "semidistributive: yes\n";
      const auto lab = full_labeling(L);
      out << "jirr: " << format_set(L, lab.jirr()) << "\n";
      out << "mirr: " << format_set(L, lab.mirr()) << "\n";
      out << "kappa:\n";
      lab.jirr().for_each([&](std::size_t j) {
        out << "  " << L.name(ElementId{j}) << " -> " << L.name(lab.kappa(ElementId{j})) << "\n";
      });
      return kExitOk;
    }

    const auto lab = full_labeling(L);

    if (*labels) {
      if (dot) {
        std::optional<Interval> hl;
        if (!lower.empty() || !upper.empty()) {
          hl = Interval{L.id(lower.empty() ? L.name(L.bottom()) : lower), L.id(upper.empty() ? L.name(L.top()) : upper)};
          if (!L.is_interval(*hl)) throw LatticeError(ErrorKind::InvalidInterval, "lower is not below upper");
        }
        out << emit_dot(L, &lab, hl);
      } else {
        for (std::size_t k = 0; k < lab.arrows().size(); ++k) {
          const auto& a = lab.arrows()[k];
          out << L.name(a.upper) << " -> " << L.name(a.lower) << "  gamma=" << L.name(lab.gammas()[k])
              << "  mu=" << L.name(lab.mus()[k]) << "\n";
        }
      }
      return kExitOk;
    }

    if (*jl) {
      const Interval iv{L.id(lower), L.id(upper)};
      out << format_set(L, scan ? jlabel_scan(L, lab, iv) : jlabel(L, lab, iv)) << "\n";
      return kExitOk;
    }

    if (*posets) {
      const auto poset = derived_poset(L, lab, parse_interval_kind(kind));
      out << (format == "dot" ? poset_dot(L, poset) : poset_json(L, poset));
      return kExitOk;
    }

    if (*cjr_cmd) {
      auto line = [&](ElementId x) { out << L.name(x) << ": " << format_set(L, cjr(L, lab, x).joinands) << "\n"; };
      if (!element.empty()) {
        line(L.id(element));
      } else {
        for (std::size_t i = 0; i < L.size(); ++i) line(ElementId{i});
      }
      return kExitOk;
    }

    if (*orders) {
      const auto order = order_poset(L, lab, parse_order_kind(kind));
      out << (format == "dot" ? order_dot(L, order) : order_json(L, order));
      return kExitOk;
    }

    if (*compare) {
      const auto same = orders_coincide(L, lab);
      const auto suff = coincide_sufficient(L, lab);
      if (same.coincide) {
        out << "orders coincide";
      } else {
        out << "orders differ; witness (" << L.name(same.witness->first) << ", " << L.name(same.witness->second)
            << ")";
      }
      if (suff.holds) {
        out << "; sufficient condition holds\n";
      } else {
        out << "; sufficient condition fails at " << L.name(*suff.failing) << "\n";
      }
      return kExitOk;
    }
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace latkit
